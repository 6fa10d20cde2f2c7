#pragma once

// Generators and differentials of the PFH and HF complexes for the Morse
// Hamiltonian H_eps.
//
// PFH generators are degree-d multisets of critical points (constant orbits),
// with saddles used at most once. The differential replaces one orbit by the
// end of a gradient line leaving it, one index lower; the other orbits stay as
// trivial cylinders. HF generators pick the maximum or the minimum on every
// link component; the two gradient arcs of a circle cancel, so the HF
// differential vanishes.

#include "floerlab/complex.hpp"
#include "floerlab/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace floerlab {

struct MorseOrbitSet {
    std::vector<std::pair<int, int>> factors;  // (critical point id, multiplicity), sorted by id

    int degree() const;
    int multiplicity(int point) const;
    std::string label(const MorseHamiltonian& h) const;

    auto operator<=>(const MorseOrbitSet&) const = default;
};

/// Sum of H over the orbit set, counted with multiplicity.
Rational hamiltonian_value(const MorseOrbitSet& alpha, const MorseHamiltonian& h);

/// Whether alpha consists of circle maxima only (an alpha_I).
bool is_top(const MorseOrbitSet& alpha, const MorseHamiltonian& h);

/// alpha_+: every circle maximum once.
MorseOrbitSet alpha_plus(const MorseHamiltonian& h);

/// All degree-d orbit sets with hyperbolic multiplicities <= 1, sorted.
std::vector<MorseOrbitSet> enumerate_pfh_generators(const SurfaceLinkModel& model, const MorseHamiltonian& h);

/// Entries between positions of `generators`; each entry has shift 0.
std::vector<DifferentialEntry> pfh_differential(const MorseHamiltonian& h, const std::vector<MorseOrbitSet>& generators);

struct PfhComplex {
    std::vector<MorseOrbitSet> orbit_sets;  // base generator i is orbit_sets[i]
    FilteredComplex complex;
    MorseOrbitSet reference;  // gamma_0
    Rational reference_value;
    std::vector<int> top_generators;
    int alpha_plus_index = -1;

    int find(const MorseOrbitSet& alpha) const;
};

/// The PFH complex with reference orbit set alpha_+ (so every alpha_I has
/// action 0 at T^0); one period is a copy of [Sigma], shifting action by 1.
PfhComplex build_pfh_complex(const SurfaceLinkModel& model, const MorseHamiltonian& h, Window window = {});

/// The chain c = sum_I (alpha_I, Z_I) at T^power. Throws ValidationError
/// listing the surviving boundary terms if dc != 0.
Chain build_cycle_c(const PfhComplex& pfh, long power = 0);

struct ReebChordTuple {
    std::vector<bool> plus;  // per link component: y_i^+ or y_i^-

    int size() const { return static_cast<int>(plus.size()); }
    int minus_count() const;
    std::string label() const;
    std::vector<int> points(const MorseHamiltonian& h) const;

    auto operator<=>(const ReebChordTuple&) const = default;
};

ReebChordTuple parse_chord(const std::string& signs);

/// Sum of H over the chord's points (the Hamiltonian term of the HF action).
Rational hamiltonian_value(const ReebChordTuple& y, const MorseHamiltonian& h);

/// All 2^d tuples, the all-plus tuple first.
std::vector<ReebChordTuple> enumerate_hf_generators(const SurfaceLinkModel& model);

/// Strips change the chord on one component from the maximum to the minimum;
/// their count is the number of gradient arcs on that circle mod 2.
std::vector<DifferentialEntry> hf_differential(const MorseHamiltonian& h, const std::vector<ReebChordTuple>& chords);

struct HfComplex {
    std::vector<ReebChordTuple> chords;
    FilteredComplex complex;
    int plus_index = -1;

    int find(const ReebChordTuple& y) const;
};

/// HF complex with trivial cappings at T^0; T acts by -[B_1], raising action
/// by 1/(k+1). Actions are -area(A) + sum_i H(y_i).
HfComplex build_hf_complex(const SurfaceLinkModel& model, const MorseHamiltonian& h, Window window = {});

}  // namespace floerlab
