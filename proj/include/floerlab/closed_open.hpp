#pragma once

// The closed-open map from the PFH complex to the HF complex in the Morse
// model, the unit, the class of the cycle c, the cobordism identity and the
// spectral comparison.
//
// Targets of the map are found by enumeration: for a top orbit set alpha_I and
// every chord y and class Z_hor + m[Sigma] + sum c_i [B_i], keep the candidates
// with index 0, energy 0 and nonnegative intersection numbers, and then those
// realized by horizontal sections (one orbit of alpha_I per link component,
// sitting at the chord's endpoint).

#include "floerlab/complex.hpp"
#include "floerlab/index.hpp"
#include "floerlab/morse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace floerlab {

struct CoCandidate {
    int source_base = 0;  // top orbit set
    int chord = 0;
    long m = 0;
    std::vector<long> c;
    IndexEnergy index_energy;
    bool positive = false;
    bool realized = false;
};

struct ClosedOpenEntry {
    std::size_t source = 0;  // materialized PFH index
    std::size_t target = 0;  // materialized HF index
    RelClass curve_class;    // the CO class Z # Z_0 # A
    IndexEnergy index_energy;
};

struct ClosedOpenMap {
    PfhComplex source;
    HfComplex target;
    RelClass reference;  // Z_0
    std::vector<ClosedOpenEntry> entries;
    std::vector<CoCandidate> survivors;  // candidates passing every filter
    std::size_t candidates_examined = 0;
    // The homotopy correction K o d' of the zig-zag; empty in the Morse model.
    std::vector<std::pair<std::size_t, std::size_t>> correction;

    Chain apply(const Chain& chain) const;
};

/// The horizontal-section class: the CO anchor of energy 0.
RelClass horizontal_class(const SurfaceLinkModel& model);

/// Builds the map over the PFH window; the HF target window is scaled by k+1
/// so that every image lies inside it. Throws ValidationError with the
/// offending generator if the map fails to commute with the differentials,
/// ModelError if `reference` is not a CO class whose energy is a multiple of
/// 1/(k+1).
ClosedOpenMap build_closed_open(const SurfaceLinkModel& model, const MorseHamiltonian& h, Window window = {},
                                std::optional<RelClass> reference = std::nullopt);

/// Same, reusing an already built PFH complex.
ClosedOpenMap build_closed_open(const SurfaceLinkModel& model, const MorseHamiltonian& h, const PfhComplex& pfh,
                                std::optional<RelClass> reference = std::nullopt);

/// Phi d + d Phi over every materialized generator; returns the first failing
/// source generator's label, or nothing.
std::optional<std::string> chain_map_defect(const ClosedOpenMap& map);

/// (y_+, A_e) at T^0 with the trivial capping.
FloerGenerator unit_generator(const HfComplex& hf);
Chain unit_chain(const HfComplex& hf, long power = 0);

struct SigmaClass {
    Chain cycle;  // c = sum_I (alpha_I, Z_I)
    bool nonzero = false;
    Chain image;  // Phi(c)
    bool image_is_unit = false;
};

SigmaClass sigma_class(const ClosedOpenMap& map);

/// The map induced by the cylinder cobordism on the (alpha_I, Z_I)
/// sublattice, with its homotopy slot.
struct CobordismMap {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    std::vector<std::pair<std::size_t, std::size_t>> homotopy;  // K; empty here

    Chain apply(const Chain& chain) const;
};

/// Each (alpha_I, Z_I) is sent to the unique candidate (beta, M) with Morse
/// index 0 and energy 0; throws ValidationError if that is not unique.
CobordismMap cobordism_identity(const PfhComplex& pfh, const MorseHamiltonian& h, const SurfaceLinkModel& model);
/// The map in the opposite direction composed after `forward`.
CobordismMap compose(const CobordismMap& second, const CobordismMap& first);

/// H(alpha_I) - H(alpha_-) + M from the critical values.
Rational cobordism_energy(const MorseOrbitSet& top, const MorseOrbitSet& bottom, long m, const MorseHamiltonian& h);
/// The same energy read off the cappings of the PFH complex.
Rational cobordism_energy_from_cappings(const PfhComplex& pfh, int top_base, int bottom_base, long m);

struct SpectralRow {
    int genus = 0;
    int k = 0;
    int d = 0;
    Rational epsilon;
    std::string basepoint;
    Rational c_hf;
    Rational c_pfh;
    Rational integral;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

/// The comparison from prebuilt complexes: `cycle` represents sigma in
/// `pfh`, `unit` is the unit generator of `hf`, and `integral` is the integral
/// of H at the base point. Only the numeric fields of the row are filled.
SpectralRow spectral_compare(const FilteredComplex& pfh, const Chain& cycle, const FilteredComplex& hf,
                             std::size_t unit, const Rational& integral, const Rational& pfh_shift = 0);

/// c_hf of the unit at base point x against c_pfh of sigma (reference moved
/// along x, plus `pfh_shift`) plus the integral of H at x.
SpectralRow spectral_compare(const SurfaceLinkModel& model, const MorseHamiltonian& h, const PfhComplex& pfh,
                             const HfComplex& hf, const ReebChordTuple& basepoint, const Rational& pfh_shift = 0);
SpectralRow spectral_compare(const SurfaceLinkModel& model, const MorseHamiltonian& h,
                             const ReebChordTuple& basepoint, const Rational& pfh_shift = 0);

}  // namespace floerlab
