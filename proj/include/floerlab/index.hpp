#pragma once

// Index formulas: Conley-Zehnder conventions, ECH index shifts under changes of
// relative class, Fredholm indices and the closed forms of the Morse model.
//
// CZ convention: for an elliptic orbit with rotation theta, CZ(gamma^p) =
// 2 floor(p theta) + 1; positive hyperbolic orbits have CZ 0 for every
// iterate and negative hyperbolic orbits have CZ(gamma^p) = p. Only index
// differences enter the formulas below, and the same convention is applied to
// both ends of every difference.

#include "floerlab/lattice.hpp"
#include "floerlab/rational.hpp"

#include <vector>

namespace floerlab {

enum class OrbitKind { elliptic, positive_hyperbolic, negative_hyperbolic };

struct OrbitData {
    OrbitKind kind = OrbitKind::elliptic;
    Rational rotation;  // elliptic only; kept in [0,1)
    int degree = 1;
    int multiplicity = 1;

    /// Normalizes the rotation into [0,1).
    static OrbitData elliptic(const Rational& theta, int degree = 1, int multiplicity = 1);
    static OrbitData hyperbolic(bool positive, int degree = 1, int multiplicity = 1);

    bool hyperbolic() const { return kind != OrbitKind::elliptic; }
    /// Hyperbolic orbits may only appear with multiplicity one in a generator.
    bool admissible_in_generator() const { return !hyperbolic() || multiplicity == 1; }
};

enum class EllipticClass { d_positive, d_negative, neither };

/// theta mod 1 in (0, q/d) is d-positive, in (1 - q/d, 1) is d-negative.
/// Throws ModelError if q > d.
EllipticClass classify_elliptic(const Rational& theta, int q, int d);

int cz_total(const OrbitData& orbit, int p);
/// Sum of cz_total over the iterates 1..multiplicity.
long cz_sum(const OrbitData& orbit);

/// I_base + sum(2c_i + 2c'_i) + 2k sum(d_i + d'_i) + 2m(k+1).
long ech_index_shift(long base_index, const ClassDiff& diff, int k);

struct MonotonicityGap {
    long index_gap = 0;  // I(A) - I(A')
    Rational energy_gap;  // area(A) - area(A')
    bool consistent = false;
};

/// index_gap == 2(k+1) * energy_gap, with both sides computed independently
/// (index via ech_index_shift, area via lattice energy).
MonotonicityGap monotonicity_gap(const RelClass& a, const RelClass& a_prime, const SurfaceLinkModel& model);

/// One factor of a Morse orbit set: a constant orbit at a critical point.
struct MorseOrbitFactor {
    int morse_index = 2;
    bool circle_max = false;
    int multiplicity = 1;
};

/// 2d - h(bottom) - 2 e_+(bottom) + 2M(k+1), where h counts hyperbolic (index 1)
/// factors and e_+ the total multiplicity at circle maxima. `top` must consist
/// of circle maxima only. Throws ModelError on non-Morse data.
long pfh_morse_index(const std::vector<MorseOrbitFactor>& top, const std::vector<MorseOrbitFactor>& bottom, long M,
                     int k, int d);

struct IndexEnergy {
    long index = 0;
    Rational energy;
};

/// Closed-open class from a top generator to a chord with n_y minus entries:
/// I = n_y + 2m(k+1) + 2c, E = H_top - H_y + m + c/(k+1).
IndexEnergy co_index_energy(int n_y, long m, long c, int k, const Rational& h_top, const Rational& h_y);

long hf_fredholm(long chi_F, int d, long c1, long maslov);
long pfh_fredholm(long chi_C, long c1, long cz_plus, long cz_minus);

struct DefectCheck {
    bool identity = false;  // I == ind + 2 delta
    bool parity = false;    // I == ind mod 2
};

/// Throws ModelError if delta < 0.
DefectCheck ech_vs_fredholm_defect(long ech_index, long fredholm_index, long delta);

}  // namespace floerlab
