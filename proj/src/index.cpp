#include "floerlab/index.hpp"

#include "floerlab/error.hpp"

#include <numeric>

namespace floerlab {

namespace {

Rational mod_one(const Rational& x) { return x - floor_to_long(x); }

long sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

}  // namespace

OrbitData OrbitData::elliptic(const Rational& theta, int degree, int multiplicity)
{
    OrbitData o;
    o.kind = OrbitKind::elliptic;
    o.rotation = mod_one(theta);
    o.degree = degree;
    o.multiplicity = multiplicity;
    return o;
}

OrbitData OrbitData::hyperbolic(bool positive, int degree, int multiplicity)
{
    OrbitData o;
    o.kind = positive ? OrbitKind::positive_hyperbolic : OrbitKind::negative_hyperbolic;
    o.degree = degree;
    o.multiplicity = multiplicity;
    return o;
}

EllipticClass classify_elliptic(const Rational& theta, int q, int d)
{
    if (d < 1 || q < 1) throw ModelError("classify_elliptic needs q, d >= 1");
    if (q > d) throw ModelError("classify_elliptic: degree q exceeds d");
    const Rational t = mod_one(theta);
    const Rational width = make_rational(q, d);
    if (t > 0 && t < width) return EllipticClass::d_positive;
    if (t > 1 - width && t < 1) return EllipticClass::d_negative;
    return EllipticClass::neither;
}

int cz_total(const OrbitData& orbit, int p)
{
    if (p < 1) throw ModelError("cz_total: iterate must be positive");
    switch (orbit.kind) {
    case OrbitKind::elliptic: return 2 * static_cast<int>(floor_to_long(orbit.rotation * p)) + 1;
    case OrbitKind::positive_hyperbolic: return 0;
    case OrbitKind::negative_hyperbolic: return p;
    }
    return 0;
}

long cz_sum(const OrbitData& orbit)
{
    long s = 0;
    for (int p = 1; p <= orbit.multiplicity; ++p) s += cz_total(orbit, p);
    return s;
}

long ech_index_shift(long base_index, const ClassDiff& diff, int k)
{
    return base_index + 2 * (sum(diff.c) + sum(diff.c_phi)) + 2L * k * (sum(diff.d) + sum(diff.d_phi)) +
           2 * diff.m * (k + 1);
}

MonotonicityGap monotonicity_gap(const RelClass& a, const RelClass& a_prime, const SurfaceLinkModel& model)
{
    const int k = model.k();
    // I(A') = I(A) + shift(A' - A); the base index cancels.
    const ClassDiff forward = class_diff(a_prime, a);
    MonotonicityGap g;
    g.index_gap = -ech_index_shift(0, forward, k);
    g.energy_gap = energy(a, model) - energy(a_prime, model);
    g.consistent = Rational(g.index_gap) == 2 * (k + 1) * g.energy_gap;
    return g;
}

long pfh_morse_index(const std::vector<MorseOrbitFactor>& top, const std::vector<MorseOrbitFactor>& bottom, long M,
                     int k, int d)
{
    auto check = [&](const std::vector<MorseOrbitFactor>& set, const char* which) {
        long total = 0;
        for (const auto& f : set) {
            if (f.morse_index < 0 || f.morse_index > 2) throw ModelError(std::string(which) + ": not a Morse orbit");
            if (f.multiplicity < 1) throw ModelError(std::string(which) + ": multiplicity must be positive");
            if (f.morse_index == 1 && f.multiplicity != 1)
                throw ModelError(std::string(which) + ": hyperbolic orbit with multiplicity > 1");
            if (f.circle_max && f.morse_index != 2) throw ModelError(std::string(which) + ": circle max must be index 2");
            total += f.multiplicity;
        }
        if (total != d) throw ModelError(std::string(which) + ": total multiplicity must equal d");
    };
    check(top, "top");
    check(bottom, "bottom");
    for (const auto& f : top)
        if (!f.circle_max) throw ModelError("top orbit set must consist of circle maxima");

    long h = 0, e_plus = 0;
    for (const auto& f : bottom) {
        if (f.morse_index == 1) h += f.multiplicity;
        if (f.circle_max) e_plus += f.multiplicity;
    }
    return 2L * d - h - 2 * e_plus + 2 * M * (k + 1);
}

IndexEnergy co_index_energy(int n_y, long m, long c, int k, const Rational& h_top, const Rational& h_y)
{
    IndexEnergy r;
    r.index = n_y + 2 * m * (k + 1) + 2 * c;
    r.energy = h_top - h_y + m + make_rational(c, k + 1);
    return r;
}

long hf_fredholm(long chi_F, int d, long c1, long maslov) { return -chi_F + d + 2 * c1 + maslov; }

long pfh_fredholm(long chi_C, long c1, long cz_plus, long cz_minus) { return -chi_C + 2 * c1 + cz_plus - cz_minus; }

DefectCheck ech_vs_fredholm_defect(long ech_index, long fredholm_index, long delta)
{
    if (delta < 0) throw ModelError("delta must be nonnegative");
    DefectCheck r;
    r.identity = ech_index == fredholm_index + 2 * delta;
    r.parity = ((ech_index - fredholm_index) % 2) == 0;
    return r;
}

}  // namespace floerlab
