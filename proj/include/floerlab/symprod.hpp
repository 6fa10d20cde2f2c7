#pragma once

// Index comparison between a d-multisection u and its tautological section
// s_u of the symmetric product bundle, and a numeric contour oracle for the
// winding of the discriminant around branch points and double points.
//
// Everything except the oracle and the Jacobian check is integer arithmetic.

#include <complex>
#include <cstdint>
#include <vector>

namespace floerlab {

struct BranchedCoverData {
    int d = 1;
    long chi_F = 1;
    std::vector<int> branch_degrees;  // each >= 2
    long double_points = 0;           // signed count delta
    long c1_u = 0;
    long maslov_u = 0;

    /// b = sum (deg - 1).
    long branching() const;
};

/// chi(F) = d - b, i.e. e(F) = d e(D) - b with e(F) = chi(F) - d/2, e(D) = 1/2.
bool riemann_hurwitz_check(const BranchedCoverData& data);

/// 2 c1(u) + b + 2 delta, twice the relative Chern number of s_u.
long chern_shift(const BranchedCoverData& data);

struct IndexComparison {
    long lhs = 0;  // ind s_u = chern_shift + mu
    long rhs = 0;  // ind u + 2 delta
    bool equal = false;
};

/// Throws ModelError for Riemann-Hurwitz-inconsistent data or branch degrees < 2.
IndexComparison index_compare(const BranchedCoverData& data);

enum class LocalKind { branch_point, double_point };

/// Local holomorphic data near a special point of the multisection.
/// branch_point: the d = m sheets are x^m = w, with second coordinate
/// f(x) = coefficient * x; double_point: two sheets z = a w and z = b w
/// (`conjugate` replaces a w by a conj(w), a negative crossing when |a| > |b|).
struct LocalModel {
    LocalKind kind = LocalKind::branch_point;
    int m = 2;
    std::complex<double> coefficient{1.0, 0.0};
    std::complex<double> a{1.0, 0.0};
    std::complex<double> b{-1.0, 0.0};
    bool conjugate = false;

    static LocalModel branch(int m, std::complex<double> coefficient = {1.0, 0.0});
    static LocalModel crossing(std::complex<double> a, std::complex<double> b, bool negative = false);
};

/// Delta^2(w) for the local model: the squared Vandermonde product of the
/// sheets' second coordinates.
std::complex<double> discriminant_squared(const LocalModel& local, std::complex<double> w);

struct WindingResult {
    double winding = 0.0;
    double radius = 0.0;
    int samples = 0;
    int resamples = 0;
};

/// Sums principal-value argument increments of Delta^2 around |w| = radius.
/// Requires samples >= 256. If Delta^2 vanishes on the contour the radius is
/// halved (up to 8 times) before giving up with ModelError.
WindingResult discriminant_winding_oracle(const LocalModel& local, int samples = 4096, double radius = 1e-2);

/// |det J(sigma_1..sigma_d)(z) - prod_{i<j}(z_i - z_j)| / |prod| with the
/// Jacobian taken by central differences of the elementary symmetric functions.
/// The sign convention is the one making the two agree.
double symmetric_jacobian_error(const std::vector<std::complex<double>>& z);

/// Elementary symmetric functions sigma_1..sigma_d (sigma_0 = 1 omitted).
std::vector<std::complex<double>> elementary_symmetric(const std::vector<std::complex<double>>& z);

}  // namespace floerlab
