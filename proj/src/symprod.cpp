#include "floerlab/symprod.hpp"

#include "floerlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace floerlab {

long BranchedCoverData::branching() const
{
    long b = 0;
    for (int deg : branch_degrees) b += deg - 1;
    return b;
}

bool riemann_hurwitz_check(const BranchedCoverData& data) { return data.chi_F == data.d - data.branching(); }

long chern_shift(const BranchedCoverData& data) { return 2 * data.c1_u + data.branching() + 2 * data.double_points; }

IndexComparison index_compare(const BranchedCoverData& data)
{
    if (data.d < 1) throw ModelError("multisection degree must be positive");
    for (int deg : data.branch_degrees)
        if (deg < 2) throw ModelError("branch degrees must be at least 2");
    if (!riemann_hurwitz_check(data))
        throw ModelError("Riemann-Hurwitz fails: chi(F) = " + std::to_string(data.chi_F) + ", d - b = " +
                         std::to_string(data.d - data.branching()));
    IndexComparison r;
    r.lhs = chern_shift(data) + data.maslov_u;
    const long ind_u = -data.chi_F + data.d + 2 * data.c1_u + data.maslov_u;
    r.rhs = ind_u + 2 * data.double_points;
    r.equal = r.lhs == r.rhs;
    return r;
}

LocalModel LocalModel::branch(int m, std::complex<double> coefficient)
{
    LocalModel l;
    l.kind = LocalKind::branch_point;
    l.m = m;
    l.coefficient = coefficient;
    return l;
}

LocalModel LocalModel::crossing(std::complex<double> a, std::complex<double> b, bool negative)
{
    LocalModel l;
    l.kind = LocalKind::double_point;
    l.a = a;
    l.b = b;
    l.conjugate = negative;
    return l;
}

std::complex<double> discriminant_squared(const LocalModel& local, std::complex<double> w)
{
    if (local.kind == LocalKind::double_point) {
        const std::complex<double> f = local.a * (local.conjugate ? std::conj(w) : w);
        const std::complex<double> g = local.b * w;
        return (f - g) * (f - g);
    }
    if (local.m < 2) throw ModelError("branch degree must be at least 2");
    // Delta^2 is symmetric in the sheets, so any labelling of the roots works.
    const std::complex<double> root = std::pow(w, 1.0 / local.m);
    std::vector<std::complex<double>> sheets;
    for (int j = 0; j < local.m; ++j)
        sheets.push_back(local.coefficient * root * std::polar(1.0, 2.0 * std::numbers::pi * j / local.m));
    std::complex<double> delta = 1.0;
    for (int i = 0; i < local.m; ++i)
        for (int j = i + 1; j < local.m; ++j) delta *= sheets[i] - sheets[j];
    return delta * delta;
}

WindingResult discriminant_winding_oracle(const LocalModel& local, int samples, double radius)
{
    if (samples < 256) throw ModelError("winding oracle needs at least 256 samples");
    if (!(radius > 0)) throw ModelError("contour radius must be positive");
    WindingResult result;
    result.samples = samples;
    for (int attempt = 0; attempt <= 8; ++attempt, radius /= 2) {
        std::vector<std::complex<double>> values(samples);
        double largest = 0.0;
        for (int j = 0; j < samples; ++j) {
            const double t = 2.0 * std::numbers::pi * j / samples;
            values[j] = discriminant_squared(local, std::polar(radius, t));
            largest = std::max(largest, std::abs(values[j]));
        }
        const bool vanishes = largest == 0.0 || std::any_of(values.begin(), values.end(), [&](auto v) {
                                  return std::abs(v) <= 1e-12 * largest;
                              });
        if (vanishes) {
            ++result.resamples;
            continue;
        }
        double total = 0.0;
        for (int j = 0; j < samples; ++j) total += std::arg(values[(j + 1) % samples] / values[j]);
        result.winding = total / (2.0 * std::numbers::pi);
        result.radius = radius;
        return result;
    }
    throw ModelError("discriminant vanishes on every contour: degenerate local model");
}

std::vector<std::complex<double>> elementary_symmetric(const std::vector<std::complex<double>>& z)
{
    // Coefficients of prod (X + z_i).
    std::vector<std::complex<double>> e(z.size() + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * z[i];
    return {e.begin() + 1, e.end()};
}

namespace {

std::complex<double> determinant(std::vector<std::vector<std::complex<double>>> a)
{
    const std::size_t n = a.size();
    std::complex<double> det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::complex<double> factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

}  // namespace

double symmetric_jacobian_error(const std::vector<std::complex<double>>& z)
{
    const std::size_t d = z.size();
    if (d == 0) throw ModelError("empty tuple");
    // Each sigma_k is affine in every single variable, so the central
    // difference is exact up to rounding.
    const double step = 1e-3;
    std::vector<std::vector<std::complex<double>>> jac(d, std::vector<std::complex<double>>(d));
    for (std::size_t j = 0; j < d; ++j) {
        auto plus = z, minus = z;
        plus[j] += step;
        minus[j] -= step;
        const auto sp = elementary_symmetric(plus), sm = elementary_symmetric(minus);
        for (std::size_t k = 0; k < d; ++k) jac[k][j] = (sp[k] - sm[k]) / (2.0 * step);
    }
    std::complex<double> vandermonde = 1.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) vandermonde *= z[i] - z[j];
    if (std::abs(vandermonde) == 0.0) throw ModelError("tuple has repeated entries");
    return std::abs(determinant(jac) - vandermonde) / std::abs(vandermonde);
}

}  // namespace floerlab
