#include "floerlab/error.hpp"
#include "floerlab/symprod.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

using namespace floerlab;

namespace {

// All multisets of branch degrees (each >= 2) with sum(deg - 1) = b.
void branch_partitions(long b, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (b == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min<long>(b, max_part); part >= 1; --part) {
        cur.push_back(part + 1);
        branch_partitions(b - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("Riemann-Hurwitz")
{
    CHECK(riemann_hurwitz_check({1, 1, {}, 0, 0, 0}));
    CHECK(riemann_hurwitz_check({2, 1, {2}, 0, 0, 0}));
    CHECK(riemann_hurwitz_check({3, 1, {3}, 0, 0, 0}));
    CHECK(!riemann_hurwitz_check({2, 2, {2}, 0, 0, 0}));
}

TEST_CASE("Chern shift")
{
    CHECK(chern_shift({1, 1, {}, 0, 0, 0}) == 0);
    CHECK(chern_shift({2, 1, {2}, 0, 0, 0}) == 1);
    CHECK(chern_shift({2, 2, {}, 1, 0, 0}) == 2);
    CHECK(chern_shift({2, 2, {}, 0, 3, 0}) == 6);
}

TEST_CASE("index comparison examples")
{
    const auto triv = index_compare({1, 1, {}, 0, 0, 0});
    CHECK(triv.lhs == 0);
    CHECK(triv.rhs == 0);
    CHECK(triv.equal);
    const auto simple = index_compare({2, 1, {2}, 0, 0, 0});
    CHECK(simple.lhs == 1);
    CHECK(simple.rhs == 1);
    CHECK(simple.equal);
    CHECK_THROWS_AS(index_compare({2, 2, {2}, 0, 0, 0}), ModelError);
    CHECK_THROWS_AS(index_compare({2, 2, {1}, 0, 0, 0}), ModelError);
}

TEST_CASE("index comparison on the exhaustive grid")
{
    long checked = 0;
    for (int d = 1; d <= 4; ++d)
        for (long b = 0; b <= 4; ++b) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            branch_partitions(b, static_cast<int>(b), cur, parts);
            for (const auto& degrees : parts)
                for (long delta = -3; delta <= 3; ++delta)
                    for (long c1 = -3; c1 <= 3; ++c1)
                        for (long mu = -4; mu <= 4; ++mu) {
                            const BranchedCoverData data{d, d - b, degrees, delta, c1, mu};
                            const auto r = index_compare(data);
                            CHECK(r.equal);
                            CHECK(r.lhs == 2 * c1 + b + 2 * delta + mu);
                            CHECK(r.rhs == -(d - b) + d + 2 * c1 + mu + 2 * delta);
                            BranchedCoverData off = data;
                            off.chi_F += 1;
                            CHECK_THROWS_AS(index_compare(off), ModelError);
                            ++checked;
                        }
        }
    CHECK(checked > 0);
}

TEST_CASE("index comparison on random consistent data")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        BranchedCoverData data;
        data.d = 1 + static_cast<int>(rng() % 12);
        const int nb = static_cast<int>(rng() % 5);
        for (int j = 0; j < nb; ++j) data.branch_degrees.push_back(2 + static_cast<int>(rng() % 5));
        data.chi_F = data.d - data.branching();
        data.double_points = static_cast<long>(rng() % 21) - 10;
        data.c1_u = static_cast<long>(rng() % 21) - 10;
        data.maslov_u = static_cast<long>(rng() % 41) - 20;
        CHECK(index_compare(data).equal);
    }
}

TEST_CASE("discriminant winding around branch points")
{
    for (int m = 2; m <= 5; ++m) {
        const auto r = discriminant_winding_oracle(LocalModel::branch(m));
        CHECK(std::abs(r.winding - (m - 1)) < 1e-6);
        const auto r2 = discriminant_winding_oracle(LocalModel::branch(m, {0.3, -1.7}));
        CHECK(std::abs(r2.winding - (m - 1)) < 1e-6);
    }
}

TEST_CASE("discriminant winding around double points")
{
    const auto pos = discriminant_winding_oracle(LocalModel::crossing({2.0, 0.0}, {1.0, 0.0}));
    CHECK(std::abs(pos.winding - 2.0) < 1e-6);
    const auto neg = discriminant_winding_oracle(LocalModel::crossing({2.0, 0.0}, {1.0, 0.5}, true));
    CHECK(std::abs(neg.winding + 2.0) < 1e-6);
}

TEST_CASE("winding converges when samples double")
{
    for (const auto& local : {LocalModel::branch(2), LocalModel::branch(4, {1.0, 1.0}),
                              LocalModel::crossing({1.0, 1.0}, {-0.5, 0.0}),
                              LocalModel::crossing({3.0, 0.0}, {1.0, 0.0}, true)}) {
        const double a = discriminant_winding_oracle(local, 1024).winding;
        const double b = discriminant_winding_oracle(local, 2048).winding;
        const double c = discriminant_winding_oracle(local, 4096).winding;
        CHECK(std::abs(a - b) < 1e-8);
        CHECK(std::abs(b - c) < 1e-8);
    }
}

TEST_CASE("degenerate local models are rejected")
{
    CHECK_THROWS_AS(discriminant_winding_oracle(LocalModel::crossing({1.0, 0.0}, {1.0, 0.0})), ModelError);
    CHECK_THROWS_AS(discriminant_winding_oracle(LocalModel::branch(2), 100), ModelError);
    CHECK_THROWS_AS(discriminant_winding_oracle(LocalModel::branch(1)), ModelError);
}

TEST_CASE("Jacobian of the elementary symmetric functions")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 5;
        std::vector<std::complex<double>> z;
        for (int i = 0; i < d; ++i) z.emplace_back(u(rng), u(rng));
        CHECK(symmetric_jacobian_error(z) < 1e-9);
    }
    CHECK_THROWS_AS(symmetric_jacobian_error({{1.0, 0.0}, {1.0, 0.0}}), ModelError);
    const auto s = elementary_symmetric({{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}});
    CHECK(std::abs(s[0] - 6.0) < 1e-12);
    CHECK(std::abs(s[1] - 11.0) < 1e-12);
    CHECK(std::abs(s[2] - 6.0) < 1e-12);
}
