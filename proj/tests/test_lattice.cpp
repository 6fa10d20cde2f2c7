#include "floerlab/error.hpp"
#include "floerlab/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace floerlab;

namespace {

RelClass hf(int k) { return RelClass::zero(ClassContext::HF, k, "A0"); }

}  // namespace

TEST_CASE("class_diff of basis elements")
{
    const RelClass a = hf(2);
    RelClass b1 = a;
    b1.add_disk(0);
    const ClassDiff d1 = class_diff(b1, a);
    CHECK(d1.c == std::vector<long>{1, 0});
    CHECK(d1.c_phi == std::vector<long>{0, 0});
    CHECK(d1.m == 0);

    RelClass sigma = a;
    sigma.add_sigma();
    const ClassDiff ds = class_diff(sigma, a);
    CHECK(ds == [] {
        ClassDiff z = ClassDiff::zero(2);
        z.m = 1;
        return z;
    }());

    RelClass all_disks = a;
    for (int i = 0; i <= 2; ++i) all_disks.add_disk(i);
    CHECK(class_diff(all_disks, a) == ds);

    RelClass all_images = a;
    for (int i = 0; i <= 2; ++i) all_images.add_phi_disk(i);
    CHECK(class_diff(all_images, a) == ds);
}

TEST_CASE("complements reduce to Sigma minus the disk")
{
    RelClass a = hf(3);
    a.add_disk_complement(1);
    RelClass b = hf(3);
    b.add_sigma().add_disk(1, -1);
    CHECK(class_diff(a, hf(3)) == class_diff(b, hf(3)));
    CHECK(energy(a) == make_rational(3, 4));
}

TEST_CASE("class_diff rejects mismatches")
{
    CHECK_THROWS_AS(class_diff(hf(2), RelClass::zero(ClassContext::PFH, 2, "A0")), ModelError);
    CHECK_THROWS_AS(class_diff(hf(2), hf(3)), ModelError);
    CHECK_THROWS_AS(class_diff(hf(2), RelClass::zero(ClassContext::HF, 2, "other")), ModelError);
}

TEST_CASE("contexts restrict the available generators")
{
    RelClass p = RelClass::zero(ClassContext::PFH, 2, "g0");
    CHECK_THROWS_AS(p.add_disk(0), ModelError);
    CHECK_NOTHROW(p.add_sigma());
    RelClass c = RelClass::zero(ClassContext::CO, 2, "Z");
    CHECK_NOTHROW(c.add_disk(0));
    CHECK_THROWS_AS(c.add_phi_disk(0), ModelError);
    RelClass bad = hf(2);
    bad.context = ClassContext::PFH;
    bad.coeff_B[0] = 1;
    CHECK_THROWS_AS(check_context(bad), ModelError);
}

TEST_CASE("intersection numbers")
{
    const auto model = build_link_model(0, 2);
    const RegionIncidence zero = intersection_numbers(hf(2), model);
    for (long n : zero.all()) CHECK(n == 0);

    RelClass b1 = hf(2);
    b1.add_disk(0);
    const RegionIncidence n1 = intersection_numbers(b1, model);
    CHECK(n1.main == std::vector<long>{1, 0, 0});
    // The thin bigon B_1 \ phi_H(B_1) also lies inside B_1.
    CHECK(n1.bigons == std::vector<long>{1, 0, 0, 0});

    for (int g = 0; g <= 2; ++g)
        for (int k = 2; k <= 4; ++k) {
            const auto m = build_link_model(g, k);
            RelClass s = hf(k);
            s.add_sigma();
            const auto all = intersection_numbers(s, m).all();
            CHECK(all.size() == static_cast<std::size_t>(k + 1 + 2 * m.d));
            for (long n : all) CHECK(n == 1);
        }
}

TEST_CASE("positivity")
{
    const auto model = build_link_model(0, 2);
    CHECK(is_positive(hf(2), model));
    RelClass neg = hf(2);
    neg.add_disk(0, -1);
    CHECK(!is_positive(neg, model));
    RelClass s = hf(2);
    s.add_sigma().add_disk(0, -1);
    CHECK(is_positive(s, model));
    for (long n : intersection_numbers(s, model).all()) CHECK((n == 0 || n == 1));
}

TEST_CASE("energy examples")
{
    const auto model = build_link_model(0, 2);
    RelClass b1 = hf(2);
    b1.add_disk(0);
    CHECK(energy(b1, model) == Rational(1, 3));
    RelClass s = hf(2);
    s.add_sigma();
    CHECK(energy(s, model) == 1);
    RelClass mix = hf(2);
    mix.add_disk(0, 2).add_sigma();
    CHECK(energy(mix, model) == Rational(5, 3));
    CHECK_THROWS_AS(energy(b1, build_link_model(0, 3)), ModelError);
}

TEST_CASE("energy is affine in the coefficients")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + trial % 3;
        RelClass a = hf(k), b = hf(k), sum = hf(k);
        for (int i = 0; i <= k; ++i) {
            const long x = coef(rng), y = coef(rng), z = coef(rng), w = coef(rng);
            a.add_disk(i, x).add_phi_disk_complement(i, z);
            b.add_phi_disk(i, y).add_disk_complement(i, w);
            sum.add_disk(i, x).add_phi_disk_complement(i, z).add_phi_disk(i, y).add_disk_complement(i, w);
        }
        CHECK(energy(sum) == energy(a) + energy(b));
        CHECK(energy(a.reduced()) == energy(a));
        CHECK(a.reduced().is_reduced());
        CHECK(a.reduced().reduced() == a.reduced());
        CHECK(energy(class_diff(sum, hf(k))) == energy(sum));
    }
}

TEST_CASE("capping equivalence")
{
    RelClass a = hf(2);
    a.add_disk(0);
    RelClass b = hf(2);
    b.add_phi_disk(1);
    CHECK(capping_equivalent(a, b));
    b.add_sigma();
    CHECK(!capping_equivalent(a, b));
    CHECK(!capping_equivalent(a, RelClass::zero(ClassContext::HF, 2, "other", Rational(1, 3))));
}
