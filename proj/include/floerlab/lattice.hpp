#pragma once

// Affine lattices of relative homology classes.
//
// A class is stored as an offset from an opaque anchor (a fixed reference class
// for one pair of endpoints) in the basis [B_i], [phi_H(B_i)], [B_i^c],
// [phi_H(B_i^c)], [Sigma]. The reduced form uses
//     sum_{i=1}^{k+1} [B_i] = sum_{i=1}^{k+1} [phi_H(B_i)] = [Sigma]
// to drop B_{k+1} and the complements, leaving k disk coefficients, k image
// disk coefficients and the multiple of [Sigma].

#include "floerlab/geometry.hpp"
#include "floerlab/rational.hpp"

#include <string>
#include <vector>

namespace floerlab {

enum class ClassContext { HF, PFH, CO };

std::string to_string(ClassContext context);
ClassContext parse_class_context(const std::string& text);

struct RelClass {
    ClassContext context = ClassContext::HF;
    int k = 2;
    std::string anchor;
    Rational anchor_energy;  // omega-area of the anchor class itself
    std::vector<long> coeff_B;
    std::vector<long> coeff_phiB;
    std::vector<long> coeff_Bc;
    std::vector<long> coeff_phiBc;
    long coeff_Sigma = 0;

    static RelClass zero(ClassContext context, int k, std::string anchor, Rational anchor_energy = 0);

    // Index i runs over 0..k; i == k is the complementary region B_{k+1}.
    RelClass& add_disk(int i, long times = 1);
    RelClass& add_phi_disk(int i, long times = 1);
    RelClass& add_disk_complement(int i, long times = 1);
    RelClass& add_phi_disk_complement(int i, long times = 1);
    RelClass& add_sigma(long times = 1);

    RelClass reduced() const;
    bool is_reduced() const;

    bool operator==(const RelClass&) const = default;
};

/// Throws ModelError when a class carries coordinates its context forbids.
void check_context(const RelClass& a);

/// Coefficients of A' - A. Produced by class_diff in reduced form (d, d_phi
/// zero), but callers may also assemble unreduced records by hand.
struct ClassDiff {
    std::vector<long> c;      // [B_i]
    std::vector<long> c_phi;  // [phi_H(B_i)]
    std::vector<long> d;      // [B_i^c]
    std::vector<long> d_phi;  // [phi_H(B_i^c)]
    long m = 0;               // [Sigma]

    static ClassDiff zero(int k);
    int k() const { return static_cast<int>(c.size()); }
    ClassDiff operator+(const ClassDiff& other) const;
    bool operator==(const ClassDiff&) const = default;
};

/// Throws ModelError on mismatched context, k or anchor.
ClassDiff class_diff(const RelClass& a_prime, const RelClass& a);

/// omega-area of the difference record.
Rational energy(const ClassDiff& diff);

/// omega-area of the class, anchor included.
Rational energy(const RelClass& a);
Rational energy(const RelClass& a, const SurfaceLinkModel& model);

/// Cappings are equivalent iff they share an anchor and have equal area.
bool capping_equivalent(const RelClass& a, const RelClass& b);

/// Intersection numbers n_j with R x [0,1] x z_j, one base point z_j per
/// component of Sigma - Lambda - phi_H(Lambda). `main` lists the k+1 cores
/// of the regions B_i (B_i ∩ phi_H(B_i)); `bigons` lists the two thin bigons
/// between each circle and its image: for a contractible circle i, first the
/// one in B_i \ phi_H(B_i), then the one in phi_H(B_i) \ B_i; for a meridian,
/// both lie in the complementary region.
struct RegionIncidence {
    std::vector<long> main;
    std::vector<long> bigons;

    std::vector<long> all() const;
    bool operator==(const RegionIncidence&) const = default;
};

RegionIncidence intersection_numbers(const RelClass& a, const SurfaceLinkModel& model);
bool is_positive(const RelClass& a, const SurfaceLinkModel& model);

}  // namespace floerlab
