#pragma once

// Surface, admissible link and Morse Hamiltonian data for the desk-scale model.
//
// The surface has genus g. The link has k contractible circles, each bounding
// a disk region, plus g meridians (one per handle), so d = k + g components.
// The complement of the disks is one more region; all k + 1 regions carry
// area 1/(k+1) and the total area is 1.

#include "floerlab/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace floerlab {

enum class CircleKind { contractible, meridian };

struct Region {
    int id = 0;
    Rational area;
    bool is_disk = false;  // false for the complementary region B_{k+1}

    bool operator==(const Region&) const = default;
};

struct LinkCircle {
    int id = 0;
    CircleKind kind = CircleKind::contractible;

    bool operator==(const LinkCircle&) const = default;
};

/// Whether build_link_model enforces the running assumption k > 1.
/// `single_circle_allowed` admits k = 1; only the HF rank-law sweep uses it.
enum class Admissibility { strict, single_circle_allowed };

struct SurfaceLinkModel {
    int genus = 0;
    int contractible_count = 0;  // k
    int meridian_count = 0;      // equals genus
    int d = 0;                   // k + g
    std::vector<Region> regions;
    std::vector<LinkCircle> circles;
    std::map<int, std::vector<int>> region_adjacency;  // circle id -> regions it bounds

    int k() const { return contractible_count; }
    int outer_region() const { return contractible_count; }
    Rational region_area() const { return make_rational(1, contractible_count + 1); }
    Rational total_area() const;

    bool operator==(const SurfaceLinkModel&) const = default;
};

/// Throws ModelError for k < 2 (or k < 1 when relaxed) and for negative genus.
SurfaceLinkModel build_link_model(int genus, int k, Admissibility mode = Admissibility::strict);

/// Re-checks every structural invariant; throws ModelError on the first violation.
void validate(const SurfaceLinkModel& model);

enum class CriticalRole { circle_max, circle_min, interior };

std::string to_string(CriticalRole role);
CriticalRole parse_critical_role(const std::string& text);

struct CriticalPoint {
    int id = 0;
    std::string name;
    int morse_index = 0;
    Rational value;                // already scaled: epsilon * f
    std::optional<int> on_circle;  // link component, for circle_max / circle_min
    CriticalRole role = CriticalRole::interior;

    bool hyperbolic() const { return morse_index == 1; }
    bool operator==(const CriticalPoint&) const = default;
};

/// A family gamma_{r0,theta0} of periodic orbits near a local minimum, with
/// rotation p/q in lowest terms and period q > d.
struct LargePeriodFamily {
    int minimum_id = 0;
    long rotation_numerator = 1;
    long period = 1;

    bool operator==(const LargePeriodFamily&) const = default;
};

struct MorseHamiltonian {
    Rational epsilon;
    std::string profile_name;
    std::vector<CriticalPoint> critical_points;
    std::map<std::pair<int, int>, int> flow_line_counts;  // (source, sink) -> number of gradient lines
    bool modified = false;
    std::vector<LargePeriodFamily> large_period_orbits;

    const CriticalPoint& point(int id) const;
    int flow_count_mod2(int source, int sink) const;
    /// Circle maximum y_i^+ / circle minimum y_i^- of component i.
    int circle_max(int circle) const;
    int circle_min(int circle) const;
    std::vector<int> maxima() const;

    bool operator==(const MorseHamiltonian&) const = default;
};

/// Critical-point graph in unscaled units (f takes the value 1 at every circle maximum).
struct ProfilePoint {
    std::string name;
    int morse_index = 0;
    Rational f_value;
    std::optional<int> circle;
    CriticalRole role = CriticalRole::interior;
};

struct ProfileFlow {
    int from = 0;  // index into points
    int to = 0;
    int count = 1;
};

struct MorseProfile {
    std::string name;
    std::vector<ProfilePoint> points;
    std::vector<ProfileFlow> flows;
};

/// The chain-of-disks picture: a maximum and an index-1 minimum on every link
/// component, one saddle between consecutive maxima, one extra saddle per
/// handle, a minimum inside each disk and one in the complementary region.
MorseProfile standard_profile(const SurfaceLinkModel& model);

/// Scales the profile by epsilon and validates it against the model.
/// Throws ModelError if 0 < epsilon < 1 fails or the profile is inconsistent
/// (a circle without max or min, wrong maxima, bad flows, Euler characteristic,
/// Morse differential not squaring to zero).
MorseHamiltonian build_morse_hamiltonian(const SurfaceLinkModel& model, const Rational& epsilon,
                                         const MorseProfile& profile);

/// The perturbed Hamiltonian: same critical data, plus one large-period orbit
/// family near every local minimum with period d + 1.
MorseHamiltonian modify_for_large_period(const MorseHamiltonian& h, const SurfaceLinkModel& model);

}  // namespace floerlab
