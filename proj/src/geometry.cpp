#include "floerlab/geometry.hpp"

#include "floerlab/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace floerlab {

Rational SurfaceLinkModel::total_area() const
{
    Rational sum = 0;
    for (const auto& r : regions) sum += r.area;
    return sum;
}

SurfaceLinkModel build_link_model(int genus, int k, Admissibility mode)
{
    if (genus < 0) throw ModelError("genus must be nonnegative, got " + std::to_string(genus));
    const int min_k = mode == Admissibility::strict ? 2 : 1;
    if (k < min_k) throw ModelError("k>1 required (got k=" + std::to_string(k) + ")");

    SurfaceLinkModel m;
    m.genus = genus;
    m.contractible_count = k;
    m.meridian_count = genus;
    m.d = k + genus;
    for (int i = 0; i <= k; ++i) m.regions.push_back({i, make_rational(1, k + 1), i < k});
    for (int i = 0; i < m.d; ++i) {
        const bool disk = i < k;
        m.circles.push_back({i, disk ? CircleKind::contractible : CircleKind::meridian});
        m.region_adjacency[i] = disk ? std::vector<int>{i, k} : std::vector<int>{k};
    }
    validate(m);
    return m;
}

void validate(const SurfaceLinkModel& m)
{
    const int k = m.contractible_count;
    if (m.genus < 0) throw ModelError("negative genus");
    if (k < 1) throw ModelError("k>1 required");
    if (m.meridian_count != m.genus) throw ModelError("meridian count must equal genus");
    if (m.d != k + m.genus) throw ModelError("d must equal k + g");
    if (static_cast<int>(m.regions.size()) != k + 1) throw ModelError("expected exactly k+1 regions");
    for (const auto& r : m.regions)
        if (r.area != make_rational(1, k + 1)) throw ModelError("every region must have area 1/(k+1)");
    if (m.total_area() != 1) throw ModelError("region areas must sum to 1");
    if (static_cast<int>(m.circles.size()) != m.d) throw ModelError("expected d link components");
    for (int i = 0; i < k; ++i) {
        auto it = m.region_adjacency.find(i);
        if (it == m.region_adjacency.end()) throw ModelError("circle without adjacency");
        const int disks = static_cast<int>(std::count_if(it->second.begin(), it->second.end(), [&](int r) {
            return r >= 0 && r < k && m.regions[r].is_disk;
        }));
        if (disks != 1) throw ModelError("each contractible circle bounds exactly one disk");
    }
}

std::string to_string(CriticalRole role)
{
    switch (role) {
    case CriticalRole::circle_max: return "circle_max";
    case CriticalRole::circle_min: return "circle_min";
    case CriticalRole::interior: return "interior";
    }
    return "interior";
}

CriticalRole parse_critical_role(const std::string& text)
{
    if (text == "circle_max") return CriticalRole::circle_max;
    if (text == "circle_min") return CriticalRole::circle_min;
    if (text == "interior") return CriticalRole::interior;
    throw ModelError("unknown critical role: " + text);
}

const CriticalPoint& MorseHamiltonian::point(int id) const
{
    if (id < 0 || id >= static_cast<int>(critical_points.size()))
        throw ModelError("critical point id out of range: " + std::to_string(id));
    return critical_points[id];
}

int MorseHamiltonian::flow_count_mod2(int source, int sink) const
{
    auto it = flow_line_counts.find({source, sink});
    return it == flow_line_counts.end() ? 0 : (it->second & 1);
}

int MorseHamiltonian::circle_max(int circle) const
{
    for (const auto& p : critical_points)
        if (p.role == CriticalRole::circle_max && p.on_circle == circle) return p.id;
    throw ModelError("no maximum on circle " + std::to_string(circle));
}

int MorseHamiltonian::circle_min(int circle) const
{
    for (const auto& p : critical_points)
        if (p.role == CriticalRole::circle_min && p.on_circle == circle) return p.id;
    throw ModelError("no minimum on circle " + std::to_string(circle));
}

std::vector<int> MorseHamiltonian::maxima() const
{
    std::vector<int> out;
    for (const auto& p : critical_points)
        if (p.role == CriticalRole::circle_max) out.push_back(p.id);
    std::sort(out.begin(), out.end(), [&](int a, int b) { return *point(a).on_circle < *point(b).on_circle; });
    return out;
}

MorseProfile standard_profile(const SurfaceLinkModel& model)
{
    const int d = model.d;
    const int k = model.k();
    const Rational one = 1, half = make_rational(1, 2), zero = 0;

    MorseProfile p;
    p.name = "standard";
    auto add = [&](std::string name, int index, Rational f, std::optional<int> circle, CriticalRole role) {
        p.points.push_back({std::move(name), index, std::move(f), circle, role});
        return static_cast<int>(p.points.size()) - 1;
    };

    std::vector<int> top(d), bottom(d);
    for (int i = 0; i < d; ++i) top[i] = add("y" + std::to_string(i + 1) + "+", 2, one, i, CriticalRole::circle_max);
    for (int i = 0; i < d; ++i) bottom[i] = add("y" + std::to_string(i + 1) + "-", 1, half, i, CriticalRole::circle_min);
    std::vector<int> bridge(d > 0 ? d - 1 : 0);
    for (int i = 0; i + 1 < d; ++i)
        bridge[i] = add("s" + std::to_string(i + 1) + "_" + std::to_string(i + 2), 1, half, std::nullopt,
                        CriticalRole::interior);
    std::vector<int> handle(model.genus);
    for (int j = 0; j < model.genus; ++j)
        handle[j] = add("u" + std::to_string(j + 1), 1, half, std::nullopt, CriticalRole::interior);
    std::vector<int> disk_min(k);
    for (int i = 0; i < k; ++i) disk_min[i] = add("n" + std::to_string(i + 1), 0, zero, std::nullopt, CriticalRole::interior);
    const int outer_min = add("n0", 0, zero, std::nullopt, CriticalRole::interior);

    auto flow = [&](int a, int b, int count) { p.flows.push_back({a, b, count}); };
    for (int i = 0; i < d; ++i) {
        flow(top[i], bottom[i], 2);  // the two arcs of the circle
        if (i < k) {
            flow(bottom[i], disk_min[i], 1);
            flow(bottom[i], outer_min, 1);
        } else {
            flow(bottom[i], outer_min, 2);  // a meridian does not separate
        }
    }
    for (int i = 0; i + 1 < d; ++i) {
        flow(top[i], bridge[i], 1);
        flow(top[i + 1], bridge[i], 1);
        flow(bridge[i], outer_min, 2);
    }
    for (int j = 0; j < model.genus; ++j) {
        flow(top[k + j], handle[j], 2);
        flow(handle[j], outer_min, 2);
    }
    return p;
}

namespace {

void validate_profile(const SurfaceLinkModel& model, const MorseProfile& profile)
{
    const int n = static_cast<int>(profile.points.size());
    std::vector<int> max_on(model.d, 0), min_on(model.d, 0);
    int index2 = 0;
    int euler = 0;
    for (const auto& pt : profile.points) {
        if (pt.morse_index < 0 || pt.morse_index > 2) throw ModelError("Morse index out of range at " + pt.name);
        euler += (pt.morse_index == 1) ? -1 : 1;
        if (pt.morse_index == 2) {
            ++index2;
            if (pt.role != CriticalRole::circle_max)
                throw ModelError("maximum " + pt.name + " is not a circle maximum");
        }
        if (pt.role == CriticalRole::interior) {
            if (pt.circle) throw ModelError("interior point " + pt.name + " lies on a circle");
            continue;
        }
        if (!pt.circle || *pt.circle < 0 || *pt.circle >= model.d)
            throw ModelError("circle point " + pt.name + " has no valid circle");
        if (pt.role == CriticalRole::circle_max) {
            if (pt.morse_index != 2 || pt.f_value != 1)
                throw ModelError("circle maximum " + pt.name + " must be index 2 with f = 1");
            ++max_on[*pt.circle];
        } else {
            if (pt.morse_index != 1) throw ModelError("circle minimum " + pt.name + " must be index 1");
            ++min_on[*pt.circle];
        }
    }
    for (int c = 0; c < model.d; ++c)
        if (max_on[c] != 1 || min_on[c] != 1)
            throw ModelError("circle " + std::to_string(c) + " needs exactly one maximum and one minimum");
    if (index2 != model.d) throw ModelError("expected exactly d maxima");
    if (euler != 2 - 2 * model.genus)
        throw ModelError("critical points violate Euler characteristic 2-2g");

    std::map<std::pair<int, int>, int> counts;
    for (const auto& f : profile.flows) {
        if (f.from < 0 || f.from >= n || f.to < 0 || f.to >= n) throw ModelError("flow endpoint out of range");
        const auto& a = profile.points[f.from];
        const auto& b = profile.points[f.to];
        if (f.count < 0) throw ModelError("negative flow count");
        if (a.morse_index != b.morse_index + 1)
            throw ModelError("flow " + a.name + "->" + b.name + " must drop Morse index by one");
        if (!(a.f_value > b.f_value)) throw ModelError("flow " + a.name + "->" + b.name + " must decrease f");
        counts[{f.from, f.to}] += f.count;
    }
    for (const auto& [edge, c] : counts) {
        const auto& a = profile.points[edge.first];
        const auto& b = profile.points[edge.second];
        if (a.role == CriticalRole::circle_max && b.role == CriticalRole::circle_min && a.circle == b.circle && (c & 1))
            throw ModelError("flow count between y+ and y- on one circle must be even");
    }
    // Morse differential squares to zero mod 2.
    std::map<std::pair<int, int>, int> square;
    for (const auto& [e1, c1] : counts)
        for (const auto& [e2, c2] : counts)
            if (e1.second == e2.first) square[{e1.first, e2.second}] += c1 * c2;
    for (const auto& [e, c] : square)
        if (c & 1)
            throw ModelError("Morse differential does not square to zero: " + profile.points[e.first].name + " -> " +
                             profile.points[e.second].name);
}

}  // namespace

MorseHamiltonian build_morse_hamiltonian(const SurfaceLinkModel& model, const Rational& epsilon,
                                         const MorseProfile& profile)
{
    if (!(epsilon > 0 && epsilon < 1)) throw ModelError("epsilon must lie in (0,1)");
    validate_profile(model, profile);

    MorseHamiltonian h;
    h.epsilon = epsilon;
    h.profile_name = profile.name;
    for (int i = 0; i < static_cast<int>(profile.points.size()); ++i) {
        const auto& pt = profile.points[i];
        h.critical_points.push_back({i, pt.name, pt.morse_index, Rational(epsilon * pt.f_value), pt.circle, pt.role});
    }
    for (const auto& f : profile.flows) h.flow_line_counts[{f.from, f.to}] += f.count;
    return h;
}

MorseHamiltonian modify_for_large_period(const MorseHamiltonian& h, const SurfaceLinkModel& model)
{
    MorseHamiltonian out = h;
    out.modified = true;
    out.large_period_orbits.clear();
    for (const auto& p : h.critical_points)
        if (p.morse_index == 0) out.large_period_orbits.push_back({p.id, 1, static_cast<long>(model.d) + 1});
    return out;
}

}  // namespace floerlab
