#include "floerlab/closed_open.hpp"

#include "floerlab/error.hpp"

#include <algorithm>
#include <map>

namespace floerlab {

namespace {

Chain apply_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const Chain& chain)
{
    std::multimap<std::size_t, std::size_t> by_source(pairs.begin(), pairs.end());
    std::map<std::size_t, int> acc;
    for (std::size_t i : chain) {
        auto [lo, hi] = by_source.equal_range(i);
        for (auto it = lo; it != hi; ++it) acc[it->second] ^= 1;
    }
    Chain out;
    for (const auto& [j, bit] : acc)
        if (bit) out.push_back(j);
    return out;
}

// Nonnegative compositions of `total` into `parts` entries.
void compositions(long total, int parts, std::vector<long>& current, std::vector<std::vector<long>>& out)
{
    if (parts == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (long x = 0; x <= total; ++x) {
        current.push_back(x);
        compositions(total - x, parts - 1, current, out);
        current.pop_back();
    }
}

// Horizontal sections join an orbit to the chord endpoint at the same point,
// one per link component.
bool realized_by_horizontal_sections(const MorseOrbitSet& alpha, const ReebChordTuple& y, const MorseHamiltonian& h)
{
    std::vector<int> points = y.points(h);
    std::sort(points.begin(), points.end());
    std::vector<int> orbits;
    for (const auto& [id, mult] : alpha.factors)
        for (int r = 0; r < mult; ++r) orbits.push_back(id);
    return orbits == points;
}

constexpr long kClassRange = 2;

}  // namespace

Chain ClosedOpenMap::apply(const Chain& chain) const
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(entries.size());
    for (const auto& e : entries) pairs.push_back({e.source, e.target});
    return apply_pairs(pairs, chain);
}

RelClass horizontal_class(const SurfaceLinkModel& model)
{
    return RelClass::zero(ClassContext::CO, model.k(), "Z_hor", 0);
}

ClosedOpenMap build_closed_open(const SurfaceLinkModel& model, const MorseHamiltonian& h, Window window,
                                std::optional<RelClass> reference)
{
    return build_closed_open(model, h, build_pfh_complex(model, h, window), std::move(reference));
}

ClosedOpenMap build_closed_open(const SurfaceLinkModel& model, const MorseHamiltonian& h, const PfhComplex& pfh,
                                std::optional<RelClass> reference)
{
    const int k = model.k();
    ClosedOpenMap map;
    map.source = pfh;
    map.reference = reference ? *reference : horizontal_class(model);
    if (map.reference.context != ClassContext::CO) throw ModelError("closed-open reference must be a CO class");
    check_context(map.reference);
    const Rational ref_energy = energy(map.reference);

    const Window sw = pfh.complex.window();
    map.target = build_hf_complex(model, h, Window{sw.lo * (k + 1), sw.hi * (k + 1)});
    const auto& chords = map.target.chords;

    for (int b : pfh.top_generators) {
        const MorseOrbitSet& alpha = pfh.orbit_sets[b];
        const Rational h_top = hamiltonian_value(alpha, h);
        for (std::size_t yi = 0; yi < chords.size(); ++yi) {
            const int n_y = chords[yi].minus_count();
            const Rational h_y = hamiltonian_value(chords[yi], h);
            for (long m = -kClassRange; m <= kClassRange; ++m) {
                // Index 0 fixes c; an odd remainder leaves no candidate.
                const long twice_c = -(n_y + 2 * m * (k + 1));
                if (twice_c % 2 != 0) continue;
                const long c = twice_c / 2;
                ++map.candidates_examined;
                const IndexEnergy ie = co_index_energy(n_y, m, c, k, h_top, h_y);
                if (ie.index != 0 || ie.energy != 0) continue;
                // Positivity: every region core is crossed c_i + m >= 0 times
                // and the complementary region m >= 0 times.
                if (m < 0 || c + k * m < 0) continue;
                std::vector<std::vector<long>> splits;
                std::vector<long> scratch;
                compositions(c + k * m, k, scratch, splits);
                for (auto& split : splits) {
                    CoCandidate cand;
                    cand.source_base = b;
                    cand.chord = static_cast<int>(yi);
                    cand.m = m;
                    for (long& x : split) x -= m;
                    cand.c = split;
                    cand.index_energy = ie;
                    cand.positive = true;
                    cand.realized = realized_by_horizontal_sections(alpha, chords[yi], h);
                    if (cand.realized) map.survivors.push_back(std::move(cand));
                }
            }
        }
    }

    for (const auto& cand : map.survivors) {
        RelClass curve = horizontal_class(model);
        for (int i = 0; i < k; ++i) curve.add_disk(i, cand.c[i]);
        curve.add_sigma(cand.m);
        const Rational class_energy = energy(curve);
        for (long t = sw.lo; t <= sw.hi; ++t) {
            const std::size_t src = pfh.complex.index_of(cand.source_base, t);
            // Z # Z_0 # A = curve class, so area(A) = area(curve) - area(Z) - area(Z_0).
            const Rational area_a = class_energy - energy(pfh.complex.generator(src).capping) - ref_energy;
            const Rational power = -area_a / model.region_area();
            if (power.get_den() != 1)
                throw ModelError("closed-open reference energy is not a multiple of 1/(k+1)");
            const long s = power.get_num().get_si();
            if (!map.target.complex.window().contains(s)) continue;
            ClosedOpenEntry e;
            e.source = src;
            e.target = map.target.complex.index_of(cand.chord, s);
            e.curve_class = curve;
            e.index_energy = cand.index_energy;
            map.entries.push_back(std::move(e));
        }
    }

    if (auto bad = chain_map_defect(map)) throw ValidationError("closed-open map is not a chain map", *bad);
    return map;
}

std::optional<std::string> chain_map_defect(const ClosedOpenMap& map)
{
    const auto& src = map.source.complex;
    const auto& tgt = map.target.complex;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const Chain lhs = map.apply(src.boundary_of(i));
        const Chain rhs = tgt.boundary(map.apply({i}));
        if (lhs != rhs) {
            std::string witness = src.generator(i).label + "@T^" + std::to_string(src.power_of(i));
            const Chain diff = chain_sum(lhs, rhs);
            if (!diff.empty()) witness += " -> " + tgt.generator(diff.front()).label;
            return witness;
        }
    }
    return std::nullopt;
}

FloerGenerator unit_generator(const HfComplex& hf)
{
    return hf.complex.generator(hf.complex.index_of(hf.plus_index, 0));
}

Chain unit_chain(const HfComplex& hf, long power) { return {hf.complex.index_of(hf.plus_index, power)}; }

SigmaClass sigma_class(const ClosedOpenMap& map)
{
    SigmaClass s;
    s.cycle = build_cycle_c(map.source, 0);
    s.nonzero = !is_boundary(map.source.complex, s.cycle);
    s.image = map.apply(s.cycle);
    s.image_is_unit = s.image == unit_chain(map.target, 0);
    return s;
}

Chain CobordismMap::apply(const Chain& chain) const { return apply_pairs(entries, chain); }

namespace {

std::vector<MorseOrbitFactor> factors_of(const MorseOrbitSet& alpha, const MorseHamiltonian& h)
{
    std::vector<MorseOrbitFactor> out;
    for (const auto& [id, mult] : alpha.factors) {
        const auto& p = h.point(id);
        out.push_back({p.morse_index, p.role == CriticalRole::circle_max, mult});
    }
    return out;
}

}  // namespace

CobordismMap cobordism_identity(const PfhComplex& pfh, const MorseHamiltonian& h, const SurfaceLinkModel& model)
{
    CobordismMap map;
    const auto& cx = pfh.complex;
    if (pfh.top_generators.empty()) return map;
    constexpr long kLevels = 1;  // M ranges over -kLevels..kLevels

    // The Morse index depends on the top set only through its degree, so one
    // table over (beta, M) serves every top generator.
    const auto top0 = factors_of(pfh.orbit_sets[pfh.top_generators.front()], h);
    std::vector<std::pair<int, long>> index_zero;
    for (std::size_t beta = 0; beta < pfh.orbit_sets.size(); ++beta) {
        const auto bottom = factors_of(pfh.orbit_sets[beta], h);
        for (long m = -kLevels; m <= kLevels; ++m)
            if (pfh_morse_index(top0, bottom, m, model.k(), model.d) == 0)
                index_zero.push_back({static_cast<int>(beta), m});
    }

    for (int b : pfh.top_generators) {
        const MorseOrbitSet& alpha = pfh.orbit_sets[b];
        std::vector<std::pair<int, long>> found;
        for (const auto& [beta, m] : index_zero) {
            if (cobordism_energy(alpha, pfh.orbit_sets[beta], m, h) != 0) continue;
            // Energy-zero curves are unions of trivial cylinders.
            if (pfh.orbit_sets[beta] != alpha) continue;
            found.push_back({beta, m});
        }
        if (found.size() != 1)
            throw ValidationError("cobordism map is not determined on a top generator", alpha.label(h));
        for (long t = cx.window().lo; t <= cx.window().hi; ++t) {
            const long s = t + found.front().second;
            if (!cx.window().contains(s)) continue;
            map.entries.push_back({cx.index_of(b, t), cx.index_of(found.front().first, s)});
        }
    }
    return map;
}

CobordismMap compose(const CobordismMap& second, const CobordismMap& first)
{
    CobordismMap out;
    std::map<std::pair<std::size_t, std::size_t>, int> acc;
    for (const auto& [a, b] : first.entries)
        for (std::size_t c : second.apply({b})) acc[{a, c}] ^= 1;
    for (const auto& [key, bit] : acc)
        if (bit) out.entries.push_back(key);
    return out;
}

Rational cobordism_energy(const MorseOrbitSet& top, const MorseOrbitSet& bottom, long m, const MorseHamiltonian& h)
{
    Rational e = m;
    for (const auto& [id, mult] : top.factors) e += mult * h.point(id).value;
    for (const auto& [id, mult] : bottom.factors) e -= mult * h.point(id).value;
    return e;
}

Rational cobordism_energy_from_cappings(const PfhComplex& pfh, int top_base, int bottom_base, long m)
{
    const auto& cx = pfh.complex;
    return energy(cx.generator(cx.index_of(top_base, 0)).capping) -
           energy(cx.generator(cx.index_of(bottom_base, 0)).capping) +
           m * energy(pfh.complex.period_class());
}

SpectralRow spectral_compare(const FilteredComplex& pfh, const Chain& cycle, const FilteredComplex& hf,
                             std::size_t unit, const Rational& integral, const Rational& pfh_shift)
{
    SpectralRow row;
    row.integral = integral;
    // Moving the base point from the complex's reference to x re-anchors the
    // HF cappings by the change in H and moves the PFH reference by the
    // opposite amount.
    const Rational offset = integral - hf.reference_term();
    const FilteredComplex hfx = change_basepoint(hf, offset, "#u");
    row.c_hf = spectral_invariant(hfx, {unit});

    const FilteredComplex pfhx = shift_reference(pfh, -offset + pfh_shift);
    row.c_pfh = spectral_invariant(pfhx, cycle);

    row.lhs = row.c_hf;
    row.rhs = row.c_pfh + row.integral;
    row.holds = row.lhs <= row.rhs;
    return row;
}

SpectralRow spectral_compare(const SurfaceLinkModel& model, const MorseHamiltonian& h, const PfhComplex& pfh,
                             const HfComplex& hf, const ReebChordTuple& basepoint, const Rational& pfh_shift)
{
    if (basepoint.size() != model.d) throw ModelError("base point must choose a point on every link component");
    SpectralRow row = spectral_compare(pfh.complex, build_cycle_c(pfh, 0), hf.complex,
                                       unit_chain(hf, 0).front(), hamiltonian_value(basepoint, h), pfh_shift);
    row.genus = model.genus;
    row.k = model.k();
    row.d = model.d;
    row.epsilon = h.epsilon;
    row.basepoint = basepoint.label();
    return row;
}

SpectralRow spectral_compare(const SurfaceLinkModel& model, const MorseHamiltonian& h,
                             const ReebChordTuple& basepoint, const Rational& pfh_shift)
{
    return spectral_compare(model, h, build_pfh_complex(model, h), build_hf_complex(model, h), basepoint, pfh_shift);
}

}  // namespace floerlab
