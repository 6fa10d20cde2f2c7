#include "floerlab/morse.hpp"

#include "floerlab/error.hpp"

#include <algorithm>
#include <map>

namespace floerlab {

int MorseOrbitSet::degree() const
{
    int total = 0;
    for (const auto& f : factors) total += f.second;
    return total;
}

int MorseOrbitSet::multiplicity(int point) const
{
    for (const auto& f : factors)
        if (f.first == point) return f.second;
    return 0;
}

std::string MorseOrbitSet::label(const MorseHamiltonian& h) const
{
    std::string out;
    for (const auto& [id, mult] : factors) {
        if (!out.empty()) out += ' ';
        out += h.point(id).name;
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

Rational hamiltonian_value(const MorseOrbitSet& alpha, const MorseHamiltonian& h)
{
    Rational total = 0;
    for (const auto& [id, mult] : alpha.factors) total += mult * h.point(id).value;
    return total;
}

bool is_top(const MorseOrbitSet& alpha, const MorseHamiltonian& h)
{
    for (const auto& f : alpha.factors)
        if (h.point(f.first).role != CriticalRole::circle_max) return false;
    return true;
}

MorseOrbitSet alpha_plus(const MorseHamiltonian& h)
{
    MorseOrbitSet a;
    for (int id : h.maxima()) a.factors.push_back({id, 1});
    std::sort(a.factors.begin(), a.factors.end());
    return a;
}

std::vector<MorseOrbitSet> enumerate_pfh_generators(const SurfaceLinkModel& model, const MorseHamiltonian& h)
{
    std::vector<int> ids;
    for (const auto& p : h.critical_points) ids.push_back(p.id);
    std::sort(ids.begin(), ids.end());

    std::vector<MorseOrbitSet> out;
    MorseOrbitSet current;
    auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (pos == ids.size()) return;
        const int cap = h.point(ids[pos]).hyperbolic() ? 1 : remaining;
        for (int m = std::min(cap, remaining); m >= 1; --m) {
            current.factors.push_back({ids[pos], m});
            self(self, pos + 1, remaining - m);
            current.factors.pop_back();
        }
        self(self, pos + 1, remaining);
    };
    recurse(recurse, 0, model.d);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

MorseOrbitSet replace_one(const MorseOrbitSet& alpha, int from, int to)
{
    std::map<int, int> m;
    for (const auto& f : alpha.factors) m[f.first] = f.second;
    if (--m[from] == 0) m.erase(from);
    ++m[to];
    MorseOrbitSet out;
    out.factors.assign(m.begin(), m.end());
    return out;
}

std::map<int, std::vector<int>> odd_flows(const MorseHamiltonian& h)
{
    std::map<int, std::vector<int>> out;
    for (const auto& [key, count] : h.flow_line_counts) {
        if (count % 2 == 0) continue;
        if (h.point(key.second).morse_index != h.point(key.first).morse_index - 1) continue;
        out[key.first].push_back(key.second);
    }
    return out;
}

}  // namespace

std::vector<DifferentialEntry> pfh_differential(const MorseHamiltonian& h, const std::vector<MorseOrbitSet>& generators)
{
    std::map<MorseOrbitSet, int> position;
    for (std::size_t i = 0; i < generators.size(); ++i) position[generators[i]] = static_cast<int>(i);
    const auto flows = odd_flows(h);

    std::vector<DifferentialEntry> out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& alpha = generators[i];
        for (const auto& [id, mult] : alpha.factors) {
            (void)mult;
            auto it = flows.find(id);
            if (it == flows.end()) continue;
            for (int sink : it->second) {
                if (h.point(sink).hyperbolic() && alpha.multiplicity(sink) > 0) continue;
                auto target = position.find(replace_one(alpha, id, sink));
                if (target == position.end()) continue;
                out.push_back({static_cast<int>(i), target->second, 0});
            }
        }
    }
    return out;
}

int PfhComplex::find(const MorseOrbitSet& alpha) const
{
    auto it = std::lower_bound(orbit_sets.begin(), orbit_sets.end(), alpha);
    if (it == orbit_sets.end() || *it != alpha) return -1;
    return static_cast<int>(it - orbit_sets.begin());
}

PfhComplex build_pfh_complex(const SurfaceLinkModel& model, const MorseHamiltonian& h, Window window)
{
    PfhComplex out;
    out.orbit_sets = enumerate_pfh_generators(model, h);
    out.reference = alpha_plus(h);
    out.reference_value = hamiltonian_value(out.reference, h);

    const std::string ref_label = out.reference.label(h);
    std::vector<BaseGenerator> base;
    base.reserve(out.orbit_sets.size());
    for (std::size_t i = 0; i < out.orbit_sets.size(); ++i) {
        const auto& alpha = out.orbit_sets[i];
        const std::string label = alpha.label(h);
        // The capping runs from gamma_0 down the gradient paths to alpha; its
        // area is the drop in H.
        const Rational area = hamiltonian_value(alpha, h) - out.reference_value;
        base.push_back({label, area, RelClass::zero(ClassContext::PFH, model.k(), "Z(" + label + "," + ref_label + ")", area)});
        if (is_top(alpha, h)) out.top_generators.push_back(static_cast<int>(i));
    }
    out.alpha_plus_index = out.find(out.reference);

    ClassDiff period = ClassDiff::zero(model.k());
    period.m = 1;
    out.complex = build_complex(std::move(base), pfh_differential(h, out.orbit_sets), 1, window, period)
                      .with_name("PFH(g=" + std::to_string(model.genus) + ",k=" + std::to_string(model.k()) +
                                 ",eps=" + to_string(h.epsilon) + ")");
    return out;
}

Chain build_cycle_c(const PfhComplex& pfh, long power)
{
    Chain c;
    for (int b : pfh.top_generators) c.push_back(pfh.complex.index_of(b, power));
    std::sort(c.begin(), c.end());
    const Chain dc = pfh.complex.boundary(c);
    if (!dc.empty()) {
        std::string witness;
        for (std::size_t i : dc) {
            if (!witness.empty()) witness += ", ";
            witness += pfh.complex.generator(i).label;
        }
        throw ValidationError("the chain of maximal orbit sets is not a cycle", witness);
    }
    return c;
}

int ReebChordTuple::minus_count() const
{
    return static_cast<int>(std::count(plus.begin(), plus.end(), false));
}

std::string ReebChordTuple::label() const
{
    std::string out = "y";
    for (bool p : plus) out += p ? '+' : '-';
    return out;
}

std::vector<int> ReebChordTuple::points(const MorseHamiltonian& h) const
{
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) out.push_back(plus[i] ? h.circle_max(i) : h.circle_min(i));
    return out;
}

ReebChordTuple parse_chord(const std::string& signs)
{
    std::string body = signs;
    if (!body.empty() && body.front() == 'y') body.erase(body.begin());
    if (body.empty()) throw ModelError("empty chord descriptor");
    ReebChordTuple y;
    for (char ch : body) {
        if (ch == '+') y.plus.push_back(true);
        else if (ch == '-') y.plus.push_back(false);
        else throw ModelError("chord descriptor must consist of '+' and '-': " + signs);
    }
    return y;
}

Rational hamiltonian_value(const ReebChordTuple& y, const MorseHamiltonian& h)
{
    Rational total = 0;
    for (int id : y.points(h)) total += h.point(id).value;
    return total;
}

std::vector<ReebChordTuple> enumerate_hf_generators(const SurfaceLinkModel& model)
{
    const int d = model.d;
    if (d > 24) throw ModelError("too many link components to enumerate chords");
    std::vector<ReebChordTuple> out;
    for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
        ReebChordTuple y;
        for (int i = 0; i < d; ++i) y.plus.push_back(((mask >> i) & 1UL) == 0);
        out.push_back(std::move(y));
    }
    return out;
}

std::vector<DifferentialEntry> hf_differential(const MorseHamiltonian& h, const std::vector<ReebChordTuple>& chords)
{
    std::map<ReebChordTuple, int> position;
    for (std::size_t i = 0; i < chords.size(); ++i) position[chords[i]] = static_cast<int>(i);
    std::vector<DifferentialEntry> out;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        for (int c = 0; c < chords[i].size(); ++c) {
            if (!chords[i].plus[c]) continue;
            const int strips = h.flow_count_mod2(h.circle_max(c), h.circle_min(c));
            if (strips == 0) continue;
            ReebChordTuple target = chords[i];
            target.plus[c] = false;
            out.push_back({static_cast<int>(i), position.at(target), 0});
        }
    }
    return out;
}

int HfComplex::find(const ReebChordTuple& y) const
{
    for (std::size_t i = 0; i < chords.size(); ++i)
        if (chords[i] == y) return static_cast<int>(i);
    return -1;
}

HfComplex build_hf_complex(const SurfaceLinkModel& model, const MorseHamiltonian& h, Window window)
{
    HfComplex out;
    out.chords = enumerate_hf_generators(model);
    std::vector<BaseGenerator> base;
    for (const auto& y : out.chords)
        base.push_back({y.label(), hamiltonian_value(y, h), RelClass::zero(ClassContext::HF, model.k(), "A(" + y.label() + ")")});
    out.plus_index = 0;

    ClassDiff period = ClassDiff::zero(model.k());
    period.c[0] = -1;
    const Rational reference = hamiltonian_value(out.chords[out.plus_index], h);
    out.complex = build_complex(std::move(base), hf_differential(h, out.chords), model.region_area(), window, period,
                                reference)
                      .with_name("HF(g=" + std::to_string(model.genus) + ",k=" + std::to_string(model.k()) +
                                 ",eps=" + to_string(h.epsilon) + ")");
    return out;
}

}  // namespace floerlab
