#include "floerlab/complex.hpp"

#include "floerlab/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace floerlab {

struct FilteredComplex::Cache {
    std::once_flag plain_once;
    Reduction plain;
    std::once_flag tracked_once;
    Reduction tracked;
    std::vector<std::vector<std::size_t>> tracked_v;  // by position, entries are positions
    std::once_flag levels_once;
    // [action(i), max action of d(i)) for every generator whose boundary
    // reaches above it, before the reference shift; a level inside one of
    // these breaks the subcomplex property.
    std::vector<std::pair<Rational, Rational>> bad_levels;
};

Chain chain_sum(const Chain& a, const Chain& b)
{
    Chain out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

void xor_into(std::vector<std::size_t>& acc, const std::vector<std::size_t>& other, std::vector<std::size_t>& scratch)
{
    scratch.clear();
    std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(scratch));
    acc.swap(scratch);
}

std::string describe(const std::vector<BaseGenerator>& base, int b, long power)
{
    return base[b].label + "@T^" + std::to_string(power);
}

}  // namespace

BaseGenerator FilteredComplex::raw_base(int base) const
{
    BaseGenerator g = (*base_)[base];
    g.action += action_offset_;
    g.capping.anchor_energy += action_offset_ + anchor_offset_;
    g.capping.anchor += anchor_suffix_;
    return g;
}

std::vector<BaseGenerator> FilteredComplex::base_generators() const
{
    std::vector<BaseGenerator> out;
    out.reserve(base_size());
    for (std::size_t b = 0; b < base_size(); ++b) out.push_back(raw_base(static_cast<int>(b)));
    return out;
}

Rational FilteredComplex::base_action(int base) const { return (*base_)[base].action + action_offset_; }

std::size_t FilteredComplex::index_of(int base, long power) const
{
    if (base < 0 || base >= static_cast<int>(base_size()) || !window_.contains(power))
        throw ModelError("generator outside the materialized window");
    return static_cast<std::size_t>(power - window_.lo) * base_size() + static_cast<std::size_t>(base);
}

int FilteredComplex::base_of(std::size_t index) const { return static_cast<int>(index % base_size()); }

long FilteredComplex::power_of(std::size_t index) const
{
    return window_.lo + static_cast<long>(index / base_size());
}

Rational FilteredComplex::action(std::size_t index) const
{
    return base_action(base_of(index)) + power_of(index) * period_action_;
}

FloerGenerator FilteredComplex::generator(std::size_t index) const
{
    const int b = base_of(index);
    const long t = power_of(index);
    const BaseGenerator base = raw_base(b);
    FloerGenerator g;
    g.label = base.label;
    g.base = b;
    g.power = t;
    g.action = action(index);
    g.capping = base.capping;
    for (int i = 0; i < period_class_.k() && i < g.capping.k; ++i) {
        g.capping.coeff_B[i] += t * period_class_.c[i];
        g.capping.coeff_phiB[i] += t * period_class_.c_phi[i];
        g.capping.coeff_Bc[i] += t * period_class_.d[i];
        g.capping.coeff_phiBc[i] += t * period_class_.d_phi[i];
    }
    g.capping.coeff_Sigma += t * period_class_.m;
    return g;
}

Chain FilteredComplex::boundary_of(std::size_t index) const
{
    const int b = base_of(index);
    const long t = power_of(index);
    Chain out;
    for (const auto& [target, shift] : (*out_)[b])
        if (window_.contains(t + shift)) out.push_back(index_of(target, t + shift));
    std::sort(out.begin(), out.end());
    return out;
}

Chain FilteredComplex::boundary(const Chain& chain) const
{
    std::map<std::size_t, int> acc;
    for (std::size_t i : chain)
        for (std::size_t j : boundary_of(i)) acc[j] ^= 1;
    Chain out;
    for (const auto& [j, bit] : acc)
        if (bit) out.push_back(j);
    return out;
}

Rational FilteredComplex::max_action(const Chain& chain) const
{
    if (chain.empty()) throw ModelError("max_action of the empty chain");
    Rational best = action(chain.front());
    for (std::size_t i : chain) {
        Rational a = action(i);
        if (a > best) best = a;
    }
    return best;
}

bool FilteredComplex::is_subcomplex_below(const Rational& level) const
{
    std::call_once(cache_->levels_once, [this] {
        for (std::size_t i = 0; i < size(); ++i) {
            const Chain bd = boundary_of(i);
            if (bd.empty()) continue;
            const Rational a = action(i) - action_offset_;
            Rational top = action(bd.front()) - action_offset_;
            for (std::size_t j : bd) {
                Rational b = action(j) - action_offset_;
                if (b > top) top = b;
            }
            if (top > a) cache_->bad_levels.push_back({a, top});
        }
    });
    const Rational raw = level - action_offset_;
    for (const auto& [lo, hi] : cache_->bad_levels)
        if (lo <= raw && raw < hi) return false;
    return true;
}

Chain FilteredComplex::translate(const Chain& chain, long n) const
{
    Chain out;
    for (std::size_t i : chain) {
        const long t = power_of(i) + n;
        if (window_.contains(t)) out.push_back(index_of(base_of(i), t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FilteredComplex FilteredComplex::with_name(std::string name) const
{
    FilteredComplex c = *this;
    c.name_ = std::move(name);
    return c;
}

FilteredComplex build_complex(std::vector<BaseGenerator> generators, std::vector<DifferentialEntry> entries,
                              Rational period_action, Window window, ClassDiff period_class, Rational reference_term)
{
    if (window.hi < window.lo) throw ModelError("empty Novikov window");
    FilteredComplex c;
    c.period_action_ = std::move(period_action);
    c.period_class_ = std::move(period_class);
    c.window_ = window;
    c.reference_term_ = std::move(reference_term);
    const auto& base = generators;
    const int n = static_cast<int>(base.size());

    std::map<std::tuple<int, int, long>, int> parity;
    for (const auto& e : entries) {
        if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n)
            throw ModelError("differential entry references a missing generator");
        const Rational target_action = base[e.target].action + e.shift * c.period_action_;
        if (!(target_action < base[e.source].action))
            throw ModelError("differential entry " + describe(base, e.source, 0) + " -> " +
                             describe(base, e.target, e.shift) + " does not decrease action");
        parity[{e.source, e.target, e.shift}] ^= 1;
    }
    std::vector<DifferentialEntry> kept;
    std::vector<std::vector<std::pair<int, long>>> out(n);
    for (const auto& [key, bit] : parity) {
        if (!bit) continue;
        const auto& [s, t, shift] = key;
        kept.push_back({s, t, shift});
        out[s].push_back({t, shift});
        if (shift != 0) c.block_diagonal_ = false;
    }

    // d^2 = 0, checked on base generators with unbounded shifts.
    for (int s = 0; s < n; ++s) {
        std::map<std::pair<int, long>, int> two;
        for (const auto& [mid, s1] : out[s])
            for (const auto& [tgt, s2] : out[mid]) two[{tgt, s1 + s2}] ^= 1;
        for (const auto& [key, bit] : two)
            if (bit)
                throw ValidationError("d^2 != 0", describe(base, s, 0) + " -> " + describe(base, key.first, key.second));
    }
    c.base_ = std::make_shared<const std::vector<BaseGenerator>>(std::move(generators));
    c.entries_ = std::make_shared<const std::vector<DifferentialEntry>>(std::move(kept));
    c.out_ = std::make_shared<const std::vector<std::vector<std::pair<int, long>>>>(std::move(out));
    c.cache_ = std::make_shared<FilteredComplex::Cache>();
    return c;
}

namespace {

// Column reduction over the local index space (base generators in block mode,
// materialized generators otherwise).
void reduce(const FilteredComplex& c, Reduction& red, std::vector<std::vector<std::size_t>>* v)
{
    const bool block = c.block_diagonal();
    const std::size_t n = block ? c.base_size() : c.size();
    auto local_action = [&](std::size_t i) -> Rational {
        return block ? c.base_action(static_cast<int>(i)) : c.action(i);
    };
    std::vector<Rational> actions(n);
    for (std::size_t i = 0; i < n; ++i) actions[i] = local_action(i);

    red.order.resize(n);
    std::iota(red.order.begin(), red.order.end(), 0);
    std::stable_sort(red.order.begin(), red.order.end(),
                     [&](std::size_t a, std::size_t b) { return actions[a] < actions[b]; });
    red.position.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) red.position[red.order[p]] = p;

    red.reduced.assign(n, {});
    red.pivot_column.assign(n, Reduction::npos);
    red.rank = 0;
    if (v) {
        v->assign(n, {});
        for (std::size_t p = 0; p < n; ++p) (*v)[p] = {p};
    }

    std::vector<std::vector<std::size_t>> local_out;
    if (block) {
        local_out.assign(n, {});
        for (const auto& entry : c.entries()) local_out[entry.source].push_back(entry.target);
    }

    std::vector<std::size_t> scratch;
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t local = red.order[p];
        std::vector<std::size_t> col;
        if (block) {
            for (std::size_t t : local_out[local]) col.push_back(red.position[t]);
        } else {
            for (std::size_t j : c.boundary_of(local)) col.push_back(red.position[j]);
        }
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            const std::size_t pivot = red.pivot_column[col.back()];
            if (pivot == Reduction::npos) break;
            xor_into(col, red.reduced[pivot], scratch);
            if (v) xor_into((*v)[p], (*v)[pivot], scratch);
        }
        if (!col.empty()) {
            red.pivot_column[col.back()] = p;
            ++red.rank;
        }
        red.reduced[p] = std::move(col);
    }
}

}  // namespace

const Reduction& FilteredComplex::reduction() const
{
    if (!cache_) throw ModelError("complex was not built with build_complex");
    std::call_once(cache_->plain_once, [this] { reduce(*this, cache_->plain, nullptr); });
    return cache_->plain;
}

std::vector<Chain> FilteredComplex::basis_cycles() const
{
    if (!cache_) throw ModelError("complex was not built with build_complex");
    std::call_once(cache_->tracked_once, [this] { reduce(*this, cache_->tracked, &cache_->tracked_v); });
    const Reduction& red = cache_->tracked;
    std::vector<Chain> out;
    const long copies = block_diagonal_ ? window_.periods() : 1;
    for (long period = 0; period < copies; ++period) {
        for (std::size_t p = 0; p < red.order.size(); ++p) {
            if (!red.reduced[p].empty() || red.pivot_column[p] != Reduction::npos) continue;
            Chain z;
            for (std::size_t q : cache_->tracked_v[p]) {
                const std::size_t local = red.order[q];
                z.push_back(block_diagonal_ ? index_of(static_cast<int>(local), window_.lo + period) : local);
            }
            std::sort(z.begin(), z.end());
            out.push_back(std::move(z));
        }
    }
    return out;
}

namespace {

// Splits a materialized chain into (local chain, period offset) parts.
std::vector<std::pair<long, std::vector<std::size_t>>> split_by_period(const FilteredComplex& c, const Chain& chain)
{
    std::map<long, std::vector<std::size_t>> parts;
    if (c.block_diagonal()) {
        for (std::size_t i : chain) parts[c.power_of(i)].push_back(static_cast<std::size_t>(c.base_of(i)));
    } else {
        for (std::size_t i : chain) parts[0].push_back(i);
    }
    return {parts.begin(), parts.end()};
}

std::size_t to_materialized(const FilteredComplex& c, long period, std::size_t local)
{
    return c.block_diagonal() ? c.index_of(static_cast<int>(local), period) : local;
}

}  // namespace

Chain reduce_modulo_boundaries(const FilteredComplex& complex, const Chain& chain)
{
    const Reduction& red = complex.reduction();
    Chain out;
    std::vector<std::size_t> scratch;
    for (auto& [period, locals] : split_by_period(complex, chain)) {
        std::vector<std::size_t> col;
        for (std::size_t l : locals) col.push_back(red.position[l]);
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            const std::size_t pivot = red.pivot_column[col.back()];
            if (pivot == Reduction::npos) break;
            xor_into(col, red.reduced[pivot], scratch);
        }
        // Below the leading entry the remainder is not canonical; keep the lead
        // and whatever is left, translated back.
        for (std::size_t p : col) out.push_back(to_materialized(complex, period, red.order[p]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_boundary(const FilteredComplex& complex, const Chain& chain)
{
    if (chain.empty()) return true;
    // Fully reduce every entry, not just the lead.
    const Reduction& red = complex.reduction();
    std::vector<std::size_t> scratch;
    for (auto& [period, locals] : split_by_period(complex, chain)) {
        std::vector<std::size_t> col;
        for (std::size_t l : locals) col.push_back(red.position[l]);
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            const std::size_t pivot = red.pivot_column[col.back()];
            if (pivot == Reduction::npos) return false;
            xor_into(col, red.reduced[pivot], scratch);
        }
    }
    return true;
}

Rational spectral_invariant(const FilteredComplex& complex, const Chain& cycle)
{
    if (!complex.is_cycle(cycle)) throw ModelError("spectral_invariant: chain is not a cycle");
    const Reduction& red = complex.reduction();
    std::vector<std::size_t> scratch;
    bool found = false;
    Rational best;
    for (auto& [period, locals] : split_by_period(complex, cycle)) {
        std::vector<std::size_t> col;
        for (std::size_t l : locals) col.push_back(red.position[l]);
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            const std::size_t pivot = red.pivot_column[col.back()];
            if (pivot == Reduction::npos) break;
            xor_into(col, red.reduced[pivot], scratch);
        }
        if (col.empty()) continue;
        const Rational level = complex.action(to_materialized(complex, period, red.order[col.back()]));
        if (!found || level > best) best = level;
        found = true;
    }
    if (!found) throw ModelError("spectral_invariant: zero homology class");
    return best;
}

HomologyReport homology(const FilteredComplex& complex, bool with_representatives)
{
    HomologyReport r;
    r.periods = complex.window().periods();
    if (complex.size() == 0) {
        r.rank_per_period = 0;
        return r;
    }
    const Reduction& red = complex.reduction();
    const std::size_t local_n = red.order.size();
    const std::size_t local_rank = local_n - 2 * red.rank;
    if (complex.block_diagonal()) {
        r.total_rank = local_rank * static_cast<std::size_t>(r.periods);
        r.boundary_rank = red.rank * static_cast<std::size_t>(r.periods);
        r.rank_per_period = static_cast<long>(local_rank);
    } else {
        r.total_rank = local_rank;
        r.boundary_rank = red.rank;
        r.rank_per_period = Rational(static_cast<long>(local_rank)) / r.periods;
    }
    if (!with_representatives) return r;

    r.representatives = complex.basis_cycles();
    for (const auto& z : r.representatives) r.spectral_values.push_back(spectral_invariant(complex, z));
    return r;
}

FilteredComplex shift_reference(const FilteredComplex& complex, const Rational& energy)
{
    FilteredComplex c = complex;
    c.action_offset_ += energy;
    c.anchor_suffix_ += "+ref(" + to_string(energy) + ")";
    // A uniform shift preserves the filtration order; the reduction is shared.
    return c;
}

FilteredComplex change_basepoint(const FilteredComplex& complex, const Rational& offset,
                                 const std::string& new_anchor_suffix)
{
    FilteredComplex c = complex;
    c.anchor_offset_ += offset;
    c.anchor_suffix_ += new_anchor_suffix;
    c.reference_term_ += offset;
    return c;
}

}  // namespace floerlab
