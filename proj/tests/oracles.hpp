#pragma once

// Independent reference computations used only by the tests. None of these
// call the library's reduction or enumeration code; they read the complex
// through boundary_of / action only.

#include "floerlab/complex.hpp"
#include "floerlab/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using floerlab::Chain;
using floerlab::FilteredComplex;
using floerlab::Rational;

/// Dense F_2 vectors stored as 64-bit words.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void flip(std::size_t i) { w[i / 64] ^= 1ULL << (i % 64); }
    bool get(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1ULL; }
    void add(const Bits& o)
    {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }
    long top() const
    {
        for (std::size_t i = w.size(); i-- > 0;)
            if (w[i]) return static_cast<long>(i * 64 + 63 - __builtin_clzll(w[i]));
        return -1;
    }
};

inline Bits from_chain(const Chain& c, std::size_t n)
{
    Bits b(n);
    for (std::size_t i : c) b.flip(i);
    return b;
}

/// Echelon basis keyed by the highest set bit.
struct Echelon {
    std::vector<Bits> rows;
    std::vector<long> pivots;

    Bits reduce(Bits v) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            const long t = v.top();
            if (t < 0) break;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (pivots[r] == t) {
                    v.add(rows[r]);
                    changed = true;
                    break;
                }
        }
        return v;
    }
    bool insert(const Bits& v)
    {
        Bits r = reduce(v);
        const long t = r.top();
        if (t < 0) return false;
        rows.push_back(r);
        pivots.push_back(t);
        return true;
    }
    bool contains(const Bits& v) const { return reduce(v).top() < 0; }
    std::size_t rank() const { return rows.size(); }
};

inline std::size_t boundary_rank(const FilteredComplex& cx)
{
    Echelon e;
    for (std::size_t i = 0; i < cx.size(); ++i) e.insert(from_chain(cx.boundary_of(i), cx.size()));
    return e.rank();
}

/// dim ker d - dim im d on the materialized window.
inline std::size_t homology_rank(const FilteredComplex& cx)
{
    const std::size_t r = boundary_rank(cx);
    return cx.size() - 2 * r;
}

/// Smallest level L such that the class of `cycle` is represented inside the
/// span of generators with action <= L: cycle lies in span(gens <= L) + im d.
inline Rational spectral(const FilteredComplex& cx, const Chain& cycle)
{
    const std::size_t n = cx.size();
    std::vector<Rational> levels;
    for (std::size_t i = 0; i < n; ++i) levels.push_back(cx.action(i));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    Echelon boundaries;
    for (std::size_t i = 0; i < n; ++i) boundaries.insert(from_chain(cx.boundary_of(i), n));
    const Bits target = from_chain(cycle, n);
    for (const auto& level : levels) {
        Echelon e = boundaries;
        for (std::size_t i = 0; i < n; ++i)
            if (cx.action(i) <= level) {
                Bits v(n);
                v.flip(i);
                e.insert(v);
            }
        if (e.contains(target)) return level;
    }
    throw std::runtime_error("oracle: class is zero or not representable");
}

/// Literal min over every element b of im d of the max action of cycle + b,
/// visiting all 2^rank boundaries in Gray-code order. Only for boundary rank
/// at most ~22.
inline Rational brute_minimax(const FilteredComplex& cx, const Chain& cycle, bool* zero_class = nullptr)
{
    const std::size_t n = cx.size();
    Echelon basis;
    for (std::size_t i = 0; i < n; ++i) basis.insert(from_chain(cx.boundary_of(i), n));
    const std::size_t r = basis.rank();
    if (r > 22) throw std::runtime_error("oracle: boundary rank too large for exhaustive search");
    std::vector<Rational> actions(n);
    for (std::size_t i = 0; i < n; ++i) actions[i] = cx.action(i);
    Bits v = from_chain(cycle, n);
    bool found = false;
    Rational best;
    if (zero_class) *zero_class = false;
    for (std::uint64_t step = 0; step < (1ULL << r); ++step) {
        if (step) v.add(basis.rows[__builtin_ctzll(step)]);
        if (v.top() < 0) {
            if (zero_class) *zero_class = true;
            continue;
        }
        Rational m;
        bool first = true;
        for (std::size_t i = 0; i < n; ++i)
            if (v.get(i) && (first || actions[i] > m)) {
                m = actions[i];
                first = false;
            }
        if (!found || m < best) best = m;
        found = true;
    }
    return best;
}

/// Degree-d multisets of critical points (saddles at most once), generated
/// as sorted d-tuples deduplicated through a set.
inline std::set<std::vector<int>> orbit_multisets(const floerlab::MorseHamiltonian& h, int d)
{
    std::vector<int> ids;
    for (const auto& p : h.critical_points) ids.push_back(p.id);
    std::set<std::vector<int>> out;
    std::vector<std::size_t> odometer(d, 0);
    while (true) {
        std::vector<int> tuple;
        for (std::size_t j : odometer) tuple.push_back(ids[j]);
        std::sort(tuple.begin(), tuple.end());
        bool ok = true;
        for (std::size_t j = 1; j < tuple.size(); ++j)
            if (tuple[j] == tuple[j - 1] && h.point(tuple[j]).morse_index == 1) ok = false;
        if (ok) out.insert(tuple);
        int pos = 0;
        while (pos < d && ++odometer[pos] == ids.size()) odometer[pos++] = 0;
        if (pos == d) break;
    }
    return out;
}

/// floor(p * num / den) by repeated subtraction, den > 0.
inline long floor_by_counting(long p, long num, long den)
{
    long value = p * num;
    long q = 0;
    if (value >= 0) {
        while (value >= den) {
            value -= den;
            ++q;
        }
    } else {
        while (value < 0) {
            value += den;
            --q;
        }
    }
    return q;
}

}  // namespace oracle
