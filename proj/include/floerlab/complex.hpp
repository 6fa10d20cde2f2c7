#pragma once

// Filtered chain complexes over F_2 with a Novikov-style Z-action.
//
// A complex is described by finitely many base generators (the T^0 layer) and
// a T-equivariant differential: an entry (b -> b', s) means that d(b, T^t)
// contains (b', T^{t+s}) for every t. A finite window of T-powers is
// materialized; generator (b, T^t) has action action(b) + t * period_action.
//
// Homology and spectral invariants come from one column reduction of the
// boundary matrix with generators ordered by action. When every entry has
// shift 0 the matrix is block diagonal and only one period is reduced.

#include "floerlab/lattice.hpp"
#include "floerlab/rational.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace floerlab {

struct BaseGenerator {
    std::string label;
    Rational action;
    RelClass capping;
};

struct DifferentialEntry {
    int source = 0;
    int target = 0;
    long shift = 0;

    bool operator==(const DifferentialEntry&) const = default;
};

struct Window {
    long lo = -1;
    long hi = 1;

    long periods() const { return hi - lo + 1; }
    bool contains(long t) const { return t >= lo && t <= hi; }
    bool operator==(const Window&) const = default;
};

/// A materialized generator (b, T^t).
struct FloerGenerator {
    std::string label;
    int base = 0;
    long power = 0;
    RelClass capping;
    Rational action;
};

/// Sorted, duplicate-free list of materialized generator indices (an F_2 chain).
using Chain = std::vector<std::size_t>;

/// Symmetric difference of two chains.
Chain chain_sum(const Chain& a, const Chain& b);

struct Reduction;

class FilteredComplex {
public:
    FilteredComplex() = default;

    std::size_t base_size() const { return base_->size(); }
    std::size_t size() const { return base_size() * static_cast<std::size_t>(window_.periods()); }
    /// The T^0 layer with the current reference and base point applied.
    std::vector<BaseGenerator> base_generators() const;
    Rational base_action(int base) const;
    const std::vector<DifferentialEntry>& entries() const { return *entries_; }
    const Rational& period_action() const { return period_action_; }
    const ClassDiff& period_class() const { return period_class_; }
    const Window& window() const { return window_; }
    const std::string& name() const { return name_; }
    /// The reference term that enters the action functional (for HF: the
    /// Hamiltonian integrated along the reference chord).
    const Rational& reference_term() const { return reference_term_; }
    bool block_diagonal() const { return block_diagonal_; }

    std::size_t index_of(int base, long power) const;
    int base_of(std::size_t index) const;
    long power_of(std::size_t index) const;
    Rational action(std::size_t index) const;
    FloerGenerator generator(std::size_t index) const;

    /// Boundary of a chain inside the window (entries leaving the window are dropped).
    Chain boundary(const Chain& chain) const;
    Chain boundary_of(std::size_t index) const;
    bool is_cycle(const Chain& chain) const { return boundary(chain).empty(); }
    Rational max_action(const Chain& chain) const;

    /// The action-<=L span is closed under the differential.
    bool is_subcomplex_below(const Rational& level) const;

    /// Applies T^n to a chain (indices leaving the window are dropped).
    Chain translate(const Chain& chain, long n) const;

    const Reduction& reduction() const;

    /// One cycle per homology basis class (materialized indices), in order of
    /// the generator that creates the class.
    std::vector<Chain> basis_cycles() const;

    FilteredComplex with_name(std::string name) const;

private:
    friend FilteredComplex build_complex(std::vector<BaseGenerator>, std::vector<DifferentialEntry>, Rational,
                                         Window, ClassDiff, Rational);
    friend FilteredComplex shift_reference(const FilteredComplex&, const Rational&);
    friend FilteredComplex change_basepoint(const FilteredComplex&, const Rational&, const std::string&);

    BaseGenerator raw_base(int base) const;

    // Generator data is shared between copies; shift_reference and
    // change_basepoint only touch the offsets below.
    std::string name_;
    std::shared_ptr<const std::vector<BaseGenerator>> base_ = std::make_shared<std::vector<BaseGenerator>>();
    std::shared_ptr<const std::vector<DifferentialEntry>> entries_ = std::make_shared<std::vector<DifferentialEntry>>();
    // per base: (target, shift)
    std::shared_ptr<const std::vector<std::vector<std::pair<int, long>>>> out_ =
        std::make_shared<std::vector<std::vector<std::pair<int, long>>>>();
    Rational action_offset_;     // added to actions and anchor energies
    Rational anchor_offset_;     // added to anchor energies only
    std::string anchor_suffix_;
    Rational period_action_;
    ClassDiff period_class_;
    Window window_;
    Rational reference_term_;
    bool block_diagonal_ = true;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Validates and assembles a complex. Throws ModelError for entries that do not
/// strictly decrease action or reference missing generators, and
/// ValidationError (with the offending source/target pair) if d^2 != 0.
FilteredComplex build_complex(std::vector<BaseGenerator> generators, std::vector<DifferentialEntry> entries,
                              Rational period_action, Window window = {}, ClassDiff period_class = {},
                              Rational reference_term = 0);

struct HomologyReport {
    std::size_t total_rank = 0;
    long periods = 0;
    Rational rank_per_period;
    std::size_t boundary_rank = 0;
    std::vector<Chain> representatives;  // one cycle per basis class
    std::vector<Rational> spectral_values; // spectral invariant of each basis cycle
};

HomologyReport homology(const FilteredComplex& complex, bool with_representatives = true);

/// Reduces a chain modulo boundaries so that its highest-action generator is
/// as low as possible. Empty result means the chain is a boundary.
Chain reduce_modulo_boundaries(const FilteredComplex& complex, const Chain& chain);

bool is_boundary(const FilteredComplex& complex, const Chain& chain);

/// min over cycles z' homologous to z of the largest action in z'.
/// Throws ModelError if `cycle` is not a cycle or represents the zero class.
Rational spectral_invariant(const FilteredComplex& complex, const Chain& cycle);

/// All actions shifted by `energy` (change of reference class).
FilteredComplex shift_reference(const FilteredComplex& complex, const Rational& energy);

/// Re-anchors every capping along a path between base points. `offset` is
/// the integral of H(x') - H(x); actions are unchanged.
FilteredComplex change_basepoint(const FilteredComplex& complex, const Rational& offset,
                                 const std::string& new_anchor_suffix);

/// Column reduction data. `pivot_column[row]` is the reduced column whose
/// lowest (highest-action) entry is `row`, or npos.
struct Reduction {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order;     // position -> local generator index
    std::vector<std::size_t> position;  // local generator index -> position
    std::vector<std::vector<std::size_t>> reduced;  // by position, entries are positions
    std::vector<std::size_t> pivot_column;
    std::size_t rank = 0;
};

}  // namespace floerlab
