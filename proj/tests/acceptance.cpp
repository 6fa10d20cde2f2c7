// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "floerlab/closed_open.hpp"
#include "floerlab/error.hpp"
#include "floerlab/symprod.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace floerlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& name, double budget, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const ValidationError& e) {
        out.ok = false;
        out.detail = std::string(e.what()) + " [" + e.witness() + "]";
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < budget;
    const bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::string detail = out.detail;
    if (out.ok && !in_time) detail = "over time budget";
    std::printf("%s criterion %d: %s (%.3fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL", n, name.c_str(), secs,
                budget, detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
}

struct Instance {
    SurfaceLinkModel model;
    MorseHamiltonian h;
};

Instance standard(int g, int k, const Rational& eps, Admissibility mode = Admissibility::strict)
{
    Instance in{build_link_model(g, k, mode), {}};
    in.h = build_morse_hamiltonian(in.model, eps, standard_profile(in.model));
    return in;
}

std::string tag(int g, int k) { return "g=" + std::to_string(g) + ",k=" + std::to_string(k); }

const std::vector<std::pair<int, int>> kCycleModels{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
const std::vector<Rational> kEpsilons{Rational(1, 10), Rational(1, 50), Rational(1, 100)};

// Value of sum_i H(y_i^+) read directly off the profile descriptor.
Rational top_value_oracle(const SurfaceLinkModel& model, const Rational& eps)
{
    Rational total = 0;
    for (const auto& p : standard_profile(model).points)
        if (p.role == CriticalRole::circle_max) total += eps * p.f_value;
    return total;
}

}  // namespace

int main()
{
    criterion(1, "HF rank per Novikov period is 2^d for d = 1..4", 5.0, [] {
        Outcome o;
        const std::vector<std::pair<int, int>> models{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {0, 4}, {1, 3}, {2, 2}};
        std::ostringstream seen;
        for (const auto& [g, k] : models)
            for (const auto& eps : kEpsilons) {
                const auto in = standard(g, k, eps, Admissibility::single_circle_allowed);
                const auto hf = build_hf_complex(in.model, in.h);
                const auto rep = homology(hf.complex, false);
                const long expect = 1L << in.model.d;
                o.require(rep.rank_per_period == expect, tag(g, k) + " rank " + to_string(rep.rank_per_period));
                const std::size_t dense = oracle::homology_rank(hf.complex);
                o.require(static_cast<long>(dense) == expect * hf.complex.window().periods(),
                          tag(g, k) + " dense oracle rank " + std::to_string(dense));
                if (eps == kEpsilons.front()) seen << " d=" << in.model.d << ":" << to_string(rep.rank_per_period);
            }
        if (o.ok) o.detail = "ranks" + seen.str();
        return o;
    });

    criterion(2, "dc = 0 and [c] != 0 for g <= 1, k in {2,3,4}", 5.0, [] {
        Outcome o;
        std::size_t gens = 0;
        for (const auto& [g, k] : kCycleModels) {
            const auto in = standard(g, k, Rational(1, 10));
            const auto pfh = build_pfh_complex(in.model, in.h);
            const auto& cx = pfh.complex;
            gens += cx.size();
            const Chain c = build_cycle_c(pfh);
            o.require(cx.is_cycle(c), tag(g, k) + " dc != 0");
            o.require(!is_boundary(cx, c), tag(g, k) + " [c] = 0");
            // Certificate: the dual of alpha_+ at T^0 is a cocycle pairing to 1 with c.
            const std::size_t ap = cx.index_of(pfh.alpha_plus_index, 0);
            bool cocycle = true;
            for (std::size_t i = 0; i < cx.size() && cocycle; ++i) {
                const Chain b = cx.boundary_of(i);
                cocycle = !std::binary_search(b.begin(), b.end(), ap);
            }
            o.require(cocycle, tag(g, k) + " alpha_+ dual is not a cocycle");
            o.require(std::binary_search(c.begin(), c.end(), ap), tag(g, k) + " c misses alpha_+");
        }
        if (o.ok) o.detail = std::to_string(gens) + " PFH generators, cocycle certificate for every model";
        return o;
    });

    criterion(3, "Phi(c) = (y+, A+), chain map, every entry has I = 0 and E = 0", 5.0, [] {
        Outcome o;
        std::size_t examined = 0;
        for (const auto& [g, k] : kCycleModels) {
            const auto in = standard(g, k, Rational(1, 10));
            const auto map = build_closed_open(in.model, in.h);
            examined += map.candidates_examined;
            o.require(!chain_map_defect(map), tag(g, k) + " not a chain map");
            const SigmaClass s = sigma_class(map);
            o.require(s.image_is_unit, tag(g, k) + " Phi(c) is not the unit");
            o.require(map.survivors.size() == 1, tag(g, k) + " survivors != 1");
            for (const auto& cand : map.survivors) {
                o.require(cand.source_base == map.source.alpha_plus_index, tag(g, k) + " survivor source");
                o.require(map.target.chords[cand.chord].minus_count() == 0, tag(g, k) + " survivor target");
            }
            for (const auto& e : map.entries) {
                const auto& alpha = map.source.orbit_sets[map.source.complex.base_of(e.source)];
                const auto& y = map.target.chords[map.target.complex.base_of(e.target)];
                long c = 0;
                for (long x : e.curve_class.coeff_B) c += x;
                const auto ie = co_index_energy(y.minus_count(), e.curve_class.coeff_Sigma, c, in.model.k(),
                                                hamiltonian_value(alpha, in.h), hamiltonian_value(y, in.h));
                o.require(ie.index == 0 && ie.energy == 0, tag(g, k) + " entry violates I = 0, E = 0");
            }
        }
        if (o.ok) o.detail = std::to_string(examined) + " (y, m, c) candidates examined, target y+ in every model";
        return o;
    });

    criterion(4, "c_hf <= c_pfh + integral over eps, base points and profiles; lhs = rhs = eps d", 5.0, [] {
        Outcome o;
        std::size_t rows = 0;
        for (const auto& [g, k] : kCycleModels)
            for (const auto& eps : kEpsilons) {
                const auto in = standard(g, k, eps);
                const auto pfh = build_pfh_complex(in.model, in.h);
                const auto hf = build_hf_complex(in.model, in.h);
                const Rational expect = top_value_oracle(in.model, eps);
                o.require(expect == eps * in.model.d, tag(g, k) + " oracle disagrees with eps d");
                const Chain c = build_cycle_c(pfh);
                const std::size_t unit = unit_chain(hf).front();
                for (const auto& x : hf.chords) {
                    const auto row = spectral_compare(pfh.complex, c, hf.complex, unit, hamiltonian_value(x, in.h));
                    ++rows;
                    o.require(row.holds, tag(g, k) + " eps=" + to_string(eps) + " x=" + x.label() + " fails");
                    o.require(row.lhs == expect && row.rhs == expect,
                              tag(g, k) + " eps=" + to_string(eps) + " x=" + x.label() + " lhs " + to_string(row.lhs) +
                                  " rhs " + to_string(row.rhs));
                }
            }
        if (o.ok) o.detail = std::to_string(rows) + " rows, equality in every row";
        return o;
    });

    criterion(5, "shift law for 100 random rational shifts", 1.0, [] {
        Outcome o;
        const auto in = standard(0, 3, Rational(1, 10));
        const auto pfh = build_pfh_complex(in.model, in.h);
        const auto hf = build_hf_complex(in.model, in.h);
        const Chain c = build_cycle_c(pfh);
        const Chain u = unit_chain(hf);
        const Rational c0 = spectral_invariant(pfh.complex, c);
        const Rational u0 = spectral_invariant(hf.complex, u);
        std::mt19937_64 rng(2024);
        for (int t = 0; t < 100; ++t) {
            const Rational shift = make_rational(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97));
            o.require(spectral_invariant(shift_reference(pfh.complex, shift), c) == c0 + shift,
                      "PFH shift " + to_string(shift));
            o.require(spectral_invariant(shift_reference(hf.complex, shift), u) == u0 + shift,
                      "HF shift " + to_string(shift));
        }
        if (o.ok) o.detail = "PFH sigma and HF unit, 100 shifts each";
        return o;
    });

    criterion(6, "index gap = 2(k+1) energy gap on 1000 random pairs per k", 1.0, [] {
        Outcome o;
        std::mt19937_64 rng(8);
        std::uniform_int_distribution<long> coef(-7, 7);
        for (int k = 2; k <= 4; ++k) {
            const auto model = build_link_model(0, k);
            for (int t = 0; t < 1000; ++t) {
                RelClass a = RelClass::zero(ClassContext::HF, k, "A");
                RelClass b = a;
                // raw coefficient totals for the oracle: disk classes count 1, complements k, Sigma k+1
                long units = 0;
                for (int i = 0; i <= k; ++i) {
                    const long x = coef(rng), y = coef(rng), z = coef(rng), w = coef(rng);
                    b.add_disk(i, x).add_phi_disk(i, y).add_disk_complement(i, z).add_phi_disk_complement(i, w);
                    units += x + y + k * (z + w);
                }
                const long s = coef(rng);
                b.add_sigma(s);
                units += s * (k + 1);
                const auto gap = monotonicity_gap(a, b, model);
                o.require(gap.consistent, "inconsistent gap at k=" + std::to_string(k));
                o.require(gap.index_gap == -2 * units, "index gap oracle at k=" + std::to_string(k));
                o.require(gap.energy_gap == make_rational(-units, k + 1), "energy gap oracle at k=" + std::to_string(k));
            }
        }
        if (o.ok) o.detail = "3000 pairs";
        return o;
    });

    criterion(7, "index comparison on the exhaustive grid and 10^4 random tuples", 2.0, [] {
        Outcome o;
        long count = 0;
        std::function<void(long, int, std::vector<int>&, std::vector<std::vector<int>>&)> parts =
            [&](long b, int maxp, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
                if (b == 0) {
                    out.push_back(cur);
                    return;
                }
                for (int p = static_cast<int>(std::min<long>(b, maxp)); p >= 1; --p) {
                    cur.push_back(p + 1);
                    parts(b - p, p, cur, out);
                    cur.pop_back();
                }
            };
        for (int d = 1; d <= 4; ++d)
            for (long b = 0; b <= 4; ++b) {
                std::vector<std::vector<int>> degs;
                std::vector<int> cur;
                parts(b, static_cast<int>(b), cur, degs);
                for (const auto& deg : degs)
                    for (long delta = -3; delta <= 3; ++delta)
                        for (long c1 = -3; c1 <= 3; ++c1)
                            for (long mu = -4; mu <= 4; ++mu) {
                                const BranchedCoverData data{d, d - b, deg, delta, c1, mu};
                                const auto r = index_compare(data);
                                o.require(r.equal && r.lhs == 2 * c1 + b + 2 * delta + mu, "grid tuple");
                                ++count;
                            }
            }
        std::mt19937_64 rng(77);
        for (int t = 0; t < 10000; ++t) {
            BranchedCoverData data;
            data.d = 1 + static_cast<int>(rng() % 20);
            const int nb = static_cast<int>(rng() % 6);
            for (int j = 0; j < nb; ++j) data.branch_degrees.push_back(2 + static_cast<int>(rng() % 6));
            data.chi_F = data.d - data.branching();
            data.double_points = static_cast<long>(rng() % 41) - 20;
            data.c1_u = static_cast<long>(rng() % 41) - 20;
            data.maslov_u = static_cast<long>(rng() % 81) - 40;
            o.require(index_compare(data).equal, "random tuple");
            ++count;
        }
        if (o.ok) o.detail = std::to_string(count) + " tuples";
        return o;
    });

    criterion(8, "discriminant windings m - 1 and +-2, Jacobian identity", 5.0, [] {
        Outcome o;
        double worst = 0.0;
        for (int m = 2; m <= 5; ++m) {
            const double w = discriminant_winding_oracle(LocalModel::branch(m)).winding;
            worst = std::max(worst, std::abs(w - (m - 1)));
            o.require(std::abs(w - (m - 1)) < 1e-6, "branch m=" + std::to_string(m));
        }
        const double pos = discriminant_winding_oracle(LocalModel::crossing({2.0, 0.0}, {1.0, 0.0})).winding;
        const double neg = discriminant_winding_oracle(LocalModel::crossing({2.0, 0.0}, {1.0, 0.0}, true)).winding;
        worst = std::max({worst, std::abs(pos - 2.0), std::abs(neg + 2.0)});
        o.require(std::abs(pos - 2.0) < 1e-6, "positive double point");
        o.require(std::abs(neg + 2.0) < 1e-6, "negative double point");
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double jac = 0.0;
        for (int t = 0; t < 100; ++t) {
            std::vector<std::complex<double>> z;
            for (int i = 0; i < 2 + t % 5; ++i) z.emplace_back(u(rng), u(rng));
            jac = std::max(jac, symmetric_jacobian_error(z));
        }
        o.require(jac < 1e-9, "Jacobian relative error " + std::to_string(jac));
        if (o.ok) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "max winding deviation %.2e, max Jacobian error %.2e", worst, jac);
            o.detail = buf;
        }
        return o;
    });

    criterion(9, "cobordism map fixes (alpha_I, Z_I), composition is the identity on [c], energy formula", 1.0, [] {
        Outcome o;
        for (const auto& [g, k] : kCycleModels) {
            const auto in = standard(g, k, Rational(1, 10));
            const auto pfh = build_pfh_complex(in.model, in.h);
            const auto map = cobordism_identity(pfh, in.h, in.model);
            for (int b : pfh.top_generators) {
                const std::size_t i = pfh.complex.index_of(b, 0);
                o.require(map.apply({i}) == Chain{i}, tag(g, k) + " moves " + pfh.complex.generator(i).label);
            }
            const Chain c = build_cycle_c(pfh);
            o.require(compose(map, map).apply(c) == c, tag(g, k) + " composition");
        }
        const auto in = standard(1, 3, Rational(1, 50));
        const auto pfh = build_pfh_complex(in.model, in.h);
        std::mt19937_64 rng(13);
        for (int t = 0; t < 100; ++t) {
            const int top = pfh.top_generators[rng() % pfh.top_generators.size()];
            const int bottom = static_cast<int>(rng() % pfh.orbit_sets.size());
            const long m = static_cast<long>(rng() % 7) - 3;
            Rational direct = m;
            for (const auto& [id, mult] : pfh.orbit_sets[top].factors) direct += mult * in.h.point(id).value;
            for (const auto& [id, mult] : pfh.orbit_sets[bottom].factors) direct -= mult * in.h.point(id).value;
            o.require(cobordism_energy(pfh.orbit_sets[top], pfh.orbit_sets[bottom], m, in.h) == direct,
                      "energy formula");
            o.require(cobordism_energy_from_cappings(pfh, top, bottom, m) == direct, "energy from cappings");
        }
        if (o.ok) o.detail = "6 models, 100 energy triples";
        return o;
    });

    criterion(10, "action-<=L spans are subcomplexes for 50 random levels per built complex", 2.0, [] {
        Outcome o;
        std::mt19937_64 rng(10);
        std::size_t complexes = 0;
        auto check = [&](const FilteredComplex& cx, const std::string& what) {
            ++complexes;
            // Actions scaled to integers by the common denominator, so each
            // level test is an integer comparison.
            mpz_class den = 1;
            std::vector<Rational> actions(cx.size());
            for (std::size_t i = 0; i < cx.size(); ++i) {
                actions[i] = cx.action(i);
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), actions[i].get_den().get_mpz_t());
            }
            std::vector<long> scaled(cx.size());
            for (std::size_t i = 0; i < cx.size(); ++i) {
                const mpz_class v = actions[i].get_num() * (den / actions[i].get_den());
                if (!v.fits_slong_p()) throw std::overflow_error("scaled action does not fit");
                scaled[i] = v.get_si();
            }
            const auto [lo_it, hi_it] = std::minmax_element(scaled.begin(), scaled.end());
            const Rational lo(*lo_it, den), hi(*hi_it, den);
            std::vector<Chain> bd(cx.size());
            for (std::size_t i = 0; i < cx.size(); ++i) bd[i] = cx.boundary_of(i);
            for (int t = 0; t < 50; ++t) {
                // levels both at generator actions and strictly between them
                const Rational level = t % 2 ? actions[rng() % actions.size()]
                                             : lo + (hi - lo + 1) * make_rational(static_cast<long>(rng() % 1000), 999) -
                                                   Rational(1, 2);
                const long cut = floor_to_long(level * den);
                bool closed = true;
                for (std::size_t i = 0; i < cx.size() && closed; ++i)
                    if (scaled[i] <= cut)
                        for (std::size_t j : bd[i])
                            if (scaled[j] > cut) closed = false;
                o.require(closed, what + " not closed at level " + to_string(level));
                o.require(cx.is_subcomplex_below(level) == closed, what + " library disagrees at " + to_string(level));
            }
        };
        for (const auto& [g, k] : kCycleModels) {
            const auto in = standard(g, k, Rational(1, 10));
            check(build_pfh_complex(in.model, in.h).complex, "PFH " + tag(g, k));
            check(build_hf_complex(in.model, in.h).complex, "HF " + tag(g, k));
        }
        if (o.ok) o.detail = std::to_string(complexes) + " complexes";
        return o;
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
