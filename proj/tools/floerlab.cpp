// floerlab: build the Morse-model complexes, run the invariant checks, and
// write spectral / rank tables.

#include "floerlab/closed_open.hpp"
#include "floerlab/config.hpp"
#include "floerlab/error.hpp"
#include "floerlab/index.hpp"
#include "floerlab/serialize.hpp"
#include "floerlab/symprod.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace floerlab;

namespace {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

Level log_level()
{
    const char* env = std::getenv("FLOERLAB_LOG");
    if (!env) return Level::warn;
    const std::string v = env;
    if (v == "error" || v == "quiet") return Level::error;
    if (v == "info") return Level::info;
    if (v == "debug") return Level::debug;
    return Level::warn;
}

void log(Level level, const std::string& msg)
{
    static const Level threshold = log_level();
    static const char* names[] = {"error", "warn", "info", "debug"};
    if (level <= threshold) std::cerr << "[floerlab " << names[static_cast<int>(level)] << "] " << msg << '\n';
}

std::string tag(const RunConfig& c, const Rational& eps)
{
    std::string e = to_string(eps);
    for (char& ch : e)
        if (ch == '/') ch = '-';
    return "g" + std::to_string(c.genus) + "_k" + std::to_string(c.k) + "_eps" + e;
}

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ModelError("cannot write " + path.string());
    out << text;
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs fn over each index in parallel and returns results in index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn)
{
    std::vector<std::future<T>> futures;
    for (std::size_t i = 0; i < n; ++i) futures.push_back(std::async(std::launch::async, fn, i));
    std::vector<T> out;
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

struct Instance {
    SurfaceLinkModel model;
    MorseHamiltonian h;
    PfhComplex pfh;
    HfComplex hf;
};

Instance make_instance(const RunConfig& c, const Rational& eps)
{
    Instance in;
    in.model = build_link_model(c.genus, c.k);
    in.h = build_morse_hamiltonian(in.model, eps, standard_profile(in.model));
    in.pfh = build_pfh_complex(in.model, in.h, c.window);
    in.hf = build_hf_complex(in.model, in.h, c.window);
    return in;
}

std::vector<ReebChordTuple> basepoints(const RunConfig& c)
{
    std::vector<ReebChordTuple> out;
    for (const auto& b : c.basepoints) out.push_back(parse_chord(b));
    if (out.empty()) out.push_back(parse_chord(std::string(c.k + c.genus, '+')));
    return out;
}

// ---------------------------------------------------------------- build

int cmd_build(const RunConfig& c)
{
    fs::create_directories(c.output_dir);
    auto docs = parallel_map<std::pair<std::string, std::string>>(c.epsilons.size(), [&](std::size_t i) {
        const Instance in = make_instance(c, c.epsilons[i]);
        Json pfh = to_json(in.pfh.complex);
        pfh["model"] = to_json(in.model);
        pfh["hamiltonian"] = to_json(in.h);
        pfh["cycle_c"] = in.pfh.top_generators;
        pfh["seed"] = c.seed;
        Json hf = to_json(in.hf.complex);
        hf["model"] = to_json(in.model);
        hf["unit"] = in.hf.plus_index;
        hf["seed"] = c.seed;
        return std::make_pair(dump(pfh), dump(hf));
    });
    for (std::size_t i = 0; i < docs.size(); ++i) {
        const std::string t = tag(c, c.epsilons[i]);
        write_file(fs::path(c.output_dir) / ("pfh_" + t + ".json"), docs[i].first);
        write_file(fs::path(c.output_dir) / ("hf_" + t + ".json"), docs[i].second);
        log(Level::info, "wrote pfh_" + t + ".json and hf_" + t + ".json");
    }
    std::cout << "built " << 2 * docs.size() << " complexes in " << c.output_dir << '\n';
    return 0;
}

// ---------------------------------------------------------------- verify

struct Suite {
    explicit Suite(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    long checks = 0;
    std::vector<std::string> witnesses;
    Json details = Json::object();

    void check(bool ok, const std::string& witness)
    {
        ++checks;
        if (!ok) {
            passed = false;
            if (witnesses.size() < 20) witnesses.push_back(witness);
        }
    }
};

// A differential entry from alpha_+ to a generator with nonzero boundary;
// then d^2(alpha_+) picks up that boundary.
FilteredComplex corrupt(const PfhComplex& pfh)
{
    const auto& cx = pfh.complex;
    std::vector<DifferentialEntry> entries = cx.entries();
    for (std::size_t b = 0; b < cx.base_size(); ++b) {
        if (cx.base_action(static_cast<int>(b)) >= cx.base_action(pfh.alpha_plus_index)) continue;
        if (cx.boundary_of(cx.index_of(static_cast<int>(b), 0)).empty()) continue;
        entries.push_back({pfh.alpha_plus_index, static_cast<int>(b), 0});
        break;
    }
    return build_complex(cx.base_generators(), entries, cx.period_action(), cx.window(), cx.period_class(),
                         cx.reference_term());
}

Suite suite_complexes(const RunConfig& c, const std::vector<Instance>& instances)
{
    Suite s{"complex_d2_and_filtration"};
    std::mt19937_64 rng(c.seed);
    for (const auto& in : instances) {
        if (c.inject_fault == "corrupt_differential") {
            try {
                corrupt(in.pfh);
                s.check(false, "fault injection did not trip the d^2 check");
            } catch (const ValidationError& e) {
                s.check(false, std::string(e.what()) + ": " + e.witness());
            }
        }
        for (const FilteredComplex* cx : {&in.pfh.complex, &in.hf.complex}) {
            for (std::size_t i = 0; i < cx->size(); ++i) {
                const Chain dd = cx->boundary(cx->boundary_of(i));
                if (!dd.empty())
                    s.check(false, cx->name() + ": d^2 " + cx->generator(i).label + " -> " + cx->generator(dd.front()).label);
            }
            s.check(true, "");
            std::uniform_int_distribution<long> num(-400, 400);
            for (int trial = 0; trial < 50; ++trial) {
                const Rational level(num(rng), 200);
                s.check(cx->is_subcomplex_below(level), cx->name() + " not closed below " + to_string(level));
            }
        }
    }
    return s;
}

Suite suite_cycle_and_map(const std::vector<Instance>& instances)
{
    Suite s{"cycle_c_and_closed_open"};
    for (const auto& in : instances) {
        try {
            const ClosedOpenMap map = build_closed_open(in.model, in.h, in.pfh);
            const SigmaClass sigma = sigma_class(map);
            s.check(sigma.nonzero, in.pfh.complex.name() + ": [c] is zero");
            s.check(sigma.image_is_unit, in.pfh.complex.name() + ": Phi(c) is not (y+, A+)");
            for (const auto& e : map.entries)
                s.check(e.index_energy.index == 0 && e.index_energy.energy == 0,
                        "entry with I=" + std::to_string(e.index_energy.index) + " E=" + to_string(e.index_energy.energy));
            s.details[in.pfh.complex.name()] = {{"candidates_examined", map.candidates_examined},
                                                 {"survivors", map.survivors.size()},
                                                 {"entries", map.entries.size()}};
        } catch (const ValidationError& e) {
            s.check(false, std::string(e.what()) + ": " + e.witness());
        }
    }
    return s;
}

Suite suite_hf_rank(const RunConfig& c, const std::vector<Instance>& instances)
{
    Suite s{"hf_rank_law"};
    for (const auto& in : instances) {
        const auto r = homology(in.hf.complex, false);
        s.check(r.rank_per_period == Rational(1L << in.model.d), in.hf.complex.name() + " rank per period " +
                                                                    to_string(r.rank_per_period));
    }
    for (int d : c.rank_degrees) {
        const auto model = build_link_model(0, d, Admissibility::single_circle_allowed);
        const auto h = build_morse_hamiltonian(model, c.epsilons.front(), standard_profile(model));
        const auto r = homology(build_hf_complex(model, h, c.window).complex, false);
        s.check(r.rank_per_period == Rational(1L << d), "d=" + std::to_string(d) + " rank " + to_string(r.rank_per_period));
    }
    return s;
}

Suite suite_monotonicity(const RunConfig& c)
{
    Suite s{"monotonicity"};
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<long> coeff(-5, 5);
    const auto model = build_link_model(c.genus, c.k);
    for (int t = 0; t < c.random_trials; ++t) {
        RelClass a = RelClass::zero(ClassContext::HF, c.k, "A0");
        RelClass b = a;
        for (RelClass* x : {&a, &b}) {
            for (int i = 0; i <= c.k; ++i) {
                x->add_disk(i, coeff(rng));
                x->add_phi_disk(i, coeff(rng));
                x->add_disk_complement(i, coeff(rng));
                x->add_phi_disk_complement(i, coeff(rng));
            }
            x->add_sigma(coeff(rng));
        }
        const auto gap = monotonicity_gap(a, b, model);
        s.check(gap.consistent, "index gap " + std::to_string(gap.index_gap) + " vs energy gap " + to_string(gap.energy_gap));
    }
    return s;
}

Suite suite_index_comparison(const RunConfig& c)
{
    Suite s{"index_comparison"};
    auto run = [&](const BranchedCoverData& data) {
        const auto r = index_compare(data);
        s.check(r.equal, "d=" + std::to_string(data.d) + " b=" + std::to_string(data.branching()) + " lhs=" +
                             std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs));
    };
    std::mt19937_64 rng(c.seed);
    for (int t = 0; t < c.random_trials; ++t) {
        BranchedCoverData data;
        data.d = std::uniform_int_distribution<int>(1, 8)(rng);
        const int nb = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int j = 0; j < nb; ++j) data.branch_degrees.push_back(std::uniform_int_distribution<int>(2, 4)(rng));
        data.chi_F = data.d - data.branching();
        data.double_points = std::uniform_int_distribution<long>(-5, 5)(rng);
        data.c1_u = std::uniform_int_distribution<long>(-5, 5)(rng);
        data.maslov_u = std::uniform_int_distribution<long>(-8, 8)(rng);
        run(data);
    }
    return s;
}

Suite suite_winding(const RunConfig& c)
{
    Suite s{"discriminant_winding"};
    double worst = 0.0;
    for (int m = 2; m <= 5; ++m) {
        const double w = discriminant_winding_oracle(LocalModel::branch(m)).winding;
        worst = std::max(worst, std::abs(w - (m - 1)));
        s.check(std::abs(w - (m - 1)) < 1e-6, "branch m=" + std::to_string(m) + " winding " + std::to_string(w));
    }
    const double pos = discriminant_winding_oracle(LocalModel::crossing({2, 0}, {1, 0}, false)).winding;
    const double neg = discriminant_winding_oracle(LocalModel::crossing({2, 0}, {1, 0}, true)).winding;
    s.check(std::abs(pos - 2) < 1e-6, "positive crossing winding " + std::to_string(pos));
    s.check(std::abs(neg + 2) < 1e-6, "negative crossing winding " + std::to_string(neg));
    worst = std::max({worst, std::abs(pos - 2), std::abs(neg + 2)});
    std::mt19937_64 rng(c.seed);
    std::normal_distribution<double> g(0.0, 1.0);
    double worst_jac = 0.0;
    for (int t = 0; t < 100; ++t) {
        std::vector<std::complex<double>> z(2 + t % 5);
        for (auto& x : z) x = {g(rng), g(rng)};
        const double err = symmetric_jacobian_error(z);
        worst_jac = std::max(worst_jac, err);
        s.check(err < 1e-9, "Jacobian relative error " + std::to_string(err));
    }
    s.details = {{"max_winding_deviation", worst}, {"max_jacobian_error", worst_jac}};
    return s;
}

std::vector<SpectralRow> spectral_rows(const RunConfig& c, const std::vector<Instance>& instances)
{
    std::vector<SpectralRow> rows;
    for (const auto& in : instances)
        for (const auto& x : basepoints(c)) rows.push_back(spectral_compare(in.model, in.h, in.pfh, in.hf, x));
    return rows;
}

Suite suite_spectral(const std::vector<SpectralRow>& rows)
{
    Suite s{"spectral_comparison"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        s.check(r.holds, "eps=" + to_string(r.epsilon) + " x=" + r.basepoint + ": " + to_string(r.lhs) + " > " + to_string(r.rhs));
        if (i > 0 && rows[i - 1].epsilon == r.epsilon)
            s.check(rows[i - 1].rhs == r.rhs, "rhs depends on the base point at eps=" + to_string(r.epsilon));
    }
    return s;
}

Suite suite_cobordism(const RunConfig& c, const std::vector<Instance>& instances)
{
    Suite s{"cobordism_identity"};
    std::mt19937_64 rng(c.seed);
    for (const auto& in : instances) {
        const CobordismMap f = cobordism_identity(in.pfh, in.h, in.model);
        const Chain cyc = build_cycle_c(in.pfh);
        s.check(f.apply(cyc) == cyc, "cobordism map moves c");
        s.check(compose(f, f).apply(cyc) == cyc, "composition is not the identity on c");
        const auto& tops = in.pfh.top_generators;
        for (int t = 0; t < 100; ++t) {
            const int top = tops[std::uniform_int_distribution<std::size_t>(0, tops.size() - 1)(rng)];
            const int bottom = static_cast<int>(std::uniform_int_distribution<std::size_t>(0, in.pfh.orbit_sets.size() - 1)(rng));
            const long m = std::uniform_int_distribution<long>(-3, 3)(rng);
            s.check(cobordism_energy(in.pfh.orbit_sets[top], in.pfh.orbit_sets[bottom], m, in.h) ==
                        cobordism_energy_from_cappings(in.pfh, top, bottom, m),
                    "energy mismatch for " + in.pfh.orbit_sets[bottom].label(in.h));
        }
    }
    return s;
}

int cmd_verify(const RunConfig& c)
{
    fs::create_directories(c.output_dir);
    const auto instances = parallel_map<Instance>(c.epsilons.size(), [&](std::size_t i) {
        return make_instance(c, c.epsilons[i]);
    });
    const auto rows = spectral_rows(c, instances);
    std::vector<Suite> suites;
    suites.push_back(suite_complexes(c, instances));
    suites.push_back(suite_hf_rank(c, instances));
    suites.push_back(suite_cycle_and_map(instances));
    suites.push_back(suite_monotonicity(c));
    suites.push_back(suite_index_comparison(c));
    suites.push_back(suite_winding(c));
    suites.push_back(suite_spectral(rows));
    suites.push_back(suite_cobordism(c, instances));

    Json report = Json::object();
    bool all = true;
    for (const auto& s : suites) {
        all = all && s.passed;
        report["suites"][s.name] = {{"passed", s.passed}, {"checks", s.checks}, {"witnesses", s.witnesses}, {"details", s.details}};
        std::cout << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)\n";
        for (const auto& w : s.witnesses) std::cout << "  witness: " << w << '\n';
    }
    Json table = Json::array();
    for (const auto& r : rows) table.push_back(to_json(r));
    report["spectral_table"] = table;
    report["passed"] = all;
    report["seed"] = c.seed;
    write_file(fs::path(c.output_dir) / "verify.json", dump(report));
    std::cout << (all ? "all checks passed" : "verification FAILED") << '\n';
    return all ? 0 : 1;
}

// ---------------------------------------------------------------- report

std::string svg_plot(const std::vector<SpectralRow>& rows)
{
    // c_hf and c_pfh + integral against epsilon, one pair of series per base point.
    std::map<std::string, std::vector<const SpectralRow*>> series;
    double xmax = 0, ymax = 0;
    for (const auto& r : rows) {
        series[r.basepoint].push_back(&r);
        xmax = std::max(xmax, r.epsilon.get_d());
        ymax = std::max({ymax, r.lhs.get_d(), r.rhs.get_d()});
    }
    if (xmax == 0) xmax = 1;
    if (ymax == 0) ymax = 1;
    const double w = 480, h = 320, pad = 40;
    auto px = [&](double x) { return pad + (w - 2 * pad) * x / xmax; };
    auto py = [&](double y) { return h - pad - (h - 2 * pad) * y / ymax; };
    char buf[128];
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    out << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\"" << h - pad << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << w / 2 << "\" y=\"" << h - 8 << "\">epsilon</text>\n";
    for (const auto& [name, pts] : series) {
        for (int which = 0; which < 2; ++which) {
            out << "<polyline fill=\"none\" stroke=\"" << (which == 0 ? "steelblue" : "darkorange") << "\" points=\"";
            for (const SpectralRow* r : pts) {
                std::snprintf(buf, sizeof buf, "%.3f,%.3f ", px(r->epsilon.get_d()),
                              py(which == 0 ? r->lhs.get_d() : r->rhs.get_d()));
                out << buf;
            }
            out << "\"><title>" << name << (which == 0 ? " c_hf" : " c_pfh+integral") << "</title></polyline>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

int cmd_report(const RunConfig& c)
{
    std::vector<SpectralRow> rows;
    std::vector<RankRow> ranks;
    for (const auto& eps : c.epsilons) {
        const std::string t = tag(c, eps);
        const fs::path pfh_path = fs::path(c.output_dir) / ("pfh_" + t + ".json");
        const fs::path hf_path = fs::path(c.output_dir) / ("hf_" + t + ".json");
        for (const auto& p : {pfh_path, hf_path})
            if (!fs::exists(p))
                throw ModelError("missing build artifact " + p.string() +
                                 "; run `floerlab build` with the same config and --out first");
        const Json pj = Json::parse(read_file(pfh_path));
        const Json hj = Json::parse(read_file(hf_path));
        const FilteredComplex pfh = complex_from_json(pj);
        const FilteredComplex hf = complex_from_json(hj);
        if (pfh.window() != c.window || hf.window() != c.window)
            throw ModelError("artifact window differs from the config; rebuild with the same --window");
        Chain cycle;
        for (int b : pj.at("cycle_c").get<std::vector<int>>()) cycle.push_back(pfh.index_of(b, 0));
        std::sort(cycle.begin(), cycle.end());
        const std::size_t unit = hf.index_of(hj.at("unit").get<int>(), 0);

        for (const auto& x : basepoints(c)) {
            int base = -1;
            for (std::size_t b = 0; b < hf.base_size(); ++b)
                if (hf.generator(hf.index_of(static_cast<int>(b), 0)).label == x.label()) base = static_cast<int>(b);
            if (base < 0) throw ModelError("base point " + x.label() + " is not a chord of the built model");
            // With the trivial capping the HF action of the chord is the integral of H along it.
            SpectralRow row = spectral_compare(pfh, cycle, hf, unit, hf.base_action(base));
            row.genus = c.genus;
            row.k = c.k;
            row.d = c.k + c.genus;
            row.epsilon = eps;
            row.basepoint = x.label();
            rows.push_back(row);
        }
        for (const auto& [name, cx] : {std::pair<std::string, const FilteredComplex*>{"PFH", &pfh}, {"HF", &hf}}) {
            const auto r = homology(*cx, false);
            ranks.push_back({c.genus, c.k, c.k + c.genus, name + "(eps=" + to_string(eps) + ")", cx->base_size(),
                             r.periods, r.total_rank, r.rank_per_period});
        }
    }
    for (int d : c.rank_degrees) {
        const auto model = build_link_model(0, d, Admissibility::single_circle_allowed);
        const auto h = build_morse_hamiltonian(model, c.epsilons.front(), standard_profile(model));
        const auto cx = build_hf_complex(model, h, c.window).complex;
        const auto r = homology(cx, false);
        ranks.push_back({0, d, d, "HF", cx.base_size(), r.periods, r.total_rank, r.rank_per_period});
    }

    const fs::path out(c.output_dir);
    if (c.wants("csv")) {
        write_file(out / "spectral_table.csv", spectral_table_csv(rows));
        write_file(out / "rank_table.csv", rank_table_csv(ranks));
    }
    if (c.wants("json")) {
        Json sj = Json::array(), rj = Json::array();
        for (const auto& r : rows) sj.push_back(to_json(r));
        for (const auto& r : ranks) rj.push_back(to_json(r));
        write_file(out / "spectral_table.json", dump(sj));
        write_file(out / "rank_table.json", dump(rj));
    }
    if (c.plots) write_file(out / "spectral_vs_epsilon.svg", svg_plot(rows));
    std::cout << "wrote " << rows.size() << " spectral rows and " << ranks.size() << " rank rows to " << c.output_dir
              << '\n';
    bool all = true;
    for (const auto& r : rows) all = all && r.holds;
    return all ? 0 : 1;
}

Window parse_window(const std::string& text)
{
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const long n = std::stol(text);
            if (n < 0) throw ModelError("window radius must be nonnegative");
            return {-n, n};
        }
        return {std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw ModelError("--window expects LO:HI or a radius N, got " + text);
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Morse-model PFH / HF complexes, spectral invariants and the closed-open map"};
    app.require_subcommand(1);
    std::string config_path, out_dir, window_text, formats_text;
    std::uint64_t seed = 0;
    bool plots = false, no_plots = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "seed for randomized sweeps");
        sub->add_option("--window", window_text, "Novikov window LO:HI, or N for -N:N");
        sub->add_option("--formats", formats_text, "comma separated list of json,csv");
        sub->add_flag("--plots", plots, "write SVG plots");
        sub->add_flag("--no-plots", no_plots, "do not write plots");
    };
    CLI::App* build = app.add_subcommand("build", "write the PFH and HF complexes as JSON");
    CLI::App* verify = app.add_subcommand("verify", "run the invariant checks");
    CLI::App* report = app.add_subcommand("report", "write spectral and rank tables from built complexes");
    for (auto* sub : {build, verify, report}) add_common(sub);
    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (!out_dir.empty()) c.output_dir = out_dir;
        for (auto* sub : {build, verify, report})
            if (sub->parsed() && sub->count("--seed")) c.seed = seed;
        if (!window_text.empty()) c.window = parse_window(window_text);
        if (!formats_text.empty()) {
            c.formats.clear();
            std::stringstream ss(formats_text);
            for (std::string f; std::getline(ss, f, ',');) c.formats.push_back(f);
        }
        if (plots) c.plots = true;
        if (no_plots) c.plots = false;
        validate(c);
        log(Level::debug, "config: g=" + std::to_string(c.genus) + " k=" + std::to_string(c.k) + " out=" + c.output_dir);

        if (build->parsed()) return cmd_build(c);
        if (verify->parsed()) return cmd_verify(c);
        return cmd_report(c);
    } catch (const ValidationError& e) {
        std::cerr << "floerlab: " << e.what() << " (witness: " << e.witness() << ")\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "floerlab: " << e.what() << '\n';
        return 2;
    }
}
