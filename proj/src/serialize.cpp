#include "floerlab/serialize.hpp"

#include "floerlab/error.hpp"

#include <algorithm>
#include <sstream>

namespace floerlab {

Json to_json(const SurfaceLinkModel& model)
{
    Json regions = Json::array();
    for (const auto& r : model.regions)
        regions.push_back({{"id", r.id}, {"area", to_string(r.area)}, {"is_disk", r.is_disk}});
    Json circles = Json::array();
    for (const auto& c : model.circles) {
        Json adj = Json::array();
        for (int r : model.region_adjacency.at(c.id)) adj.push_back(r);
        circles.push_back({{"id", c.id},
                           {"kind", c.kind == CircleKind::contractible ? "contractible" : "meridian"},
                           {"regions", adj}});
    }
    return {{"genus", model.genus},
            {"k", model.k()},
            {"meridian_count", model.meridian_count},
            {"d", model.d},
            {"regions", regions},
            {"circles", circles}};
}

Json to_json(const MorseHamiltonian& h)
{
    Json points = Json::array();
    for (const auto& p : h.critical_points) {
        Json jp = {{"id", p.id},
                   {"name", p.name},
                   {"morse_index", p.morse_index},
                   {"value", to_string(p.value)},
                   {"role", to_string(p.role)}};
        jp["circle"] = p.on_circle ? Json(*p.on_circle) : Json(nullptr);
        points.push_back(jp);
    }
    Json flows = Json::array();
    for (const auto& [key, count] : h.flow_line_counts)
        flows.push_back({{"source", key.first}, {"sink", key.second}, {"count", count}, {"mod2", count % 2}});
    Json families = Json::array();
    for (const auto& f : h.large_period_orbits)
        families.push_back({{"minimum", f.minimum_id},
                            {"rotation", std::to_string(f.rotation_numerator) + "/" + std::to_string(f.period)},
                            {"period", f.period}});
    return {{"epsilon", to_string(h.epsilon)},
            {"profile", h.profile_name},
            {"critical_points", points},
            {"flow_lines", flows},
            {"modified", h.modified},
            {"large_period_orbits", families}};
}

namespace {

Json longs(const std::vector<long>& v) { return Json(v); }

std::vector<long> read_longs(const Json& j, int k)
{
    if (j.is_null()) return std::vector<long>(k, 0);
    auto v = j.get<std::vector<long>>();
    if (static_cast<int>(v.size()) != k) throw ModelError("coefficient vector must have length k");
    return v;
}

}  // namespace

Json to_json(const RelClass& a)
{
    return {{"context", to_string(a.context)},
            {"k", a.k},
            {"anchor", a.anchor},
            {"anchor_energy", to_string(a.anchor_energy)},
            {"coefficients",
             {{"B", longs(a.coeff_B)},
              {"phiB", longs(a.coeff_phiB)},
              {"Bc", longs(a.coeff_Bc)},
              {"phiBc", longs(a.coeff_phiBc)},
              {"Sigma", a.coeff_Sigma}}}};
}

RelClass rel_class_from_json(const Json& j)
{
    const int k = j.at("k").get<int>();
    RelClass a = RelClass::zero(parse_class_context(j.at("context").get<std::string>()), k,
                                j.value("anchor", std::string{}),
                                parse_rational(j.value("anchor_energy", std::string{"0"})));
    const Json& c = j.at("coefficients");
    a.coeff_B = read_longs(c.value("B", Json()), k);
    a.coeff_phiB = read_longs(c.value("phiB", Json()), k);
    a.coeff_Bc = read_longs(c.value("Bc", Json()), k);
    a.coeff_phiBc = read_longs(c.value("phiBc", Json()), k);
    a.coeff_Sigma = c.value("Sigma", 0L);
    check_context(a);
    return a;
}

Json to_json(const FilteredComplex& complex)
{
    Json gens = Json::array();
    for (std::size_t i = 0; i < complex.size(); ++i) {
        const FloerGenerator g = complex.generator(i);
        gens.push_back({{"index", i},
                        {"label", g.label},
                        {"base", g.base},
                        {"power", g.power},
                        {"action", to_string(g.action)},
                        {"capping", to_json(g.capping)}});
    }
    Json triplets = Json::array();
    for (std::size_t i = 0; i < complex.size(); ++i)
        for (std::size_t j : complex.boundary_of(i)) triplets.push_back(Json::array({i, j, 1}));
    Json base_entries = Json::array();
    for (const auto& e : complex.entries())
        base_entries.push_back({{"source", e.source}, {"target", e.target}, {"shift", e.shift}});
    const ClassDiff& pc = complex.period_class();
    return {{"name", complex.name()},
            {"period_action", to_string(complex.period_action())},
            {"period_class", {{"c", longs(pc.c)}, {"c_phi", longs(pc.c_phi)}, {"d", longs(pc.d)}, {"d_phi", longs(pc.d_phi)}, {"m", pc.m}}},
            {"window", {{"lo", complex.window().lo}, {"hi", complex.window().hi}}},
            {"reference_term", to_string(complex.reference_term())},
            {"base_size", complex.base_size()},
            {"generators", gens},
            {"differential", triplets},
            {"base_differential", base_entries}};
}

FilteredComplex complex_from_json(const Json& j)
{
    try {
        const Window window{j.at("window").at("lo").get<long>(), j.at("window").at("hi").get<long>()};
        if (!window.contains(0)) throw ModelError("serialized complex window must contain T^0");
        const std::size_t n = j.at("base_size").get<std::size_t>();
        std::vector<BaseGenerator> base(n);
        std::vector<bool> seen(n, false);
        for (const auto& g : j.at("generators")) {
            if (g.at("power").get<long>() != 0) continue;
            const std::size_t b = g.at("base").get<std::size_t>();
            if (b >= n) throw ModelError("generator base index out of range");
            base[b] = {g.at("label").get<std::string>(), parse_rational(g.at("action").get<std::string>()),
                       rel_class_from_json(g.at("capping"))};
            seen[b] = true;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw ModelError("serialized complex is missing T^0 generators");
        std::vector<DifferentialEntry> entries;
        for (const auto& e : j.at("base_differential"))
            entries.push_back({e.at("source").get<int>(), e.at("target").get<int>(), e.at("shift").get<long>()});
        const Json& pc = j.at("period_class");
        ClassDiff period;
        period.c = pc.at("c").get<std::vector<long>>();
        period.c_phi = pc.at("c_phi").get<std::vector<long>>();
        period.d = pc.at("d").get<std::vector<long>>();
        period.d_phi = pc.at("d_phi").get<std::vector<long>>();
        period.m = pc.at("m").get<long>();
        return build_complex(std::move(base), std::move(entries),
                             parse_rational(j.at("period_action").get<std::string>()), window, period,
                             parse_rational(j.at("reference_term").get<std::string>()))
            .with_name(j.at("name").get<std::string>());
    } catch (const Json::exception& e) {
        throw ModelError(std::string("malformed complex document: ") + e.what());
    }
}

Json to_json(const FilteredComplex& complex, const HomologyReport& report)
{
    Json reps = Json::array();
    for (std::size_t r = 0; r < report.representatives.size(); ++r) {
        Json labels = Json::array();
        for (std::size_t i : report.representatives[r])
            labels.push_back(complex.generator(i).label + "@T^" + std::to_string(complex.power_of(i)));
        Json entry = {{"cycle", labels}};
        if (r < report.spectral_values.size()) entry["spectral_invariant"] = to_string(report.spectral_values[r]);
        reps.push_back(entry);
    }
    return {{"complex", complex.name()},
            {"total_rank", report.total_rank},
            {"periods", report.periods},
            {"rank_per_period", to_string(report.rank_per_period)},
            {"boundary_rank", report.boundary_rank},
            {"representatives", reps}};
}

Json to_json(const SpectralRow& row)
{
    return {{"g", row.genus},
            {"k", row.k},
            {"d", row.d},
            {"epsilon", to_string(row.epsilon)},
            {"basepoint", row.basepoint},
            {"c_hf", to_string(row.c_hf)},
            {"c_pfh", to_string(row.c_pfh)},
            {"integral", to_string(row.integral)},
            {"lhs", to_string(row.lhs)},
            {"rhs", to_string(row.rhs)},
            {"holds", row.holds}};
}

Json to_json(const RankRow& row)
{
    return {{"g", row.genus},
            {"k", row.k},
            {"d", row.d},
            {"complex", row.complex},
            {"generators_per_period", row.generators_per_period},
            {"periods", row.periods},
            {"total_rank", row.total_rank},
            {"rank_per_period", to_string(row.rank_per_period)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string spectral_table_csv(const std::vector<SpectralRow>& rows)
{
    std::ostringstream out;
    out << "g,k,d,epsilon,basepoint,c_hf,c_pfh,integral,holds\n";
    for (const auto& r : rows)
        out << r.genus << ',' << r.k << ',' << r.d << ',' << to_string(r.epsilon) << ',' << r.basepoint << ','
            << to_string(r.c_hf) << ',' << to_string(r.c_pfh) << ',' << to_string(r.integral) << ','
            << (r.holds ? "true" : "false") << '\n';
    return out.str();
}

std::string rank_table_csv(const std::vector<RankRow>& rows)
{
    std::ostringstream out;
    out << "g,k,d,complex,generators_per_period,periods,total_rank,rank_per_period\n";
    for (const auto& r : rows)
        out << r.genus << ',' << r.k << ',' << r.d << ',' << r.complex << ',' << r.generators_per_period << ','
            << r.periods << ',' << r.total_rank << ',' << to_string(r.rank_per_period) << '\n';
    return out.str();
}

}  // namespace floerlab
