#include "floerlab/config.hpp"

#include "floerlab/error.hpp"
#include "floerlab/geometry.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace floerlab {

bool RunConfig::wants(const std::string& format) const
{
    return std::find(formats.begin(), formats.end(), format) != formats.end();
}

namespace {

Rational read_rational(const nlohmann::json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ModelError("rational values must be strings such as \"1/10\"");
}

}  // namespace

RunConfig parse_config(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ModelError("config must be a JSON object");

    RunConfig c;
    try {
        c.schema_version = j.value("schema_version", kSchemaVersion);
        if (j.contains("model")) {
            const auto& m = j.at("model");
            c.genus = m.value("genus", c.genus);
            c.k = m.value("k", c.k);
            c.profile = m.value("profile", c.profile);
        }
        if (j.contains("epsilons")) {
            c.epsilons.clear();
            for (const auto& e : j.at("epsilons")) c.epsilons.push_back(read_rational(e));
        }
        if (j.contains("window")) {
            c.window.lo = j.at("window").value("lo", c.window.lo);
            c.window.hi = j.at("window").value("hi", c.window.hi);
        }
        if (j.contains("basepoints")) c.basepoints = j.at("basepoints").get<std::vector<std::string>>();
        if (j.contains("output")) {
            const auto& o = j.at("output");
            c.output_dir = o.value("dir", c.output_dir);
            if (o.contains("formats")) c.formats = o.at("formats").get<std::vector<std::string>>();
            c.plots = o.value("plots", c.plots);
        }
        c.seed = j.value("seed", c.seed);
        if (j.contains("verify")) {
            const auto& v = j.at("verify");
            c.random_trials = v.value("random_trials", c.random_trials);
            if (v.contains("rank_degrees")) c.rank_degrees = v.at("rank_degrees").get<std::vector<int>>();
            c.inject_fault = v.value("inject_fault", c.inject_fault);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("malformed config: ") + e.what());
    }
    validate(c);
    return c;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ModelError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate(const RunConfig& c)
{
    if (c.schema_version != kSchemaVersion)
        throw ModelError("unsupported schema_version " + std::to_string(c.schema_version));
    build_link_model(c.genus, c.k);
    if (c.profile != "standard") throw ModelError("unknown profile: " + c.profile);
    if (c.epsilons.empty()) throw ModelError("at least one epsilon is required");
    for (const auto& e : c.epsilons)
        if (!(e > 0 && e < 1)) throw ModelError("epsilon must lie in (0,1), got " + to_string(e));
    if (c.window.hi < c.window.lo) throw ModelError("window.hi must be >= window.lo");
    if (c.window.lo > 0 || c.window.hi < 0) throw ModelError("window must contain T^0");
    for (const auto& f : c.formats)
        if (f != "json" && f != "csv") throw ModelError("unknown format: " + f);
    for (const auto& b : c.basepoints) {
        if (b.empty()) throw ModelError("empty base point");
        if (static_cast<int>(b.size()) != c.k + c.genus && !(b.size() == static_cast<std::size_t>(c.k + c.genus + 1) && b[0] == 'y'))
            throw ModelError("base point " + b + " must have one sign per link component");
        for (char ch : b.substr(b[0] == 'y' ? 1 : 0))
            if (ch != '+' && ch != '-') throw ModelError("base point " + b + " must consist of '+' and '-'");
    }
    if (c.random_trials < 0) throw ModelError("random_trials must be nonnegative");
    for (int d : c.rank_degrees)
        if (d < 1 || d > 12) throw ModelError("rank degrees must lie in 1..12");
    if (!c.inject_fault.empty() && c.inject_fault != "corrupt_differential")
        throw ModelError("unknown fault: " + c.inject_fault);
}

}  // namespace floerlab
