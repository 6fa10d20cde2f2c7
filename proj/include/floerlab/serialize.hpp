#pragma once

// JSON and CSV output. Objects are written with sorted keys and rationals as
// "p/q" strings, so identical inputs give byte-identical files.

#include "floerlab/closed_open.hpp"
#include "floerlab/complex.hpp"
#include "floerlab/geometry.hpp"
#include "floerlab/lattice.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace floerlab {

using Json = nlohmann::json;

Json to_json(const SurfaceLinkModel& model);
Json to_json(const MorseHamiltonian& h);
Json to_json(const RelClass& a);
Json to_json(const FilteredComplex& complex);
Json to_json(const FilteredComplex& complex, const HomologyReport& report);
Json to_json(const SpectralRow& row);

RelClass rel_class_from_json(const Json& j);
/// Rebuilds (and revalidates) a complex written by to_json.
FilteredComplex complex_from_json(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

struct RankRow {
    int genus = 0;
    int k = 0;
    int d = 0;
    std::string complex;
    std::size_t generators_per_period = 0;
    long periods = 0;
    std::size_t total_rank = 0;
    Rational rank_per_period;
};

Json to_json(const RankRow& row);

/// Comma separated, LF line endings, numerics unquoted.
std::string spectral_table_csv(const std::vector<SpectralRow>& rows);
std::string rank_table_csv(const std::vector<RankRow>& rows);

}  // namespace floerlab
