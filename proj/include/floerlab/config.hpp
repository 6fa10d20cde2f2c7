#pragma once

// Run configuration for the command-line driver, read from a JSON document:
//
//   {
//     "schema_version": 1,
//     "model": {"genus": 0, "k": 2, "profile": "standard"},
//     "epsilons": ["1/10", "1/50", "1/100"],
//     "window": {"lo": -1, "hi": 1},
//     "basepoints": ["++", "+-"],
//     "output": {"dir": "out", "formats": ["json", "csv"], "plots": false},
//     "seed": 1,
//     "verify": {"random_trials": 1000, "rank_degrees": [1, 2, 3, 4], "inject_fault": ""}
//   }
//
// Every key is optional. Command-line flags override file values.

#include "floerlab/complex.hpp"
#include "floerlab/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace floerlab {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
    int schema_version = kSchemaVersion;
    int genus = 0;
    int k = 2;
    std::string profile = "standard";
    std::vector<Rational> epsilons{Rational(1, 10), Rational(1, 50), Rational(1, 100)};
    Window window;
    std::vector<std::string> basepoints;  // empty: y_+ only
    std::string output_dir = "out";
    std::vector<std::string> formats{"json", "csv"};
    bool plots = false;
    std::uint64_t seed = 1;
    int random_trials = 1000;
    std::vector<int> rank_degrees{1, 2, 3, 4};
    // "corrupt_differential" adds an entry that breaks d^2 = 0.
    std::string inject_fault;

    bool wants(const std::string& format) const;
};

/// Throws ModelError on unknown schema version, malformed values or a model
/// that violates the geometric constraints (k > 1, g >= 0, 0 < eps < 1).
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
void validate(const RunConfig& config);

}  // namespace floerlab
