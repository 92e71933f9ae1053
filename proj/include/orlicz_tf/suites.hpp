#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace otf {

// one numeric claim: value compared against tolerance with `relation` ("<=", ">=", "info")
struct Record {
    std::string name;
    nlohmann::json value;
    double tolerance = 0.0;
    std::string relation = "<=";
    bool pass = true;
    nlohmann::json inputs = nlohmann::json::object();
};

nlohmann::json to_json(const Record& r);

// grid and counts left empty take the suite's own defaults
struct SuiteConfig {
    std::optional<int> N;
    std::optional<double> L;
    std::uint64_t seed = 42;
    std::optional<int> trials;
    std::optional<double> tol;
};

// names: moyal, stft-closed-form, projection, reproducing, holder, young-conv, conjugate, rank-one,
// calculi, entropy-scan, lieb, discontinuity, hypotheses, opnorm, embedding
const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);
std::vector<Record> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace otf
