#pragma once

#include "orlicz_tf/field.hpp"

#include "json.hpp"

#include <string>

namespace otf {

// request: {"command": "entropy", "action": "scan", "args": {...}, "config": {"N", "L", "d", "seed", "trials", "tol"}}
// report:  {"schema": 1, "command", "config", "results": [...], "summary", "timing_ms"}
struct CommandOutcome {
    nlohmann::json report;
    bool failed = false;    // some result record did not pass
    std::string table_csv;  // tabular or field output, when the command has one
};

// throws std::invalid_argument on malformed requests
CommandOutcome run_command(const nlohmann::json& request);

// gaussian[:lambda[:x0[:xi0]]], hermite:n, packets:seed[:count[:spread]], bandlimited:seed[:band],
// steps:seed[:pieces], or a .csv/.json field file
Field make_signal(const std::string& spec, const Grid& g);

// results rendered as CSV: name,value,tolerance,relation,pass
std::string results_csv(const nlohmann::json& report);

}  // namespace otf
