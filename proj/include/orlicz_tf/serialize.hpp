#pragma once

#include "orlicz_tf/field.hpp"
#include "orlicz_tf/modspace.hpp"
#include "orlicz_tf/orlicz.hpp"
#include "orlicz_tf/psido.hpp"
#include "orlicz_tf/weights.hpp"
#include "orlicz_tf/young.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace otf {

using json = nlohmann::json;

// {"kind": ..., "params": {...}, "quasi_order": p0}
json to_json(const YoungFunction& phi);
YoungFunction young_from_json(const json& j);

// {"kind": "polynomial", "s": 2, "dim": 2}; custom weights are not serializable
json to_json(const Weight& w);
Weight weight_from_json(const json& j);

// {"stages": [{"axes": [0], "young": {...}}, ...], "weight": {...}}
json to_json(const MixedNormSpec& s);
MixedNormSpec mixed_spec_from_json(const json& j);

json to_json(const ModulationSpaceSpec& s);
ModulationSpaceSpec modspace_from_json(const json& j);

json to_json(const SymbolSpec& s);
SymbolSpec symbol_from_json(const json& j);

json to_json(const Grid& g);
Grid grid_from_json(const json& j);

// {"axes": [...], "re": [...], "im": [...]}
json to_json(const Field& f);
Field field_from_json(const json& j);

// "# field rank=R", one "# axis L N role" line per axis, then rows "coords..., re, im" in flat order (%.17g)
void write_field_csv(std::ostream& os, const Field& f);
std::string field_csv(const Field& f);
Field read_field_csv(std::istream& is);
Field load_field(const std::string& path);  // .csv or .json

std::string format_double(double v);  // %.17g, with inf and nan spelled out

}  // namespace otf
