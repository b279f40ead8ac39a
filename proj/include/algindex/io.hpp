// Algebra files: JSON, either a builder reference
//   {"builder": "mat", "n": 2}
// or explicit structure constants
//   {"dim": n, "table": [[[c, ...], ...], ...], "name"?, "labels"?, "unit"?}
// with rational coefficients as "p/q" strings (bare integers also accepted).
// Loading validates associativity and any declared unit; serialization always
// materializes the full table.
#pragma once

#include <string>

#include <json.hpp>

#include "algindex/structure_constants.hpp"

namespace algindex {

StructureConstants algebra_from_json(const nlohmann::json& j);
StructureConstants parse_algebra_text(const std::string& text);
StructureConstants load_algebra_file(const std::string& path);

std::string serialize_algebra(const StructureConstants& sc);
void save_algebra_file(const StructureConstants& sc, const std::string& path);

// file bytes, for fingerprinting; throws input_error if unreadable
std::string read_file(const std::string& path);

}  // namespace algindex
