#pragma once

#include <string>

#include "fieldplan/model.hpp"

namespace fieldplan {

// Instance file schema (UTF-8 JSON, documented in docs/instance-format.md):
//   { "horizon": T, "budget": C, "cap": [T numbers],
//     "clusters": [ { "projects": [ { "production": [...],
//                                     "cost_schedule": [...],
//                                     "revenue": [...] } ] } ] }
// Unknown fields are rejected at every level. Cluster ids are implicit in
// array order. Parsing does not run validate_instance; callers decide.
Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& instance);

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& instance, const std::string& path);

// Solution document: {"selection": [{"project": i, "shift": s} | null, ...]}
// plus the evaluation summary fields.
std::string solution_to_json(const Solution& solution, const Evaluation& eval);

} // namespace fieldplan
