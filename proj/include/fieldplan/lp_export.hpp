#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fieldplan/model.hpp"

namespace fieldplan {

enum class MilpVariant { full, fixed_projects };

// LP-format model of the investment problem with shift variants expanded per
// cluster: objective = discounted profits, one choice row per cluster, one
// capacity row per year, and (full variant only) the budget row. Variables
// are x_<cluster>_<project>_<shift>, all binary. Coefficients use
// shortest-round-trip decimals, so identical instances export identical
// bytes. Variants whose truncated production is all zero with zero profit
// are skipped.
//
// `fixed` must name the frozen project per cluster (< 0 = cluster skipped)
// when variant == fixed_projects; the budget row is omitted there, matching
// the stage-two problem.
std::string export_milp(const Instance& instance, const DiscountConfig& config,
                        MilpVariant variant, const std::vector<int>* fixed = nullptr);

// Count of x variables the export would emit (truncation-empty variants
// excluded).
std::int64_t export_variable_count(const Instance& instance, const DiscountConfig& config,
                                   MilpVariant variant, const std::vector<int>* fixed = nullptr);

// Runs a user-configured solver command on an LP file and scrapes the
// objective value: `command` has "{file}" (and optionally "{time_limit}")
// substituted, then the first stdout line starting with `objective_prefix`
// is parsed for the first floating-point number after the prefix. Returns
// nullopt when the command fails or no such line exists.
std::optional<double> run_external_solver(const std::string& command,
                                          const std::string& lp_path,
                                          const std::string& objective_prefix,
                                          double time_limit_seconds = 0.0);

} // namespace fieldplan
