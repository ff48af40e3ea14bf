#pragma once

#include <string>
#include <vector>

namespace fieldplan {

// A development option for one cluster: per-year production volumes, the
// per-year investment schedule and the per-year revenue it generates. All
// three arrays span the full planning horizon (years 1..T, stored 0-based).
struct Project {
  std::vector<double> production;
  std::vector<double> cost_schedule;
  std::vector<double> revenue;
};

struct Cluster {
  int id = 0;
  std::vector<Project> projects;
};

// One field: planning horizon T, total investment budget, per-year production
// cap (pipeline capacity) and the clusters with their candidate projects.
struct Instance {
  int horizon = 0;
  double budget = 0.0;
  std::vector<double> cap;
  std::vector<Cluster> clusters;

  int cluster_count() const { return static_cast<int>(clusters.size()); }
};

// Yearly money depreciation and the maximum allowed launch delay.
// max_shift < 0 means "use the horizon default", i.e. T - 1.
struct DiscountConfig {
  double rho = 1.0;
  int max_shift = -1;

  int effective_max_shift(int horizon) const {
    const int cap = horizon >= 1 ? horizon - 1 : 0;
    if (max_shift < 0 || max_shift > cap) return cap;
    return max_shift;
  }
};

// A project launched tau years late: the production profile moves right and
// is truncated at the horizon; cost and profit are re-discounted to the
// actual spending/earning years.
struct ShiftedVariant {
  int shift = 0;
  std::vector<double> production;
  double cost = 0.0;
  double profit = 0.0;
};

// Per-cluster pick: a project index plus launch shift, or nothing.
struct SelectionEntry {
  int project = -1;
  int shift = 0;

  bool selected() const { return project >= 0; }
  bool operator==(const SelectionEntry&) const = default;
};

struct Solution {
  std::vector<SelectionEntry> selection; // one entry per cluster
  double objective = 0.0;
  double spent = 0.0;
  std::vector<double> totals; // per-year production, length T
};

struct Evaluation {
  double objective = 0.0;
  double spent = 0.0;
  std::vector<double> totals;
  bool feasible_budget = true;
  bool feasible_capacity = true;
};

// Relative slack used when comparing accumulated floating-point sums against
// budget/capacity bounds and when snapping costs onto the delta grid.
inline constexpr double kFeasEps = 1e-9;

// Sum of v weighted by rho^(t-1); v is indexed from year 1.
double discounted_total(const std::vector<double>& v, double rho);

// Discounted scalar cost / profit of an unshifted project.
double project_cost(const Project& p, double rho);
double project_profit(const Project& p, double rho);

// Every invariant violation in the instance, human-readable with location.
// Empty result means the instance is accepted by all downstream operations.
std::vector<std::string> validate_instance(const Instance& instance);

// Launch delay: production/cost/revenue move right by tau years, anything
// past the horizon is dropped, money re-discounted to the actual years.
// Throws std::invalid_argument if tau is outside [0, effective max shift].
ShiftedVariant shift_project(const Project& project, int tau,
                             const DiscountConfig& config, int horizon);

// Objective (1), budget (2) and capacity (4) checks for a selection.
// Constraint (3) is structural: the selection type holds at most one project
// per cluster. Throws std::invalid_argument on out-of-range indices/shifts.
Evaluation evaluate_solution(const Instance& instance, const Solution& solution,
                             const DiscountConfig& config);

// A (cost, profit) option inside one cluster, remembering which project and
// shift it came from.
struct PricedChoice {
  double cost = 0.0;
  double profit = 0.0;
  int project = -1;
  int shift = 0;
};

// Removes every option that is at least as expensive and at most as
// profitable as another one. Ties on both coordinates keep the entry with the
// lower project index (then lower shift). The best achievable profit under
// any budget is unchanged; output sorted by cost with strictly increasing
// profit.
std::vector<PricedChoice> prune_dominated(std::vector<PricedChoice> options);

} // namespace fieldplan
