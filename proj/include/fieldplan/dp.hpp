#pragma once

#include <cstdint>
#include <vector>

#include "fieldplan/model.hpp"

namespace fieldplan {

// Investment grid: budgets live on multiples of delta. Costs are rounded UP
// so discretization can never violate the budget constraint; values within
// 1e-9 relative of a grid point snap onto it so exactly-aligned instances
// stay exact.
std::int64_t cost_to_steps_up(double cost, double delta);
std::int64_t budget_to_steps_down(double budget, double delta);

// One step of a cluster's profit function: spending cost_steps*delta (or
// more) yields `profit` via `project`.
struct ProfitStep {
  std::int64_t cost_steps = 0;
  double profit = 0.0;
  int project = -1;
};

// Best-profit-per-budget function of one cluster on the delta grid:
// non-decreasing piecewise constant, stored by its steps (strictly
// increasing in both cost and profit). values()/choices() materialize the
// dense per-grid-point arrays; value_at/choice_at answer point queries.
struct PiecewiseProfitFunction {
  int cluster_id = -1;
  double delta = 0.0;
  std::int64_t grid_size = 0; // grid points 0..grid_size
  std::vector<ProfitStep> steps;

  double value_at(std::int64_t budget_steps) const;
  int choice_at(std::int64_t budget_steps) const;
  std::vector<double> values() const;
  std::vector<int> choices() const;
};

// Function of the cluster's projects launched without delay. Throws
// std::invalid_argument if delta <= 0.
PiecewiseProfitFunction build_profit_function(const Cluster& cluster, double budget,
                                              double delta, const DiscountConfig& config);

// Same, from pre-priced (and possibly pruned) options of one cluster.
PiecewiseProfitFunction build_profit_function(const std::vector<PricedChoice>& options,
                                              int cluster_id, double budget, double delta);

// Budget split chosen by the DP: per-cluster grid spend and project.
struct DpAllocation {
  std::vector<std::int64_t> spend_steps;
  std::vector<int> project; // -1 = cluster left undeveloped
  double total_profit = 0.0;
  std::int64_t total_spend_steps = 0;
  double delta = 0.0;

  double spend_money(int k) const { return static_cast<double>(spend_steps[k]) * delta; }
};

// Maximizes the sum of the cluster profit functions subject to the shared
// budget. Ties: smaller total spend, then budget pushed toward lower cluster
// indices. Memory stays O(C/delta) regardless of cluster count (the budget
// split is reconstructed by divide and conquer, not a back-pointer table).
// Throws std::invalid_argument on inconsistent grids.
DpAllocation solve_dp(const std::vector<PiecewiseProfitFunction>& functions,
                      double budget, double delta);

// Stage one of the heuristic: prune dominated projects, build the profit
// functions, run the DP, and return the per-cluster picks with zero shift,
// evaluated against the instance. Production caps are ignored here; if the
// result happens to satisfy them it is optimal for the full problem up to
// grid rounding.
Solution stage_one(const Instance& instance, double delta, const DiscountConfig& config);

} // namespace fieldplan
