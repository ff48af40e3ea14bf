#include "fieldplan/dp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fieldplan {

namespace {

constexpr std::int64_t kMaxGridPoints = 1'000'000'000; // sanity cap on C/delta

std::int64_t snap_or(double ratio, std::int64_t snapped, double rounder(double)) {
  if (std::abs(ratio - static_cast<double>(snapped)) <=
      kFeasEps * std::max(1.0, std::abs(ratio)))
    return snapped;
  return static_cast<std::int64_t>(rounder(ratio));
}

} // namespace

std::int64_t cost_to_steps_up(double cost, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("grid: delta must be > 0");
  if (cost <= 0.0) return 0;
  const double ratio = cost / delta;
  const std::int64_t nearest = static_cast<std::int64_t>(std::llround(ratio));
  return snap_or(ratio, nearest, std::ceil);
}

std::int64_t budget_to_steps_down(double budget, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("grid: delta must be > 0");
  if (budget <= 0.0) return 0;
  const double ratio = budget / delta;
  const std::int64_t nearest = static_cast<std::int64_t>(std::llround(ratio));
  const std::int64_t steps = snap_or(ratio, nearest, std::floor);
  if (steps > kMaxGridPoints)
    throw std::invalid_argument("grid: budget/delta exceeds " + std::to_string(kMaxGridPoints) +
                                " points; increase delta");
  return steps;
}

double PiecewiseProfitFunction::value_at(std::int64_t budget_steps) const {
  auto it = std::upper_bound(steps.begin(), steps.end(), budget_steps,
                             [](std::int64_t b, const ProfitStep& s) { return b < s.cost_steps; });
  return it == steps.begin() ? 0.0 : std::prev(it)->profit;
}

int PiecewiseProfitFunction::choice_at(std::int64_t budget_steps) const {
  auto it = std::upper_bound(steps.begin(), steps.end(), budget_steps,
                             [](std::int64_t b, const ProfitStep& s) { return b < s.cost_steps; });
  return it == steps.begin() ? -1 : std::prev(it)->project;
}

std::vector<double> PiecewiseProfitFunction::values() const {
  std::vector<double> out(static_cast<std::size_t>(grid_size) + 1, 0.0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::int64_t hi = i + 1 < steps.size() ? steps[i + 1].cost_steps : grid_size + 1;
    for (std::int64_t b = steps[i].cost_steps; b < hi; ++b) out[b] = steps[i].profit;
  }
  return out;
}

std::vector<int> PiecewiseProfitFunction::choices() const {
  std::vector<int> out(static_cast<std::size_t>(grid_size) + 1, -1);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::int64_t hi = i + 1 < steps.size() ? steps[i + 1].cost_steps : grid_size + 1;
    for (std::int64_t b = steps[i].cost_steps; b < hi; ++b) out[b] = steps[i].project;
  }
  return out;
}

PiecewiseProfitFunction build_profit_function(const std::vector<PricedChoice>& options,
                                              int cluster_id, double budget, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("build_profit_function: delta must be > 0");
  PiecewiseProfitFunction f;
  f.cluster_id = cluster_id;
  f.delta = delta;
  f.grid_size = budget_to_steps_down(budget, delta);

  struct GridOption {
    std::int64_t steps;
    double profit;
    int project;
  };
  std::vector<GridOption> affordable;
  affordable.reserve(options.size());
  for (const PricedChoice& opt : options) {
    const std::int64_t steps = cost_to_steps_up(opt.cost, delta);
    if (steps > f.grid_size || opt.profit <= 0.0) continue;
    affordable.push_back({steps, opt.profit, opt.project});
  }
  std::sort(affordable.begin(), affordable.end(), [](const GridOption& a, const GridOption& b) {
    if (a.steps != b.steps) return a.steps < b.steps;
    if (a.profit != b.profit) return a.profit > b.profit;
    return a.project < b.project;
  });
  for (const GridOption& opt : affordable) {
    if (!f.steps.empty() && opt.profit <= f.steps.back().profit) continue;
    f.steps.push_back({opt.steps, opt.profit, opt.project});
  }
  return f;
}

PiecewiseProfitFunction build_profit_function(const Cluster& cluster, double budget,
                                              double delta, const DiscountConfig& config) {
  std::vector<PricedChoice> options;
  options.reserve(cluster.projects.size());
  for (int i = 0; i < static_cast<int>(cluster.projects.size()); ++i) {
    const Project& p = cluster.projects[i];
    options.push_back({project_cost(p, config.rho), project_profit(p, config.rho), i, 0});
  }
  return build_profit_function(options, cluster.id, budget, delta);
}

namespace {

// Rolling DP values over budgets 0..W for a contiguous cluster range:
// profit to maximize, grid spend to minimize among profit ties.
struct DpRow {
  std::vector<double> profit;
  std::vector<std::int64_t> spend;

  explicit DpRow(std::int64_t width) : profit(width, 0.0), spend(width, 0) {}
};

void apply_cluster(const PiecewiseProfitFunction& f, const DpRow& prev, DpRow& next) {
  // s = 0 candidate: take nothing from this cluster.
  next.profit = prev.profit;
  next.spend = prev.spend;
  const std::int64_t width = static_cast<std::int64_t>(prev.profit.size());
  for (const ProfitStep& step : f.steps) {
    const std::int64_t cs = step.cost_steps;
    const double q = step.profit;
    for (std::int64_t b = cs; b < width; ++b) {
      const double cand_profit = prev.profit[b - cs] + q;
      const std::int64_t cand_spend = prev.spend[b - cs] + cs;
      if (cand_profit > next.profit[b] ||
          (cand_profit == next.profit[b] && cand_spend < next.spend[b])) {
        next.profit[b] = cand_profit;
        next.spend[b] = cand_spend;
      }
    }
  }
}

DpRow dp_over_range(const std::vector<PiecewiseProfitFunction>& functions, int lo, int hi,
                    std::int64_t budget_steps) {
  DpRow prev(budget_steps + 1);
  DpRow next(budget_steps + 1);
  for (int k = lo; k < hi; ++k) {
    apply_cluster(functions[k], prev, next);
    std::swap(prev, next);
  }
  return prev;
}

// Divide-and-conquer reconstruction: values need O(C/delta) memory only, so
// the budget split between the two halves is recomputed at every level
// instead of keeping an n x (C/delta) back-pointer table.
void assign_range(const std::vector<PiecewiseProfitFunction>& functions, int lo, int hi,
                  std::int64_t budget_steps, DpAllocation& out) {
  if (hi - lo == 1) {
    const PiecewiseProfitFunction& f = functions[lo];
    auto it = std::upper_bound(f.steps.begin(), f.steps.end(), budget_steps,
                               [](std::int64_t b, const ProfitStep& s) { return b < s.cost_steps; });
    if (it != f.steps.begin()) {
      const ProfitStep& step = *std::prev(it);
      out.spend_steps[lo] = step.cost_steps;
      out.project[lo] = step.project;
    }
    return;
  }
  const int mid = lo + (hi - lo) / 2;
  std::int64_t left_budget = 0;
  {
    const DpRow left = dp_over_range(functions, lo, mid, budget_steps);
    const DpRow right = dp_over_range(functions, mid, hi, budget_steps);
    double best_profit = -1.0;
    std::int64_t best_spend = 0;
    for (std::int64_t b = 0; b <= budget_steps; ++b) {
      const double p = left.profit[b] + right.profit[budget_steps - b];
      const std::int64_t s = left.spend[b] + right.spend[budget_steps - b];
      // >= on the final tie pushes budget toward the lower-index half.
      if (p > best_profit || (p == best_profit && s < best_spend) ||
          (p == best_profit && s == best_spend && b >= left_budget)) {
        best_profit = p;
        best_spend = s;
        left_budget = b;
      }
    }
  } // DP rows freed before recursing
  assign_range(functions, lo, mid, left_budget, out);
  assign_range(functions, mid, hi, budget_steps - left_budget, out);
}

} // namespace

DpAllocation solve_dp(const std::vector<PiecewiseProfitFunction>& functions,
                      double budget, double delta) {
  if (functions.empty()) throw std::invalid_argument("solve_dp: no profit functions");
  const std::int64_t grid = budget_to_steps_down(budget, delta);
  for (const PiecewiseProfitFunction& f : functions) {
    if (f.delta != delta || f.grid_size != grid)
      throw std::invalid_argument("solve_dp: profit function grid mismatch (cluster " +
                                  std::to_string(f.cluster_id) + ")");
  }
  const int n = static_cast<int>(functions.size());
  DpAllocation alloc;
  alloc.delta = delta;
  alloc.spend_steps.assign(n, 0);
  alloc.project.assign(n, -1);
  assign_range(functions, 0, n, grid, alloc);
  for (int k = 0; k < n; ++k) {
    alloc.total_spend_steps += alloc.spend_steps[k];
    if (alloc.project[k] >= 0) alloc.total_profit += functions[k].value_at(alloc.spend_steps[k]);
  }
  return alloc;
}

Solution stage_one(const Instance& instance, double delta, const DiscountConfig& config) {
  if (delta <= 0.0) throw std::invalid_argument("stage_one: delta must be > 0");
  std::vector<PiecewiseProfitFunction> functions;
  functions.reserve(instance.clusters.size());
  for (const Cluster& cluster : instance.clusters) {
    std::vector<PricedChoice> options;
    options.reserve(cluster.projects.size());
    for (int i = 0; i < static_cast<int>(cluster.projects.size()); ++i) {
      const Project& p = cluster.projects[i];
      options.push_back({project_cost(p, config.rho), project_profit(p, config.rho), i, 0});
    }
    functions.push_back(
        build_profit_function(prune_dominated(std::move(options)), cluster.id, instance.budget, delta));
  }
  const DpAllocation alloc = solve_dp(functions, instance.budget, delta);

  Solution solution;
  solution.selection.assign(instance.clusters.size(), SelectionEntry{});
  for (int k = 0; k < instance.cluster_count(); ++k)
    if (alloc.project[k] >= 0) solution.selection[k] = {alloc.project[k], 0};
  const Evaluation eval = evaluate_solution(instance, solution, config);
  solution.objective = eval.objective;
  solution.spent = eval.spent;
  solution.totals = eval.totals;
  return solution;
}

} // namespace fieldplan
