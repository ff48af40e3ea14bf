#include "fieldplan/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fieldplan {

double discounted_total(const std::vector<double>& v, double rho) {
  double total = 0.0;
  double weight = 1.0;
  for (double x : v) {
    total += weight * x;
    weight *= rho;
  }
  return total;
}

double project_cost(const Project& p, double rho) {
  return discounted_total(p.cost_schedule, rho);
}

double project_profit(const Project& p, double rho) {
  return discounted_total(p.revenue, rho);
}

namespace {

void check_array(const std::vector<double>& v, int horizon, const std::string& where,
                 std::vector<std::string>& out) {
  if (static_cast<int>(v.size()) != horizon) {
    out.push_back(where + ": length " + std::to_string(v.size()) +
                  " != horizon " + std::to_string(horizon));
    return;
  }
  for (int t = 0; t < horizon; ++t) {
    if (std::isnan(v[t]) || std::isinf(v[t]))
      out.push_back(where + ", year " + std::to_string(t + 1) + ": non-finite value");
    else if (v[t] < 0.0)
      out.push_back(where + ", year " + std::to_string(t + 1) + ": negative value " +
                    std::to_string(v[t]));
  }
}

} // namespace

std::vector<std::string> validate_instance(const Instance& instance) {
  std::vector<std::string> violations;
  const int T = instance.horizon;
  if (T < 1) violations.push_back("horizon: must be >= 1, got " + std::to_string(T));
  if (!(instance.budget >= 0.0))
    violations.push_back("budget: must be >= 0, got " + std::to_string(instance.budget));
  if (T >= 1) {
    if (static_cast<int>(instance.cap.size()) != T) {
      violations.push_back("cap: length " + std::to_string(instance.cap.size()) +
                           " != horizon " + std::to_string(T));
    } else {
      for (int t = 0; t < T; ++t)
        if (!(instance.cap[t] >= 0.0))
          violations.push_back("cap, year " + std::to_string(t + 1) + ": negative value");
    }
  }
  if (instance.clusters.empty()) violations.push_back("clusters: must be nonempty");
  for (int k = 0; k < instance.cluster_count(); ++k) {
    const Cluster& cluster = instance.clusters[k];
    const std::string base = "cluster " + std::to_string(k);
    if (cluster.id != k)
      violations.push_back(base + ": id " + std::to_string(cluster.id) +
                           " breaks contiguous numbering");
    if (cluster.projects.empty()) violations.push_back(base + ": no projects");
    if (T < 1) continue;
    for (int i = 0; i < static_cast<int>(cluster.projects.size()); ++i) {
      const Project& p = cluster.projects[i];
      const std::string where = base + ", project " + std::to_string(i);
      check_array(p.production, T, where + ", production", violations);
      check_array(p.cost_schedule, T, where + ", cost_schedule", violations);
      check_array(p.revenue, T, where + ", revenue", violations);
    }
  }
  return violations;
}

ShiftedVariant shift_project(const Project& project, int tau,
                             const DiscountConfig& config, int horizon) {
  if (tau < 0 || tau > config.effective_max_shift(horizon))
    throw std::invalid_argument("shift_project: tau " + std::to_string(tau) +
                                " outside [0, " +
                                std::to_string(config.effective_max_shift(horizon)) + "]");
  ShiftedVariant v;
  v.shift = tau;
  v.production.assign(horizon, 0.0);
  double weight = 1.0;
  for (int t = 0; t < tau; ++t) weight *= config.rho; // rho^tau at the launch year
  for (int t = tau; t < horizon; ++t) {
    v.production[t] = project.production[t - tau];
    v.cost += weight * project.cost_schedule[t - tau];
    v.profit += weight * project.revenue[t - tau];
    weight *= config.rho;
  }
  return v;
}

Evaluation evaluate_solution(const Instance& instance, const Solution& solution,
                             const DiscountConfig& config) {
  const int T = instance.horizon;
  if (static_cast<int>(solution.selection.size()) != instance.cluster_count())
    throw std::invalid_argument("evaluate_solution: selection size " +
                                std::to_string(solution.selection.size()) +
                                " != cluster count " +
                                std::to_string(instance.cluster_count()));
  Evaluation eval;
  eval.totals.assign(T, 0.0);
  for (int k = 0; k < instance.cluster_count(); ++k) {
    const SelectionEntry& pick = solution.selection[k];
    if (!pick.selected()) continue;
    const Cluster& cluster = instance.clusters[k];
    if (pick.project >= static_cast<int>(cluster.projects.size()))
      throw std::invalid_argument("evaluate_solution: cluster " + std::to_string(k) +
                                  " has no project " + std::to_string(pick.project));
    const ShiftedVariant v =
        shift_project(cluster.projects[pick.project], pick.shift, config, T);
    eval.objective += v.profit;
    eval.spent += v.cost;
    for (int t = 0; t < T; ++t) eval.totals[t] += v.production[t];
  }
  const double budget_slack = kFeasEps * std::max(1.0, std::abs(instance.budget));
  eval.feasible_budget = eval.spent <= instance.budget + budget_slack;
  eval.feasible_capacity = true;
  for (int t = 0; t < T; ++t) {
    const double cap_slack = kFeasEps * std::max(1.0, std::abs(instance.cap[t]));
    if (eval.totals[t] > instance.cap[t] + cap_slack) {
      eval.feasible_capacity = false;
      break;
    }
  }
  return eval;
}

std::vector<PricedChoice> prune_dominated(std::vector<PricedChoice> options) {
  std::sort(options.begin(), options.end(),
            [](const PricedChoice& a, const PricedChoice& b) {
              if (a.cost != b.cost) return a.cost < b.cost;
              if (a.profit != b.profit) return a.profit > b.profit;
              if (a.project != b.project) return a.project < b.project;
              return a.shift < b.shift;
            });
  std::vector<PricedChoice> kept;
  kept.reserve(options.size());
  for (const PricedChoice& opt : options) {
    if (!kept.empty() && opt.profit <= kept.back().profit) continue;
    kept.push_back(opt);
  }
  return kept;
}

} // namespace fieldplan
