#include "fieldplan/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace fieldplan {

namespace {

double cap_guard(double cap) { return kFeasEps * std::max(1.0, std::abs(cap)); }

struct Option {
  int project = -1; // -1 = develop nothing
  int shift = 0;
  double cost = 0.0;
  double profit = 0.0;
  std::vector<double> production;
};

struct Enumerator {
  const Instance& instance;
  double budget_slack;
  bool use_budget;
  std::vector<std::vector<Option>> options; // per cluster, "none" first

  std::vector<int> choice;      // option index per cluster
  std::vector<int> best_choice;
  double best_objective = -1.0;
  std::vector<double> totals;
  double spent = 0.0;
  double objective = 0.0;

  explicit Enumerator(const Instance& inst, bool budget)
      : instance(inst),
        budget_slack(kFeasEps * std::max(1.0, std::abs(inst.budget))),
        use_budget(budget) {}

  void dfs(int k) {
    if (k == instance.cluster_count()) {
      if (objective > best_objective) {
        best_objective = objective;
        best_choice = choice;
      }
      return;
    }
    for (int idx = 0; idx < static_cast<int>(options[k].size()); ++idx) {
      const Option& opt = options[k][idx];
      if (use_budget && spent + opt.cost > instance.budget + budget_slack) continue;
      bool fits = true;
      for (int t = 0; t < instance.horizon && fits; ++t)
        if (opt.production.empty() ? false
                                   : totals[t] + opt.production[t] >
                                         instance.cap[t] + cap_guard(instance.cap[t]))
          fits = false;
      if (!fits) continue;

      choice[k] = idx;
      spent += opt.cost;
      objective += opt.profit;
      if (!opt.production.empty())
        for (int t = 0; t < instance.horizon; ++t) totals[t] += opt.production[t];
      dfs(k + 1);
      if (!opt.production.empty())
        for (int t = 0; t < instance.horizon; ++t) totals[t] -= opt.production[t];
      objective -= opt.profit;
      spent -= opt.cost;
    }
    choice[k] = 0;
  }

  Solution run(const DiscountConfig& config) {
    const int n = instance.cluster_count();
    choice.assign(n, 0);
    best_choice.assign(n, 0);
    totals.assign(instance.horizon, 0.0);
    dfs(0);

    Solution solution;
    solution.selection.assign(n, SelectionEntry{});
    for (int k = 0; k < n; ++k) {
      const Option& opt = options[k][best_choice[k]];
      if (opt.project >= 0) solution.selection[k] = {opt.project, opt.shift};
    }
    const Evaluation eval = evaluate_solution(instance, solution, config);
    solution.objective = eval.objective;
    solution.spent = eval.spent;
    solution.totals = eval.totals;
    return solution;
  }
};

Option make_option(const Project& p, int project, int shift, const DiscountConfig& config,
                   int horizon) {
  const ShiftedVariant v = shift_project(p, shift, config, horizon);
  return Option{project, shift, v.cost, v.profit, v.production};
}

} // namespace

std::int64_t oracle_state_count(const Instance& instance, const DiscountConfig& config,
                                std::int64_t cap) {
  const std::int64_t shifts = config.effective_max_shift(instance.horizon) + 1;
  std::int64_t states = 1;
  for (const Cluster& cluster : instance.clusters) {
    const std::int64_t per =
        static_cast<std::int64_t>(cluster.projects.size()) * shifts + 1;
    if (states > (cap + 1) / per + 1) return cap + 1;
    states *= per;
    if (states > cap) return cap + 1;
  }
  return states;
}

Solution brute_force(const Instance& instance, const DiscountConfig& config,
                     const OracleLimits& limits) {
  if (oracle_state_count(instance, config, limits.max_states) > limits.max_states)
    throw OracleRefusal("brute_force: enumeration space exceeds max_states; shrink the instance");

  Enumerator e(instance, /*budget=*/true);
  const int max_shift = config.effective_max_shift(instance.horizon);
  e.options.resize(instance.clusters.size());
  for (int k = 0; k < instance.cluster_count(); ++k) {
    e.options[k].push_back(Option{}); // none
    const Cluster& cluster = instance.clusters[k];
    for (int i = 0; i < static_cast<int>(cluster.projects.size()); ++i)
      for (int s = 0; s <= max_shift; ++s)
        e.options[k].push_back(make_option(cluster.projects[i], i, s, config, instance.horizon));
  }
  return e.run(config);
}

Solution brute_force_fixed(const Instance& instance, const std::vector<int>& fixed,
                           const DiscountConfig& config, const OracleLimits& limits) {
  const int max_shift = config.effective_max_shift(instance.horizon);
  std::int64_t states = 1;
  for (int k = 0; k < instance.cluster_count(); ++k) {
    const std::int64_t per = fixed[k] >= 0 ? max_shift + 2 : 1;
    states *= per;
    if (states > limits.max_states)
      throw OracleRefusal("brute_force_fixed: enumeration space exceeds max_states");
  }

  Enumerator e(instance, /*budget=*/false); // stage-two problem drops constraint (2)
  e.options.resize(instance.clusters.size());
  for (int k = 0; k < instance.cluster_count(); ++k) {
    e.options[k].push_back(Option{});
    if (fixed[k] < 0) continue;
    const Cluster& cluster = instance.clusters[k];
    for (int s = 0; s <= max_shift; ++s)
      e.options[k].push_back(make_option(cluster.projects[fixed[k]], fixed[k], s, config,
                                         instance.horizon));
  }
  return e.run(config);
}

} // namespace fieldplan
