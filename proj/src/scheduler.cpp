#include "fieldplan/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fieldplan {

namespace {

double cap_guard(double cap) { return kFeasEps * std::max(1.0, std::abs(cap)); }

} // namespace

double shifted_profit(const Project& p, int s, double rho, int horizon) {
  double profit = 0.0;
  double weight = 1.0;
  for (int t = 0; t < s; ++t) weight *= rho;
  for (int t = s; t < horizon; ++t) {
    profit += weight * p.revenue[t - s];
    weight *= rho;
  }
  return profit;
}

int earliest_feasible_start(const Project& p, const std::vector<double>& totals,
                            const std::vector<double>& cap, int from_start, int max_shift) {
  const int horizon = static_cast<int>(cap.size());
  for (int s = from_start; s <= max_shift; ++s) {
    bool fits = true;
    for (int t = s; t < horizon; ++t) {
      const double volume = p.production[t - s];
      if (volume == 0.0) continue;
      if (totals[t] + volume > cap[t] + cap_guard(cap[t])) {
        fits = false;
        break;
      }
    }
    if (fits) return s;
  }
  return -1;
}

Schedule greedy_pack(const Instance& instance, const std::vector<int>& selected,
                     const Permutation& pi, const DiscountConfig& config) {
  const int n = instance.cluster_count();
  const int T = instance.horizon;
  if (static_cast<int>(selected.size()) != n)
    throw std::invalid_argument("greedy_pack: selected size != cluster count");

  int selected_count = 0;
  for (int k = 0; k < n; ++k)
    if (selected[k] >= 0) ++selected_count;
  if (static_cast<int>(pi.order.size()) != selected_count)
    throw std::invalid_argument("greedy_pack: permutation does not cover the selection");
  std::vector<char> seen(n, 0);
  for (int k : pi.order) {
    if (k < 0 || k >= n || selected[k] < 0 || seen[k])
      throw std::invalid_argument(
          "greedy_pack: permutation is not a permutation of the selected clusters");
    seen[k] = 1;
  }

  Schedule schedule;
  schedule.shift.assign(n, Schedule::kUnscheduled);
  schedule.totals.assign(T, 0.0);
  const int max_shift = config.effective_max_shift(T);

  int prev_start = 0; // 0-based start year of the last scheduled project
  for (int k : pi.order) {
    const Project& project = instance.clusters[k].projects[selected[k]];
    const int s = earliest_feasible_start(project, schedule.totals, instance.cap,
                                          prev_start, max_shift);
    if (s < 0) continue; // no feasible start: drop the project
    schedule.shift[k] = s;
    for (int t = s; t < T; ++t) schedule.totals[t] += project.production[t - s];
    schedule.objective += shifted_profit(project, s, config.rho, T);
    prev_start = s;
  }
  return schedule;
}

std::vector<double> check_capacity(const Schedule& schedule, const Instance& instance) {
  const int T = instance.horizon;
  std::vector<double> slack(T, 0.0);
  for (int t = 0; t < T; ++t) {
    const double used = t < static_cast<int>(schedule.totals.size()) ? schedule.totals[t] : 0.0;
    slack[t] = instance.cap[t] - used;
  }
  return slack;
}

Solution schedule_to_solution(const Instance& instance, const std::vector<int>& selected,
                              const Schedule& schedule, const DiscountConfig& config) {
  Solution solution;
  solution.selection.assign(instance.clusters.size(), SelectionEntry{});
  for (int k = 0; k < instance.cluster_count(); ++k)
    if (selected[k] >= 0 && schedule.shift[k] != Schedule::kUnscheduled)
      solution.selection[k] = {selected[k], schedule.shift[k]};
  const Evaluation eval = evaluate_solution(instance, solution, config);
  solution.objective = eval.objective;
  solution.spent = eval.spent;
  solution.totals = eval.totals;
  return solution;
}

} // namespace fieldplan
