#pragma once

#include <vector>

#include "fieldplan/model.hpp"

namespace fieldplan {

// Launch order of the developed clusters.
struct Permutation {
  std::vector<int> order;
};

// Result of packing one permutation: per-cluster launch shift (kUnscheduled
// for clusters dropped or not in the selection), per-year production totals
// and the discounted objective.
struct Schedule {
  static constexpr int kUnscheduled = -1;

  std::vector<int> shift; // per cluster
  std::vector<double> totals;
  double objective = 0.0;
};

// Discounted profit of a project launched `s` years late, truncated at the
// horizon. Same accumulation order as shift_project, so the two agree
// bit for bit.
double shifted_profit(const Project& p, int s, double rho, int horizon);

// Smallest 0-based start >= from_start at which the shifted production
// profile fits under the caps on top of `totals`; -1 if none exists within
// max_shift.
int earliest_feasible_start(const Project& p, const std::vector<double>& totals,
                            const std::vector<double>& cap, int from_start, int max_shift);

// Earliest-start greedy packer. Walks the clusters in pi order; each project
// gets the smallest start year that is no earlier than the previously
// scheduled project's start year and keeps every year's total within cap.
// A project with no feasible start (shift would exceed max_shift) is dropped:
// the one-project-per-cluster constraint is an inequality, so skipping keeps
// the schedule feasible and comparable across permutations.
//
// `selected` gives the project index per cluster (-1 = cluster undeveloped);
// pi must permute exactly the clusters with a project. Throws
// std::invalid_argument otherwise.
Schedule greedy_pack(const Instance& instance, const std::vector<int>& selected,
                     const Permutation& pi, const DiscountConfig& config);

// Per-year slack cap(t) - totals(t); the schedule respects the caps iff all
// entries are >= 0.
std::vector<double> check_capacity(const Schedule& schedule, const Instance& instance);

// Solution view of a packed schedule (selection with shifts, dropped
// clusters become "none").
Solution schedule_to_solution(const Instance& instance, const std::vector<int>& selected,
                              const Schedule& schedule, const DiscountConfig& config);

} // namespace fieldplan
