#pragma once

#include <optional>
#include <vector>

#include "fieldplan/model.hpp"
#include "fieldplan/scheduler.hpp"

namespace fieldplan {

// Greedy launch order: first the cluster with the highest income when
// started at year one, then repeatedly the cluster whose earliest feasible
// start (on top of everything placed so far) adds the most income. Ties go
// to the lower cluster id.
Permutation initial_permutation(const Instance& instance, const std::vector<int>& selected,
                                const DiscountConfig& config);

struct SwapResult {
  Permutation permutation;
  double objective = 0.0;
  int i = 0, j = 0; // swapped positions
};

// Best-improvement pairwise exchange: packs all C(n,2) transpositions of pi
// and returns the strictly best one, or nullopt when none beats
// current_objective. Ties among equal best objectives resolve to the
// lexicographically smallest position pair, independent of evaluation order
// (the scan may run on several threads).
std::optional<SwapResult> best_swap(const Instance& instance, const std::vector<int>& selected,
                                    const Permutation& pi, const DiscountConfig& config,
                                    double current_objective, int threads = 0);

struct PipelineParams {
  double delta = 0.01; // ten thousand rubles, in millions
  DiscountConfig discount{};
  int max_iters = -1; // < 0: 10 * cluster count
  int threads = 0;    // 0: hardware concurrency
};

struct PipelineResult {
  Solution solution;
  Evaluation evaluation;
  std::vector<int> stage_one_projects; // per cluster, -1 = none
  bool stage_two_ran = false;
  int iterations = 0;                 // accepted swaps
  std::vector<double> objective_trace; // packed objective after the initial
                                       // permutation and each accepted swap
  double stage1_seconds = 0.0;
  double stage2_seconds = 0.0;
};

// The full two-stage pipeline: budget DP, then (only if some production cap
// is violated) greedy order + exchange local search over launch shifts.
// The returned solution always satisfies budget and capacity constraints.
PipelineResult run_pipeline(const Instance& instance, const PipelineParams& params);

} // namespace fieldplan
