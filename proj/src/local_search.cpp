#include "fieldplan/local_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "fieldplan/dp.hpp"

namespace fieldplan {

namespace {

struct PackState {
  std::vector<double> totals;
  double objective = 0.0;
  int prev_start = 0;
};

// Packs one cluster onto the running state; returns false if it had to be
// dropped.
bool pack_one(const Instance& instance, const Project& project, PackState& state,
              const DiscountConfig& config, int max_shift) {
  const int s = earliest_feasible_start(project, state.totals, instance.cap,
                                        state.prev_start, max_shift);
  if (s < 0) return false;
  const int T = instance.horizon;
  for (int t = s; t < T; ++t) state.totals[t] += project.production[t - s];
  state.objective += shifted_profit(project, s, config.rho, T);
  state.prev_start = s;
  return true;
}

} // namespace

Permutation initial_permutation(const Instance& instance, const std::vector<int>& selected,
                                const DiscountConfig& config) {
  const int T = instance.horizon;
  const int max_shift = config.effective_max_shift(T);
  std::vector<int> candidates;
  for (int k = 0; k < instance.cluster_count(); ++k)
    if (selected[k] >= 0) candidates.push_back(k);

  Permutation pi;
  if (candidates.empty()) return pi;
  pi.order.reserve(candidates.size());

  PackState state;
  state.totals.assign(T, 0.0);
  std::vector<char> placed(instance.cluster_count(), 0);

  // First element: highest income when started at year one.
  int first = candidates.front();
  double first_income = -1.0;
  for (int k : candidates) {
    const double income =
        shifted_profit(instance.clusters[k].projects[selected[k]], 0, config.rho, T);
    if (income > first_income) {
      first_income = income;
      first = k;
    }
  }
  pi.order.push_back(first);
  placed[first] = 1;
  pack_one(instance, instance.clusters[first].projects[selected[first]], state, config,
           max_shift);

  while (pi.order.size() < candidates.size()) {
    int best = -1;
    double best_increment = -1.0;
    for (int k : candidates) {
      if (placed[k]) continue;
      const Project& project = instance.clusters[k].projects[selected[k]];
      const int s = earliest_feasible_start(project, state.totals, instance.cap,
                                            state.prev_start, max_shift);
      const double increment = s < 0 ? 0.0 : shifted_profit(project, s, config.rho, T);
      if (increment > best_increment) {
        best_increment = increment;
        best = k;
      }
    }
    pi.order.push_back(best);
    placed[best] = 1;
    pack_one(instance, instance.clusters[best].projects[selected[best]], state, config,
             max_shift);
  }
  return pi;
}

namespace {

struct SwapCandidate {
  double objective = 0.0;
  int i = 0, j = 0;

  bool better_than(const SwapCandidate& other) const {
    if (objective != other.objective) return objective > other.objective;
    if (i != other.i) return i < other.i;
    return j < other.j;
  }
};

void raise_bound(std::atomic<double>& bound, double value) {
  double seen = bound.load(std::memory_order_relaxed);
  while (value > seen &&
         !bound.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
  }
}

} // namespace

std::optional<SwapResult> best_swap(const Instance& instance, const std::vector<int>& selected,
                                    const Permutation& pi, const DiscountConfig& config,
                                    double current_objective, int threads) {
  const int n_sel = static_cast<int>(pi.order.size());
  if (n_sel < 2) return std::nullopt;
  const int T = instance.horizon;
  const int max_shift = config.effective_max_shift(T);

  // State after packing each base-order prefix; a transposition (i, j) only
  // changes the order from position i on, so the scan restarts there.
  std::vector<PackState> prefix(n_sel);
  std::vector<double> zero_profit(n_sel, 0.0); // by position in base order
  {
    PackState state;
    state.totals.assign(T, 0.0);
    for (int pos = 0; pos < n_sel; ++pos) {
      prefix[pos] = state;
      const int k = pi.order[pos];
      zero_profit[pos] =
          shifted_profit(instance.clusters[k].projects[selected[k]], 0, config.rho, T);
      pack_one(instance, instance.clusters[k].projects[selected[k]], state, config, max_shift);
    }
  }
  // suffix_zero[pos] = optimistic income of everything not yet packed
  // (rho <= 1 makes the zero-shift profit an upper bound per project).
  std::vector<double> suffix_zero(n_sel + 1, 0.0);
  for (int pos = n_sel - 1; pos >= 0; --pos)
    suffix_zero[pos] = suffix_zero[pos + 1] + zero_profit[pos];

  std::atomic<double> bound{current_objective};

  int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::max(1, std::min(n_threads, n_sel - 1));

  std::vector<SwapCandidate> thread_best(
      n_threads, SwapCandidate{current_objective, n_sel, n_sel});

  auto scan = [&](int tid) {
    SwapCandidate& best = thread_best[tid];
    std::vector<int> order = pi.order;
    for (int i = tid; i < n_sel - 1; i += n_threads) {
      for (int j = i + 1; j < n_sel; ++j) {
        std::swap(order[i], order[j]);
        PackState state = prefix[i];
        double remaining = suffix_zero[i];
        bool pruned = false;
        for (int pos = i; pos < n_sel; ++pos) {
          if (state.objective + remaining < bound.load(std::memory_order_relaxed)) {
            pruned = true;
            break;
          }
          const int k = order[pos];
          remaining -= zero_profit[pos == i ? j : (pos == j ? i : pos)];
          pack_one(instance, instance.clusters[k].projects[selected[k]], state, config,
                   max_shift);
        }
        if (!pruned) {
          const SwapCandidate cand{state.objective, i, j};
          if (cand.better_than(best)) {
            best = cand;
            raise_bound(bound, cand.objective);
          }
        }
        std::swap(order[i], order[j]);
      }
    }
  };

  if (n_threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(scan, t);
    for (std::thread& t : pool) t.join();
  }

  SwapCandidate best{current_objective, n_sel, n_sel};
  for (const SwapCandidate& cand : thread_best)
    if (cand.better_than(best)) best = cand;
  if (best.objective <= current_objective || best.i >= n_sel) return std::nullopt;

  SwapResult result;
  result.permutation = pi;
  std::swap(result.permutation.order[best.i], result.permutation.order[best.j]);
  result.objective = best.objective;
  result.i = best.i;
  result.j = best.j;
  return result;
}

PipelineResult run_pipeline(const Instance& instance, const PipelineParams& params) {
  using clock = std::chrono::steady_clock;
  PipelineResult result;

  const auto t0 = clock::now();
  result.solution = stage_one(instance, params.delta, params.discount);
  result.evaluation = evaluate_solution(instance, result.solution, params.discount);
  result.stage_one_projects.assign(instance.cluster_count(), -1);
  for (int k = 0; k < instance.cluster_count(); ++k)
    if (result.solution.selection[k].selected())
      result.stage_one_projects[k] = result.solution.selection[k].project;
  result.stage1_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  if (result.evaluation.feasible_capacity) return result; // stage one is final

  const auto t1 = clock::now();
  result.stage_two_ran = true;
  const std::vector<int>& selected = result.stage_one_projects;

  Permutation pi = initial_permutation(instance, selected, params.discount);
  Schedule schedule = greedy_pack(instance, selected, pi, params.discount);
  result.objective_trace.push_back(schedule.objective);

  const int max_iters =
      params.max_iters >= 0 ? params.max_iters : 10 * instance.cluster_count();
  double objective = schedule.objective;
  while (result.iterations < max_iters) {
    const auto improved =
        best_swap(instance, selected, pi, params.discount, objective, params.threads);
    if (!improved) break;
    pi = improved->permutation;
    objective = improved->objective;
    result.objective_trace.push_back(objective);
    ++result.iterations;
  }

  schedule = greedy_pack(instance, selected, pi, params.discount);
  result.solution = schedule_to_solution(instance, selected, schedule, params.discount);
  result.evaluation = evaluate_solution(instance, result.solution, params.discount);
  result.stage2_seconds = std::chrono::duration<double>(clock::now() - t1).count();
  if (!result.evaluation.feasible_budget || !result.evaluation.feasible_capacity)
    throw std::logic_error("run_pipeline: stage two produced an infeasible solution");
  return result;
}

} // namespace fieldplan
