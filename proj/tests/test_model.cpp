#include <doctest.h>

#include <algorithm>

#include "fieldplan/model.hpp"
#include "fieldplan/rng.hpp"
#include "test_util.hpp"

using namespace fieldplan;
using testutil::make_instance;
using testutil::make_project;
using testutil::scalar_project;

namespace {

Instance two_cluster_instance() {
  return make_instance(2, 100.0, {50.0, 50.0},
                       {{scalar_project(2, 10.0, 20.0, {3.0, 0.0})},
                        {scalar_project(2, 15.0, 30.0, {3.0, 1.0})}});
}

} // namespace

TEST_CASE("validate_instance accepts a well-formed instance") {
  CHECK(validate_instance(two_cluster_instance()).empty());
}

TEST_CASE("validate_instance flags a cap array of the wrong length") {
  Instance instance = two_cluster_instance();
  instance.cap.pop_back();
  const auto violations = validate_instance(instance);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("cap") != std::string::npos);
  CHECK(violations[0].find("length") != std::string::npos);
}

TEST_CASE("validate_instance locates a negative production entry") {
  Instance instance = two_cluster_instance();
  instance.clusters[1].projects[0].production[1] = -2.0;
  const auto violations = validate_instance(instance);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("cluster 1") != std::string::npos);
  CHECK(violations[0].find("project 0") != std::string::npos);
  CHECK(violations[0].find("year 2") != std::string::npos);
}

TEST_CASE("validate_instance reports empty clusters and bad horizon") {
  Instance instance;
  instance.horizon = 0;
  CHECK(!validate_instance(instance).empty());
}

TEST_CASE("shift_project with tau=0 is the identity") {
  const Project p = make_project({5.0, 2.0, 1.0}, {7.0, 1.0, 0.0}, {4.0, 4.0, 4.0});
  for (double rho : {1.0, 0.9, 0.5}) {
    const DiscountConfig config{rho, -1};
    const ShiftedVariant v = shift_project(p, 0, config, 3);
    CHECK(v.production == p.production);
    CHECK(v.cost == doctest::Approx(project_cost(p, rho)).epsilon(1e-12));
    CHECK(v.profit == doctest::Approx(project_profit(p, rho)).epsilon(1e-12));
  }
}

TEST_CASE("shift_project moves the profile right and truncates") {
  const Project p = make_project({5.0, 2.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
  const ShiftedVariant v = shift_project(p, 1, DiscountConfig{1.0, -1}, 3);
  CHECK(v.production == std::vector<double>{0.0, 5.0, 2.0});
}

TEST_CASE("shift_project discounts revenue falling past the horizon away") {
  // hand sum: only year-1 revenue survives the shift, discounted one year
  const Project p = make_project({0.0, 0.0}, {0.0, 0.0}, {10.0, 10.0});
  const ShiftedVariant v = shift_project(p, 1, DiscountConfig{0.9, -1}, 2);
  CHECK(v.profit == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("shift_project rejects out-of-range tau") {
  const Project p = scalar_project(3, 1.0, 1.0);
  CHECK_THROWS_AS(shift_project(p, -1, DiscountConfig{1.0, -1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(shift_project(p, 3, DiscountConfig{1.0, -1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(shift_project(p, 2, DiscountConfig{1.0, 1}, 3), std::invalid_argument);
}

TEST_CASE("evaluate_solution on an empty selection") {
  const Instance instance = two_cluster_instance();
  Solution solution;
  solution.selection.assign(2, SelectionEntry{});
  const Evaluation eval = evaluate_solution(instance, solution, DiscountConfig{});
  CHECK(eval.objective == 0.0);
  CHECK(eval.spent == 0.0);
  CHECK(eval.totals == std::vector<double>{0.0, 0.0});
  CHECK(eval.feasible_budget);
  CHECK(eval.feasible_capacity);
}

TEST_CASE("evaluate_solution reproduces a selected project's profit") {
  const Instance instance =
      make_instance(2, 20000.0, {1e9, 1e9}, {{scalar_project(2, 100.0, 12072.0)}});
  Solution solution;
  solution.selection = {{0, 0}};
  const Evaluation eval = evaluate_solution(instance, solution, DiscountConfig{});
  CHECK(eval.objective == doctest::Approx(12072.0));
  CHECK(eval.feasible_budget);
}

TEST_CASE("evaluate_solution detects a capacity violation") {
  Instance instance = make_instance(1, 100.0, {5.0},
                                    {{scalar_project(1, 1.0, 1.0, {3.0})},
                                     {scalar_project(1, 1.0, 1.0, {3.0})}});
  Solution solution;
  solution.selection = {{0, 0}, {0, 0}};
  const Evaluation eval = evaluate_solution(instance, solution, DiscountConfig{});
  CHECK(eval.totals[0] == doctest::Approx(6.0));
  CHECK(!eval.feasible_capacity);
  CHECK(eval.feasible_budget);
}

TEST_CASE("evaluate_solution rejects bad indices") {
  const Instance instance = two_cluster_instance();
  Solution solution;
  solution.selection = {{3, 0}, {-1, 0}};
  CHECK_THROWS_AS(evaluate_solution(instance, solution, DiscountConfig{}),
                  std::invalid_argument);
  solution.selection = {{0, 5}, {-1, 0}};
  CHECK_THROWS_AS(evaluate_solution(instance, solution, DiscountConfig{}),
                  std::invalid_argument);
}

TEST_CASE("evaluate_solution is order-independent over clusters") {
  Instance instance = two_cluster_instance();
  Solution solution;
  solution.selection = {{0, 0}, {0, 1}};
  const Evaluation a = evaluate_solution(instance, solution, DiscountConfig{0.9, -1});

  std::swap(instance.clusters[0], instance.clusters[1]);
  instance.clusters[0].id = 0;
  instance.clusters[1].id = 1;
  std::swap(solution.selection[0], solution.selection[1]);
  const Evaluation b = evaluate_solution(instance, solution, DiscountConfig{0.9, -1});
  CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-12));
  CHECK(a.spent == doctest::Approx(b.spent).epsilon(1e-12));
}

TEST_CASE("prune_dominated removes a strictly dominated option") {
  const auto pruned = prune_dominated({{10.0, 5.0, 0, 0}, {8.0, 7.0, 1, 0}});
  REQUIRE(pruned.size() == 1);
  CHECK(pruned[0].project == 1);
}

TEST_CASE("prune_dominated keeps an incomparable pair") {
  const auto pruned = prune_dominated({{5.0, 3.0, 0, 0}, {9.0, 8.0, 1, 0}});
  CHECK(pruned.size() == 2);
}

TEST_CASE("prune_dominated keeps the lower index on exact ties") {
  const auto pruned = prune_dominated({{5.0, 3.0, 2, 0}, {5.0, 3.0, 1, 0}});
  REQUIRE(pruned.size() == 1);
  CHECK(pruned[0].project == 1);
}

TEST_CASE("prune_dominated preserves the profit attainable under every budget") {
  Rng rng(20240101);
  for (int round = 0; round < 100; ++round) {
    std::vector<PricedChoice> options;
    const int count = static_cast<int>(rng.uniform_int(1, 8));
    for (int i = 0; i < count; ++i)
      options.push_back({rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0), i, 0});
    const auto pruned = prune_dominated(options);

    for (double budget = 0.0; budget <= 10.5; budget += 0.5) {
      double best_all = 0.0, best_pruned = 0.0;
      for (const auto& o : options)
        if (o.cost <= budget) best_all = std::max(best_all, o.profit);
      for (const auto& o : pruned)
        if (o.cost <= budget) best_pruned = std::max(best_pruned, o.profit);
      CHECK(best_all == best_pruned);
    }
    // no dominated pair survives
    for (const auto& a : pruned)
      for (const auto& b : pruned)
        if (&a != &b) CHECK(!(a.cost >= b.cost && a.profit <= b.profit));
    // idempotence
    const auto twice = prune_dominated(pruned);
    CHECK(twice.size() == pruned.size());
  }
}

TEST_CASE("shift truncation never gains production") {
  Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    const int T = static_cast<int>(rng.uniform_int(1, 8));
    Project p;
    for (int t = 0; t < T; ++t) {
      p.production.push_back(rng.uniform(0.0, 5.0));
      p.cost_schedule.push_back(0.0);
      p.revenue.push_back(rng.uniform(0.0, 5.0));
    }
    const double base_total = discounted_total(p.production, 1.0);
    const DiscountConfig config{1.0, -1};
    for (int tau = 0; tau < T; ++tau) {
      const ShiftedVariant v = shift_project(p, tau, config, T);
      const double shifted_total = discounted_total(v.production, 1.0);
      CHECK(shifted_total <= base_total + 1e-9);
      bool lost = false;
      for (int t = T - tau; t < T; ++t)
        if (p.production[t] > 0.0) lost = true;
      if (!lost) CHECK(shifted_total == doctest::Approx(base_total).epsilon(1e-12));
    }
  }
}

TEST_CASE("discounting makes later launches strictly cheaper and less profitable") {
  const Project p = make_project({1.0, 1.0, 1.0, 1.0}, {6.0, 1.0, 0.0, 0.0},
                                 {9.0, 3.0, 2.0, 1.0});
  const DiscountConfig config{0.9, -1};
  double prev_cost = 1e18, prev_profit = 1e18;
  for (int tau = 0; tau < 4; ++tau) {
    const ShiftedVariant v = shift_project(p, tau, config, 4);
    CHECK(v.cost < prev_cost);
    CHECK(v.profit < prev_profit);
    prev_cost = v.cost;
    prev_profit = v.profit;
  }
}
