#include <doctest.h>

#include <cmath>
#include <optional>
#include <stdexcept>

#include "fieldplan/metrics.hpp"

using namespace fieldplan;

namespace {

struct BenchmarkRow {
  int n, p_min, p_max;
  std::optional<double> full_obj, full_ub, full_gap;
  std::optional<double> fp_obj, fp_ub, fp_gap, decline;
  std::optional<double> a_obj, r1, r2;
};

// Published comparison table the metric definitions are checked against.
const BenchmarkRow kRows[] = {
    {10, 1, 10, 12851.93, 12851.93, 0.0, 12072.0, 12072.0, 0.0, 6.07, 12072.0, 0.94, 1.0},
    {10, 10, 25, 16460.95, 16460.95, 0.0, 15502.23, 15502.23, 0.0, 5.82, 14710.6, 0.89, 0.95},
    {10, 25, 50, 16988.53, 16988.53, 0.0, 14862.28, 14862.28, 0.0, 12.51, 14764.3, 0.87, 0.99},
    {10, 50, 100, 17140.36, 17140.36, 0.0, 15607.92, 15607.92, 0.0, 8.94, 15374.1, 0.9, 0.99},
    {25, 1, 10, 30465.26, 30465.26, 0.0, 29849.9, 29849.9, 0.0, 2.02, 29571.9, 0.97, 0.99},
    {25, 10, 25, 42501.57, 42501.57, 0.0, 39728.94, 39728.94, 0.0, 6.52, 38930.6, 0.92, 0.98},
    {25, 25, 50, 46508.15, 46849.94, 0.007, 43646.48, 43646.48, 0.0, 6.15, 42407.4, 0.9, 0.97},
    {25, 50, 100, 47432.09, 47906.72, 0.01, 44307.47, 44307.47, 0.0, 6.59, 43324.0, 0.9, 0.98},
    {50, 1, 10, 70568.99, 70568.99, 0.0, 69609.18, 69609.18, 0.0, 1.36, 66328.2, 0.94, 0.95},
    {50, 10, 25, 86529.19, 86659.92, 0.002, 80616.31, 80778.51, 0.002, 6.83, 76845.5, 0.89, 0.95},
    {50, 25, 50, 93928.28, 94290.32, 0.003, 88415.05, 88415.05, 0.0, 5.87, 86861.8, 0.92, 0.98},
    {50, 50, 100, 95201.48, 95621.93, 0.004, 88532.86, 88661.56, 0.001, 7.0, 86380.7, 0.9, 0.97},
    {100, 1, 10, 139928.34, 140023.11, 0.0007, 136420.24, 136586.12, 0.001, 2.51, 128679.0, 0.92, 0.94},
    {100, 10, 25, 173898.61, 174065.77, 0.001, 163833.54, 163932.06, 0.0006, 5.79, 154452.0, 0.89, 0.94},
    {100, 25, 50, 189722.3, 190000.79, 0.001, 177064.12, 177138.3, 0.0004, 6.67, 171431.0, 0.9, 0.97},
    {100, 50, 100, 195223.21, 195686.39, 0.0023, 180375.66, 180476.58, 0.0005, 7.61, 176830.0, 0.9, 0.98},
    {250, 250, 500, std::nullopt, std::nullopt, std::nullopt, 515525.8, 516003.7, 0.0009,
     std::nullopt, 495366.0, std::nullopt, 0.96},
};

} // namespace

TEST_CASE("metric formulas reproduce every derivable benchmark cell within 0.01") {
  for (const BenchmarkRow& row : kRows) {
    const MetricsRecord m =
        compute_metrics(row.a_obj, row.full_ub, row.fp_ub, row.full_obj, row.fp_obj);
    const double tol = 0.01 + 1e-12;
    if (row.r1) {
      REQUIRE(m.r1.has_value());
      CHECK(std::abs(*m.r1 - *row.r1) <= tol);
    }
    if (row.r2) {
      REQUIRE(m.r2.has_value());
      CHECK(std::abs(*m.r2 - *row.r2) <= tol);
    }
    if (row.decline) {
      REQUIRE(m.decline.has_value());
      CHECK(std::abs(*m.decline - *row.decline) <= tol); // percent points
    }
    if (row.full_gap) {
      REQUIRE(m.gap_full.has_value());
      CHECK(std::abs(*m.gap_full - *row.full_gap) <= tol);
      CHECK(*m.gap_full >= -1e-12);
    }
    if (row.fp_gap) {
      REQUIRE(m.gap_fixed.has_value());
      CHECK(std::abs(*m.gap_fixed - *row.fp_gap) <= tol);
    }
  }
}

TEST_CASE("spot values: first row and the n=25 head row") {
  const MetricsRecord a = compute_metrics(12072.0, 12851.93, 12072.0, 12851.93, 12072.0);
  CHECK(*a.r1 == doctest::Approx(0.94).epsilon(0.011));
  CHECK(*a.r2 == doctest::Approx(1.0));
  CHECK(*a.decline == doctest::Approx(6.07).epsilon(0.01));

  const MetricsRecord b = compute_metrics(29571.9, 30465.26, std::nullopt, std::nullopt,
                                          std::nullopt);
  CHECK(*b.r1 == doctest::Approx(0.97).epsilon(0.011));
  CHECK(!b.r2.has_value());
  CHECK(!b.decline.has_value());
}

TEST_CASE("an exact hit gives r1 = 1") {
  const MetricsRecord m = compute_metrics(500.0, 500.0, std::nullopt, 500.0, std::nullopt);
  CHECK(*m.r1 == 1.0);
  CHECK(*m.gap_full == 0.0);
}

TEST_CASE("division by zero yields the undefined marker") {
  const MetricsRecord m = compute_metrics(10.0, 0.0, std::nullopt, 0.0, 0.0);
  CHECK(!m.r1.has_value());
  CHECK(!m.gap_full.has_value());
  CHECK(!m.decline.has_value());
}

TEST_CASE("csv round-trips records exactly") {
  std::vector<MetricsRecord> records(3);
  records[0].id = "alpha";
  records[0].obj_A = 123.456789012345;
  records[0].ub_full = 130.0;
  records[0].obj_full = 130.0;
  records[0].ub_source = "oracle";
  compute_metrics(records[0]);
  records[1].id = "beta_missing_everything";
  records[2].id = "gamma";
  records[2].obj_A = 1.0 / 3.0;
  records[2].t_stage1_s = 0.125;
  records[2].t_stage2_s = 3.5e-7;

  const std::string csv = metrics_to_csv(records);
  const std::vector<MetricsRecord> parsed = metrics_from_csv(csv);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) CHECK(parsed[i] == records[i]);

  CHECK_THROWS_AS(metrics_from_csv("bad,header\n1,2\n"), std::runtime_error);
}

TEST_CASE("human table renders blanks as dashes") {
  MetricsRecord r;
  r.id = "x";
  const std::string table = metrics_to_table({r});
  CHECK(table.find("obj_A") != std::string::npos);
  CHECK(table.find('-') != std::string::npos);
}
