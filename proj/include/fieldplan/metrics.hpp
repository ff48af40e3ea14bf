#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fieldplan {

// One benchmark row. Optional fields stay empty when the producing step was
// skipped, refused, or divided by zero; CSV renders them as blank cells.
struct MetricsRecord {
  std::string id;
  std::optional<double> obj_A;
  std::optional<double> obj_oracle;
  std::optional<double> obj_full;  // incumbent of the full problem
  std::optional<double> ub_full;   // upper bound of the full problem
  std::optional<double> obj_fixed; // incumbent with stage-one projects frozen
  std::optional<double> ub_fixed;
  std::optional<double> gap_full;  // (ub - obj)/ub
  std::optional<double> gap_fixed;
  std::optional<double> decline;   // % lost by freezing projects
  std::optional<double> r1;        // obj_A / ub_full
  std::optional<double> r2;        // obj_A / ub_fixed
  std::optional<double> t_stage1_s;
  std::optional<double> t_stage2_s;
  std::string ub_source; // "oracle", "solver" or ""

  bool operator==(const MetricsRecord&) const = default;
};

// Derived columns from the raw objectives/bounds. Ratios whose denominator
// is missing or zero come back empty.
void compute_metrics(MetricsRecord& record);

// Convenience used by fixture tests: r1/r2/decline/gaps from scratch values.
MetricsRecord compute_metrics(std::optional<double> obj_A, std::optional<double> ub_full,
                              std::optional<double> ub_fixed, std::optional<double> obj_full,
                              std::optional<double> obj_fixed);

extern const char* const kMetricsCsvHeader;

std::string metrics_to_csv(const std::vector<MetricsRecord>& records);
std::vector<MetricsRecord> metrics_from_csv(const std::string& csv);

// Fixed-width human-readable table of the same records.
std::string metrics_to_table(const std::vector<MetricsRecord>& records);

} // namespace fieldplan
