#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fieldplan/generator.hpp"
#include "fieldplan/metrics.hpp"

namespace fieldplan {

struct BenchItem {
  std::string id;
  std::string file;   // instance file, or
  bool generated = false;
  GenParams gen;      // generation spec
};

struct BenchConfig {
  double delta = 0.01;
  double rho = 1.0;
  int max_shift = -1;
  int max_iters = -1;
  int threads = 0;
  bool oracle = false;
  std::int64_t oracle_max_states = 20'000'000;
  std::string solver_cmd;                       // external MILP solver hook
  std::string solver_obj_prefix = "Objective:";
  double solver_time_limit = 60.0;
  std::vector<BenchItem> instances;
};

// Parses the UTF-8 JSON benchmark config (unknown fields rejected).
BenchConfig parse_bench_config(const std::string& text);
BenchConfig load_bench_config(const std::string& path);

// Runs the pipeline (plus the optional exact oracle and external solver) on
// every configured instance. Per-instance problems (missing file, oracle
// refusal) leave blank cells and a note on `log`; they do not abort the run.
std::vector<MetricsRecord> run_benchmark(const BenchConfig& config, std::ostream& log);

} // namespace fieldplan
