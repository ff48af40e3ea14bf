#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fieldplan/bench.hpp"
#include "fieldplan/dp.hpp"
#include "fieldplan/generator.hpp"
#include "fieldplan/instance_io.hpp"
#include "fieldplan/local_search.hpp"
#include "fieldplan/lp_export.hpp"
#include "fieldplan/oracle.hpp"

namespace {

using namespace fieldplan;

Instance load_validated(const std::string& path) {
  Instance instance = load_instance_file(path);
  const auto violations = validate_instance(instance);
  if (!violations.empty()) {
    std::cerr << "invalid instance " << path << ":\n";
    for (const auto& v : violations) std::cerr << "  " << v << "\n";
    throw std::runtime_error("instance validation failed");
  }
  return instance;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"field-planner: two-stage investment planning over oil and gas clusters"};
  app.require_subcommand(1);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a random benchmark instance");
  GenParams gen_params;
  std::string gen_out;
  gen_cmd->add_option("--n", gen_params.n, "cluster count");
  gen_cmd->add_option("--pmin", gen_params.p_min, "min projects per cluster");
  gen_cmd->add_option("--pmax", gen_params.p_max, "max projects per cluster");
  gen_cmd->add_option("--horizon", gen_params.horizon, "planning horizon in years");
  gen_cmd->add_option("--seed", gen_params.seed, "random seed");
  gen_cmd->add_option("--out", gen_out, "output instance file")->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run the two-stage heuristic");
  std::string solve_in, solve_out;
  PipelineParams pipeline;
  solve_cmd->add_option("--in", solve_in, "instance file")->required();
  solve_cmd->add_option("--out", solve_out, "write the solution as JSON");
  solve_cmd->add_option("--delta", pipeline.delta, "budget grid step");
  solve_cmd->add_option("--rho", pipeline.discount.rho, "yearly discount factor in (0,1]");
  solve_cmd->add_option("--max-shift", pipeline.discount.max_shift,
                        "max launch delay in years (-1: horizon-1)");
  solve_cmd->add_option("--max-iters", pipeline.max_iters,
                        "local search iteration cap (-1: 10*n)");
  solve_cmd->add_option("--threads", pipeline.threads, "worker threads (0: all cores)");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum by exhaustive enumeration");
  std::string oracle_in;
  DiscountConfig oracle_discount;
  OracleLimits oracle_limits;
  oracle_cmd->add_option("--in", oracle_in, "instance file")->required();
  oracle_cmd->add_option("--rho", oracle_discount.rho, "yearly discount factor");
  oracle_cmd->add_option("--max-shift", oracle_discount.max_shift, "max launch delay");
  oracle_cmd->add_option("--max-states", oracle_limits.max_states,
                         "refuse instances with more enumeration states");

  // export
  auto* export_cmd = app.add_subcommand("export", "write the MILP in LP format");
  std::string export_in, export_out, export_variant = "full", solver_cmd;
  std::string obj_prefix = "Objective:";
  double time_limit = 60.0, export_delta = 0.01;
  DiscountConfig export_discount;
  export_cmd->add_option("--in", export_in, "instance file")->required();
  export_cmd->add_option("--out", export_out, "output .lp file")->required();
  export_cmd->add_option("--variant", export_variant, "full | fixed")
      ->check(CLI::IsMember({"full", "fixed"}));
  export_cmd->add_option("--delta", export_delta, "grid step for the stage-one projects (fixed variant)");
  export_cmd->add_option("--rho", export_discount.rho, "yearly discount factor");
  export_cmd->add_option("--max-shift", export_discount.max_shift, "max launch delay");
  export_cmd->add_option("--solver-cmd", solver_cmd,
                         "external solver command; {file} and {time_limit} are substituted");
  export_cmd->add_option("--obj-prefix", obj_prefix,
                         "stdout line prefix holding the solver's objective");
  export_cmd->add_option("--time-limit", time_limit, "seconds passed to {time_limit}");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark config and emit metrics");
  std::string bench_config_path, bench_out;
  bench_cmd->add_option("--config", bench_config_path, "benchmark config JSON")->required();
  bench_cmd->add_option("--out", bench_out, "CSV output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      save_instance_file(generate(gen_params), gen_out);
      std::cout << "wrote " << gen_out << "\n";
    } else if (*solve_cmd) {
      const Instance instance = load_validated(solve_in);
      const PipelineResult result = run_pipeline(instance, pipeline);
      std::cout << "objective " << result.evaluation.objective << "\n"
                << "spent " << result.evaluation.spent << " of " << instance.budget << "\n"
                << "stage two " << (result.stage_two_ran ? "ran" : "skipped (caps slack)")
                << ", " << result.iterations << " accepted swaps\n"
                << "time " << result.stage1_seconds << " s + " << result.stage2_seconds
                << " s\n";
      if (!solve_out.empty())
        write_file(solve_out, solution_to_json(result.solution, result.evaluation));
    } else if (*oracle_cmd) {
      const Instance instance = load_validated(oracle_in);
      const Solution best = brute_force(instance, oracle_discount, oracle_limits);
      std::cout << "objective " << best.objective << "\nspent " << best.spent << "\n";
      for (std::size_t k = 0; k < best.selection.size(); ++k)
        if (best.selection[k].selected())
          std::cout << "cluster " << k << ": project " << best.selection[k].project
                    << " shift " << best.selection[k].shift << "\n";
    } else if (*export_cmd) {
      const Instance instance = load_validated(export_in);
      std::string text;
      if (export_variant == "full") {
        text = export_milp(instance, export_discount, MilpVariant::full);
      } else {
        const Solution s1 = stage_one(instance, export_delta, export_discount);
        std::vector<int> fixed(instance.cluster_count(), -1);
        for (int k = 0; k < instance.cluster_count(); ++k)
          if (s1.selection[k].selected()) fixed[k] = s1.selection[k].project;
        text = export_milp(instance, export_discount, MilpVariant::fixed_projects, &fixed);
      }
      write_file(export_out, text);
      std::cout << "wrote " << export_out << "\n";
      if (!solver_cmd.empty()) {
        const auto value = run_external_solver(solver_cmd, export_out, obj_prefix, time_limit);
        if (!value) {
          std::cerr << "external solver reported no objective\n";
          return 1;
        }
        std::cout << "solver objective " << *value << "\n";
      }
    } else if (*bench_cmd) {
      const BenchConfig config = load_bench_config(bench_config_path);
      const auto records = run_benchmark(config, std::cerr);
      std::cout << metrics_to_table(records);
      if (!bench_out.empty()) write_file(bench_out, metrics_to_csv(records));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
