#include "fieldplan/bench.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <unistd.h>

#include <json.hpp>

#include "fieldplan/instance_io.hpp"
#include "fieldplan/local_search.hpp"
#include "fieldplan/lp_export.hpp"
#include "fieldplan/oracle.hpp"

namespace fieldplan {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed)
      if (it.key() == key) { known = true; break; }
    if (!known)
      throw std::runtime_error("bench config: unknown field \"" + it.key() + "\" in " + where);
  }
}

GenParams parse_gen_spec(const json& j, const std::string& where) {
  reject_unknown(j, {"n", "p_min", "p_max", "horizon", "seed"}, where);
  GenParams params;
  if (j.contains("n")) params.n = j["n"].get<int>();
  if (j.contains("p_min")) params.p_min = j["p_min"].get<int>();
  if (j.contains("p_max")) params.p_max = j["p_max"].get<int>();
  if (j.contains("horizon")) params.horizon = j["horizon"].get<int>();
  if (j.contains("seed")) params.seed = j["seed"].get<std::uint64_t>();
  return params;
}

} // namespace

BenchConfig parse_bench_config(const std::string& text) {
  json doc = json::parse(text);
  if (!doc.is_object()) throw std::runtime_error("bench config: top level must be an object");
  reject_unknown(doc,
                 {"delta", "rho", "max_shift", "max_iters", "threads", "oracle",
                  "oracle_max_states", "solver_cmd", "solver_obj_prefix", "solver_time_limit",
                  "instances"},
                 "top level");
  BenchConfig config;
  if (doc.contains("delta")) config.delta = doc["delta"].get<double>();
  if (doc.contains("rho")) config.rho = doc["rho"].get<double>();
  if (doc.contains("max_shift")) config.max_shift = doc["max_shift"].get<int>();
  if (doc.contains("max_iters")) config.max_iters = doc["max_iters"].get<int>();
  if (doc.contains("threads")) config.threads = doc["threads"].get<int>();
  if (doc.contains("oracle")) config.oracle = doc["oracle"].get<bool>();
  if (doc.contains("oracle_max_states"))
    config.oracle_max_states = doc["oracle_max_states"].get<std::int64_t>();
  if (doc.contains("solver_cmd")) config.solver_cmd = doc["solver_cmd"].get<std::string>();
  if (doc.contains("solver_obj_prefix"))
    config.solver_obj_prefix = doc["solver_obj_prefix"].get<std::string>();
  if (doc.contains("solver_time_limit"))
    config.solver_time_limit = doc["solver_time_limit"].get<double>();
  if (doc.contains("instances")) {
    if (!doc["instances"].is_array())
      throw std::runtime_error("bench config: instances must be an array");
    int index = 0;
    for (const json& item : doc["instances"]) {
      const std::string where = "instances[" + std::to_string(index++) + "]";
      reject_unknown(item, {"id", "file", "gen"}, where);
      BenchItem bi;
      bi.id = item.contains("id") ? item["id"].get<std::string>()
                                  : "instance_" + std::to_string(index);
      if (item.contains("file") == item.contains("gen"))
        throw std::runtime_error("bench config: " + where + " needs exactly one of file/gen");
      if (item.contains("file")) {
        bi.file = item["file"].get<std::string>();
      } else {
        bi.generated = true;
        bi.gen = parse_gen_spec(item["gen"], where + ".gen");
      }
      config.instances.push_back(std::move(bi));
    }
  }
  return config;
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bench config: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_bench_config(text);
}

namespace {

// Writes the LP, runs the solver hook and reports the parsed objective.
std::optional<double> solve_externally(const Instance& instance, const DiscountConfig& discount,
                                       MilpVariant variant, const std::vector<int>* fixed,
                                       const BenchConfig& config, const std::string& tag,
                                       std::ostream& log) {
  namespace fs = std::filesystem;
  const fs::path path =
      fs::temp_directory_path() / ("fieldplan_" + tag + "_" + std::to_string(::getpid()) + ".lp");
  {
    std::ofstream out(path);
    if (!out) {
      log << "note: cannot write " << path.string() << "\n";
      return std::nullopt;
    }
    out << export_milp(instance, discount, variant, fixed);
  }
  const auto value = run_external_solver(config.solver_cmd, path.string(),
                                         config.solver_obj_prefix, config.solver_time_limit);
  std::error_code ec;
  fs::remove(path, ec);
  if (!value) log << "note: external solver gave no objective for " << tag << "\n";
  return value;
}

} // namespace

std::vector<MetricsRecord> run_benchmark(const BenchConfig& config, std::ostream& log) {
  std::vector<MetricsRecord> records;
  for (const BenchItem& item : config.instances) {
    MetricsRecord record;
    record.id = item.id;

    Instance instance;
    bool loaded = false;
    try {
      instance = item.generated ? generate(item.gen) : load_instance_file(item.file);
      const auto violations = validate_instance(instance);
      if (!violations.empty())
        throw std::runtime_error("invalid instance: " + violations.front());
      loaded = true;
    } catch (const std::exception& e) {
      log << "note: skipping " << item.id << ": " << e.what() << "\n";
    }

    if (loaded) {
      PipelineParams params;
      params.delta = config.delta;
      params.discount.rho = config.rho;
      params.discount.max_shift = config.max_shift;
      params.max_iters = config.max_iters;
      params.threads = config.threads;
      const PipelineResult run = run_pipeline(instance, params);
      record.obj_A = run.evaluation.objective;
      record.t_stage1_s = run.stage1_seconds;
      record.t_stage2_s = run.stage2_seconds;

      if (!config.solver_cmd.empty()) {
        const auto full = solve_externally(instance, params.discount, MilpVariant::full, nullptr,
                                           config, item.id + "_full", log);
        const auto fixed =
            solve_externally(instance, params.discount, MilpVariant::fixed_projects,
                             &run.stage_one_projects, config, item.id + "_fixed", log);
        if (full) {
          record.obj_full = record.ub_full = full;
          record.ub_source = "solver";
        }
        if (fixed) record.obj_fixed = record.ub_fixed = fixed;
      }

      if (config.oracle) {
        OracleLimits limits{config.oracle_max_states};
        try {
          const Solution exact = brute_force(instance, params.discount, limits);
          record.obj_oracle = exact.objective;
          if (!record.ub_full) {
            record.obj_full = record.ub_full = exact.objective;
            record.ub_source = "oracle";
          }
          if (!record.ub_fixed) {
            const Solution fixed_opt =
                brute_force_fixed(instance, run.stage_one_projects, params.discount, limits);
            record.obj_fixed = record.ub_fixed = fixed_opt.objective;
          }
        } catch (const OracleRefusal& e) {
          log << "note: oracle refused " << item.id << ": " << e.what() << "\n";
        }
      }
      compute_metrics(record);
    }
    records.push_back(std::move(record));
  }
  return records;
}

} // namespace fieldplan
