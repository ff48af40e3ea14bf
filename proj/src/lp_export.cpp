#include "fieldplan/lp_export.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <stdexcept>

namespace fieldplan {

namespace {

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

struct Variable {
  std::string name;
  int cluster = 0;
  double cost = 0.0;
  double profit = 0.0;
  std::vector<double> production;
};

// Term-wrapped constraint/objective body: "name: c1 x1 + c2 x2 ... <= rhs".
class RowWriter {
public:
  explicit RowWriter(std::string& out) : out_(out) {}

  void begin(const std::string& name) {
    out_ += " " + name + ":";
    terms_in_line_ = 0;
    any_term_ = false;
  }

  void term(double coeff, const std::string& var) {
    if (terms_in_line_ == kTermsPerLine) {
      out_ += "\n  ";
      terms_in_line_ = 0;
    }
    if (any_term_) out_ += " +";
    out_ += " " + format_number(coeff) + " " + var;
    ++terms_in_line_;
    any_term_ = true;
  }

  void end(const std::string& relation, double rhs, const std::string& fallback_var) {
    if (!any_term_) out_ += " 0 " + fallback_var; // LP rows cannot be empty
    out_ += " " + relation + " " + format_number(rhs) + "\n";
  }

  void end_objective() { out_ += "\n"; }

private:
  static constexpr int kTermsPerLine = 8;
  std::string& out_;
  int terms_in_line_ = 0;
  bool any_term_ = false;
};

std::vector<Variable> expand_variables(const Instance& instance, const DiscountConfig& config,
                                       MilpVariant variant, const std::vector<int>* fixed) {
  if (variant == MilpVariant::fixed_projects &&
      (fixed == nullptr ||
       static_cast<int>(fixed->size()) != instance.cluster_count()))
    throw std::invalid_argument("export_milp: fixed_projects variant needs a selection");

  const int max_shift = config.effective_max_shift(instance.horizon);
  std::vector<Variable> vars;
  for (int k = 0; k < instance.cluster_count(); ++k) {
    const Cluster& cluster = instance.clusters[k];
    int lo = 0, hi = static_cast<int>(cluster.projects.size());
    if (variant == MilpVariant::fixed_projects) {
      if ((*fixed)[k] < 0) continue;
      lo = (*fixed)[k];
      hi = lo + 1;
    }
    for (int i = lo; i < hi; ++i) {
      for (int s = 0; s <= max_shift; ++s) {
        const ShiftedVariant v = shift_project(cluster.projects[i], s, config, instance.horizon);
        bool all_zero = v.profit == 0.0;
        for (double d : v.production)
          if (d != 0.0) { all_zero = false; break; }
        if (all_zero) continue; // truncation-empty variant, pure bloat
        Variable var;
        var.name = "x_" + std::to_string(k) + "_" + std::to_string(i) + "_" + std::to_string(s);
        var.cluster = k;
        var.cost = v.cost;
        var.profit = v.profit;
        var.production = v.production;
        vars.push_back(std::move(var));
      }
    }
  }
  return vars;
}

} // namespace

std::int64_t export_variable_count(const Instance& instance, const DiscountConfig& config,
                                   MilpVariant variant, const std::vector<int>* fixed) {
  return static_cast<std::int64_t>(expand_variables(instance, config, variant, fixed).size());
}

std::string export_milp(const Instance& instance, const DiscountConfig& config,
                        MilpVariant variant, const std::vector<int>* fixed) {
  const std::vector<Variable> vars = expand_variables(instance, config, variant, fixed);
  const int T = instance.horizon;

  std::string out;
  out += "\\ field development portfolio model (";
  out += variant == MilpVariant::full ? "full" : "fixed projects";
  out += ")\n";
  out += "Maximize\n";
  RowWriter row(out);
  row.begin("profit");
  for (const Variable& v : vars) row.term(v.profit, v.name);
  row.end_objective();

  out += "Subject To\n";
  const std::string fallback = vars.empty() ? "x_none" : vars.front().name;

  for (int k = 0; k < instance.cluster_count(); ++k) {
    bool has_var = false;
    for (const Variable& v : vars)
      if (v.cluster == k) { has_var = true; break; }
    if (!has_var) continue;
    row.begin("choose_" + std::to_string(k));
    for (const Variable& v : vars)
      if (v.cluster == k) row.term(1.0, v.name);
    row.end("<=", 1.0, fallback);
  }

  if (variant == MilpVariant::full) {
    row.begin("budget");
    for (const Variable& v : vars)
      if (v.cost != 0.0) row.term(v.cost, v.name);
    row.end("<=", instance.budget, fallback);
  }

  for (int t = 0; t < T; ++t) {
    row.begin("cap_" + std::to_string(t + 1));
    for (const Variable& v : vars)
      if (v.production[t] != 0.0) row.term(v.production[t], v.name);
    row.end("<=", instance.cap[t], fallback);
  }

  out += "Binary\n";
  for (const Variable& v : vars) out += " " + v.name + "\n";
  out += "End\n";
  return out;
}

std::optional<double> run_external_solver(const std::string& command,
                                          const std::string& lp_path,
                                          const std::string& objective_prefix,
                                          double time_limit_seconds) {
  std::string cmd = command;
  const auto substitute = [&cmd](const std::string& key, const std::string& value) {
    for (std::size_t pos = cmd.find(key); pos != std::string::npos; pos = cmd.find(key, pos))
      cmd.replace(pos, key.size(), value), pos += value.size();
  };
  substitute("{file}", lp_path);
  substitute("{time_limit}", format_number(time_limit_seconds));

  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen((cmd + " 2>/dev/null").c_str(), "r"), pclose);
  if (!pipe) return std::nullopt;

  std::string line;
  std::optional<double> objective;
  char buf[4096];
  while (fgets(buf, sizeof(buf), pipe.get()) != nullptr) {
    line += buf;
    if (line.empty() || line.back() != '\n') continue;
    if (!objective && line.rfind(objective_prefix, 0) == 0) {
      const char* p = line.c_str() + objective_prefix.size();
      while (*p == ' ' || *p == '\t' || *p == '=' || *p == ':') ++p;
      char* end = nullptr;
      const double value = std::strtod(p, &end);
      if (end != p) objective = value;
    }
    line.clear();
  }
  return objective;
}

} // namespace fieldplan
