#include "fieldplan/instance_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

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
      throw std::runtime_error("instance json: unknown field \"" + it.key() + "\" in " + where);
  }
}

std::vector<double> number_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::runtime_error("instance json: " + where + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw std::runtime_error("instance json: " + where + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

const json& required(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw std::runtime_error("instance json: missing field \"" + std::string(key) + "\" in " + where);
  return *it;
}

} // namespace

Instance parse_instance_json(const std::string& text) {
  json doc = json::parse(text); // throws json::parse_error on malformed input
  if (!doc.is_object()) throw std::runtime_error("instance json: top level must be an object");
  reject_unknown(doc, {"horizon", "budget", "cap", "clusters"}, "top level");

  Instance instance;
  const json& horizon = required(doc, "horizon", "top level");
  if (!horizon.is_number_integer())
    throw std::runtime_error("instance json: horizon must be an integer");
  instance.horizon = horizon.get<int>();
  const json& budget = required(doc, "budget", "top level");
  if (!budget.is_number()) throw std::runtime_error("instance json: budget must be a number");
  instance.budget = budget.get<double>();
  instance.cap = number_array(required(doc, "cap", "top level"), "cap");

  const json& clusters = required(doc, "clusters", "top level");
  if (!clusters.is_array()) throw std::runtime_error("instance json: clusters must be an array");
  int id = 0;
  for (const auto& jc : clusters) {
    const std::string cwhere = "clusters[" + std::to_string(id) + "]";
    if (!jc.is_object()) throw std::runtime_error("instance json: " + cwhere + " must be an object");
    reject_unknown(jc, {"projects"}, cwhere);
    Cluster cluster;
    cluster.id = id++;
    const json& projects = required(jc, "projects", cwhere);
    if (!projects.is_array())
      throw std::runtime_error("instance json: " + cwhere + ".projects must be an array");
    int pi = 0;
    for (const auto& jp : projects) {
      const std::string pwhere = cwhere + ".projects[" + std::to_string(pi++) + "]";
      if (!jp.is_object()) throw std::runtime_error("instance json: " + pwhere + " must be an object");
      reject_unknown(jp, {"production", "cost_schedule", "revenue"}, pwhere);
      Project p;
      p.production = number_array(required(jp, "production", pwhere), pwhere + ".production");
      p.cost_schedule = number_array(required(jp, "cost_schedule", pwhere), pwhere + ".cost_schedule");
      p.revenue = number_array(required(jp, "revenue", pwhere), pwhere + ".revenue");
      cluster.projects.push_back(std::move(p));
    }
    instance.clusters.push_back(std::move(cluster));
  }
  return instance;
}

std::string instance_to_json(const Instance& instance) {
  json doc;
  doc["horizon"] = instance.horizon;
  doc["budget"] = instance.budget;
  doc["cap"] = instance.cap;
  json clusters = json::array();
  for (const Cluster& cluster : instance.clusters) {
    json projects = json::array();
    for (const Project& p : cluster.projects) {
      projects.push_back(json{{"production", p.production},
                              {"cost_schedule", p.cost_schedule},
                              {"revenue", p.revenue}});
    }
    clusters.push_back(json{{"projects", std::move(projects)}});
  }
  doc["clusters"] = std::move(clusters);
  return doc.dump(2) + "\n";
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_instance_json(text);
}

void save_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json(instance);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string solution_to_json(const Solution& solution, const Evaluation& eval) {
  json doc;
  json sel = json::array();
  for (const SelectionEntry& e : solution.selection) {
    if (e.selected())
      sel.push_back(json{{"project", e.project}, {"shift", e.shift}});
    else
      sel.push_back(nullptr);
  }
  doc["selection"] = std::move(sel);
  doc["objective"] = eval.objective;
  doc["spent"] = eval.spent;
  doc["totals"] = eval.totals;
  doc["feasible_budget"] = eval.feasible_budget;
  doc["feasible_capacity"] = eval.feasible_capacity;
  return doc.dump(2) + "\n";
}

} // namespace fieldplan
