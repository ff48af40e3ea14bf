#include "fieldplan/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace fieldplan {

namespace {

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

std::optional<double> ratio(const std::optional<double>& num,
                            const std::optional<double>& den) {
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

} // namespace

void compute_metrics(MetricsRecord& r) {
  r.r1 = ratio(r.obj_A, r.ub_full);
  r.r2 = ratio(r.obj_A, r.ub_fixed);
  if (r.obj_full && r.obj_fixed && *r.obj_full != 0.0)
    r.decline = 100.0 * (*r.obj_full - *r.obj_fixed) / *r.obj_full;
  else
    r.decline = std::nullopt;
  if (r.obj_full && r.ub_full && *r.ub_full != 0.0)
    r.gap_full = (*r.ub_full - *r.obj_full) / *r.ub_full;
  else
    r.gap_full = std::nullopt;
  if (r.obj_fixed && r.ub_fixed && *r.ub_fixed != 0.0)
    r.gap_fixed = (*r.ub_fixed - *r.obj_fixed) / *r.ub_fixed;
  else
    r.gap_fixed = std::nullopt;
}

MetricsRecord compute_metrics(std::optional<double> obj_A, std::optional<double> ub_full,
                              std::optional<double> ub_fixed, std::optional<double> obj_full,
                              std::optional<double> obj_fixed) {
  MetricsRecord r;
  r.obj_A = obj_A;
  r.ub_full = ub_full;
  r.ub_fixed = ub_fixed;
  r.obj_full = obj_full;
  r.obj_fixed = obj_fixed;
  compute_metrics(r);
  return r;
}

const char* const kMetricsCsvHeader =
    "id,obj_A,obj_oracle,obj_full,ub_full,obj_fixed,ub_fixed,gap_full,gap_fixed,"
    "decline,r1,r2,t_stage1_s,t_stage2_s,ub_source";

std::string metrics_to_csv(const std::vector<MetricsRecord>& records) {
  std::string out = kMetricsCsvHeader;
  out += "\n";
  for (const MetricsRecord& r : records) {
    out += r.id;
    out += "," + cell(r.obj_A);
    out += "," + cell(r.obj_oracle);
    out += "," + cell(r.obj_full);
    out += "," + cell(r.ub_full);
    out += "," + cell(r.obj_fixed);
    out += "," + cell(r.ub_fixed);
    out += "," + cell(r.gap_full);
    out += "," + cell(r.gap_fixed);
    out += "," + cell(r.decline);
    out += "," + cell(r.r1);
    out += "," + cell(r.r2);
    out += "," + cell(r.t_stage1_s);
    out += "," + cell(r.t_stage2_s);
    out += "," + r.ub_source;
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

std::optional<double> parse_cell(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::strtod(s.c_str(), nullptr);
}

} // namespace

std::vector<MetricsRecord> metrics_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kMetricsCsvHeader)
    throw std::runtime_error("metrics csv: unexpected header");
  std::vector<MetricsRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 15) throw std::runtime_error("metrics csv: bad field count");
    MetricsRecord r;
    r.id = f[0];
    r.obj_A = parse_cell(f[1]);
    r.obj_oracle = parse_cell(f[2]);
    r.obj_full = parse_cell(f[3]);
    r.ub_full = parse_cell(f[4]);
    r.obj_fixed = parse_cell(f[5]);
    r.ub_fixed = parse_cell(f[6]);
    r.gap_full = parse_cell(f[7]);
    r.gap_fixed = parse_cell(f[8]);
    r.decline = parse_cell(f[9]);
    r.r1 = parse_cell(f[10]);
    r.r2 = parse_cell(f[11]);
    r.t_stage1_s = parse_cell(f[12]);
    r.t_stage2_s = parse_cell(f[13]);
    r.ub_source = f[14];
    records.push_back(std::move(r));
  }
  return records;
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string short_cell(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", *v);
  return buf;
}

} // namespace

std::string metrics_to_table(const std::vector<MetricsRecord>& records) {
  static const char* const headers[] = {"id",    "obj_A",   "obj_full", "ub_full", "obj_fixed",
                                        "ub_fixed", "decline", "r1",       "r2",      "t1_s",
                                        "t2_s",  "ub_src"};
  std::vector<std::vector<std::string>> rows;
  for (const MetricsRecord& r : records)
    rows.push_back({r.id, short_cell(r.obj_A), short_cell(r.obj_full), short_cell(r.ub_full),
                    short_cell(r.obj_fixed), short_cell(r.ub_fixed), short_cell(r.decline),
                    short_cell(r.r1), short_cell(r.r2), short_cell(r.t_stage1_s),
                    short_cell(r.t_stage2_s), r.ub_source.empty() ? "-" : r.ub_source});
  std::size_t width[12];
  for (int c = 0; c < 12; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (int c = 0; c < 12; ++c) out += pad(headers[c], width[c] + (c ? 2 : 0));
  out += "\n";
  for (const auto& row : rows) {
    for (int c = 0; c < 12; ++c) out += pad(row[c], width[c] + (c ? 2 : 0));
    out += "\n";
  }
  return out;
}

} // namespace fieldplan
