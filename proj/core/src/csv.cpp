#include "fidest/harness/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fidest/quantum/errors.hpp"

namespace fidest::harness {
namespace {

constexpr std::string_view kHeader = "strategy,k,mean_infidelity,stderr,n,bound";

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_real(const std::string& s, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(s, &pos);
    if (pos == s.size()) return x;
  } catch (const std::exception&) {
  }
  throw ValidationError("csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
}

std::size_t parse_count(const std::string& s, std::size_t line_no) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ValidationError("csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  return std::stoull(s);
}

}  // namespace

std::string format_csv(const RunStatistics& stats) {
  std::vector<const StrategySeries*> order;
  for (const auto& s : stats.series) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->label < b->label; });

  std::string out(kHeader);
  out += '\n';
  for (const auto* s : order) {
    if (s->label.find_first_of(",\n") != std::string::npos)
      throw ValidationError("strategy label '" + s->label + "' cannot be written to csv");
    for (std::size_t k = 0; k < s->mean.size(); ++k) {
      out += s->label + ',' + std::to_string(k) + ',' + real(s->mean[k]) + ',' + real(s->stderr_mean[k]) + ',' +
             std::to_string(s->n[k]) + ',';
      if (stats.bound && k < stats.bound->size()) out += real((*stats.bound)[k]);
      out += '\n';
    }
  }
  return out;
}

void write_csv(const RunStatistics& stats, const std::filesystem::path& path) {
  const std::string text = format_csv(stats);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

RunStatistics parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw ValidationError("csv: missing or unexpected header");

  RunStatistics stats;
  std::vector<double> bound;
  bool any_bound = false;
  bool any_empty_bound = false;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 6) throw ValidationError("csv line " + std::to_string(line_no) + ": expected 6 fields");
    if (stats.series.empty() || stats.series.back().label != f[0]) {
      for (const auto& s : stats.series)
        if (s.label == f[0]) throw ValidationError("csv: rows for '" + f[0] + "' are not contiguous");
      stats.series.push_back(StrategySeries{f[0], {}, {}, {}, {}});
    }
    auto& s = stats.series.back();
    const std::size_t k = parse_count(f[1], line_no);
    if (k != s.mean.size())
      throw ValidationError("csv line " + std::to_string(line_no) + ": expected k = " + std::to_string(s.mean.size()));
    s.mean.push_back(parse_real(f[2], line_no));
    s.stderr_mean.push_back(parse_real(f[3], line_no));
    s.n.push_back(parse_count(f[4], line_no));
    if (f[5].empty()) {
      any_empty_bound = true;
    } else {
      any_bound = true;
      const double b = parse_real(f[5], line_no);
      if (stats.series.size() == 1) bound.push_back(b);
    }
  }
  if (stats.series.empty()) throw ValidationError("csv: no data rows");
  for (const auto& s : stats.series)
    if (s.mean.size() != stats.series.front().mean.size())
      throw ValidationError("csv: strategies have different k ranges");
  if (any_bound && any_empty_bound) throw ValidationError("csv: bound column is partially filled");
  if (any_bound) {
    stats.bound = std::move(bound);
    stats.dim = 2;
  }
  return stats;
}

RunStatistics read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

}  // namespace fidest::harness
