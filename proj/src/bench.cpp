#include "subcount/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "subcount/colorcount.hpp"
#include "subcount/partition.hpp"

namespace subcount {

uint64_t totals_checksum(const std::vector<double>& totals) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a 64
  for (double t : totals) {
    uint64_t bits;
    std::memcpy(&bits, &t, sizeof(bits));
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

ScalingReport report_from_timings(
    const std::vector<std::pair<int, double>>& timings,
    uint64_t peak_mem_bytes, uint64_t checksum) {
  if (timings.empty())
    throw std::invalid_argument("report_from_timings: no timings");
  ScalingReport report;
  const auto [base_threads, base_wall] = timings.front();
  for (auto [threads, wall] : timings) {
    ScalingRow row;
    row.threads = threads;
    row.wall_seconds = wall;
    row.speedup = base_wall / wall;
    row.efficiency = row.speedup /
                     (static_cast<double>(threads) / base_threads);
    row.peak_mem_bytes = peak_mem_bytes;
    row.checksum = checksum;
    report.rows.push_back(row);
  }
  return report;
}

ScalingReport run_scaling(const Graph& g, const TemplateTree& tpl,
                          const std::vector<int>& thread_list, int repeat,
                          uint64_t seed) {
  if (thread_list.empty())
    throw std::invalid_argument("run_scaling: empty thread list");
  if (!std::is_sorted(thread_list.begin(), thread_list.end()))
    throw std::invalid_argument("run_scaling: thread list must be ascending");
  if (repeat < 1) throw std::invalid_argument("run_scaling: repeat >= 1");

  const int k = static_cast<int>(tpl.vertex_count());
  PartitionPlan plan = partition_template(tpl);
  Coloring coloring = color_graph(g, k, seed, 0);
  uint64_t peak = estimate_peak_memory(g.vertex_count(), plan);

  std::vector<std::pair<int, double>> timings;
  uint64_t checksum = 0;
  bool first = true;
  for (int threads : thread_list) {
    std::vector<double> walls;
    double total = 0.0;
    for (int r = 0; r < repeat; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      total = dp_iteration(g, coloring, plan, threads);
      auto t1 = std::chrono::steady_clock::now();
      walls.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(walls.begin(), walls.end());
    double median = (repeat % 2)
                        ? walls[repeat / 2]
                        : 0.5 * (walls[repeat / 2 - 1] + walls[repeat / 2]);
    timings.emplace_back(threads, median);
    uint64_t cs = totals_checksum({total});
    if (first) {
      checksum = cs;
      first = false;
    } else if (cs != checksum) {
      throw std::runtime_error("run_scaling: totals differ across rows");
    }
  }
  return report_from_timings(timings, peak, checksum);
}

std::vector<std::pair<int, double>> efficiency_series(
    const ScalingReport& report) {
  std::vector<std::pair<int, double>> out;
  out.reserve(report.rows.size());
  for (const auto& row : report.rows) out.emplace_back(row.threads,
                                                       row.efficiency);
  return out;
}

void emit_report_csv(const ScalingReport& report, std::ostream& out) {
  out << "threads,wall_seconds,speedup,efficiency,peak_mem_bytes,checksum\n";
  out.precision(17);
  for (const auto& r : report.rows)
    out << r.threads << ',' << r.wall_seconds << ',' << r.speedup << ','
        << r.efficiency << ',' << r.peak_mem_bytes << ',' << r.checksum
        << '\n';
}

void emit_report_json(const ScalingReport& report, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"threads", r.threads},
                    {"wall_seconds", r.wall_seconds},
                    {"speedup", r.speedup},
                    {"efficiency", r.efficiency},
                    {"peak_mem_bytes", r.peak_mem_bytes},
                    {"checksum", r.checksum}});
  }
  out << nlohmann::json{{"rows", rows}}.dump(2) << '\n';
}

ScalingReport report_from_json(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  ScalingReport report;
  for (const auto& r : j.at("rows")) {
    ScalingRow row;
    row.threads = r.at("threads").get<int>();
    row.wall_seconds = r.at("wall_seconds").get<double>();
    row.speedup = r.at("speedup").get<double>();
    row.efficiency = r.at("efficiency").get<double>();
    row.peak_mem_bytes = r.at("peak_mem_bytes").get<uint64_t>();
    row.checksum = r.at("checksum").get<uint64_t>();
    report.rows.push_back(row);
  }
  return report;
}

void emit_report(const ScalingReport& report, const std::string& format,
                 const std::string& path) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot write report: " + path);
    out = &file;
  }
  if (format == "csv") {
    emit_report_csv(report, *out);
  } else if (format == "json") {
    emit_report_json(report, *out);
  } else {
    throw std::invalid_argument("unknown report format: " + format);
  }
  if (!*out) throw std::runtime_error("report write failure");
}

}  // namespace subcount
