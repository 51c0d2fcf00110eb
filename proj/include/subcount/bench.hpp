#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "subcount/graph.hpp"
#include "subcount/template_tree.hpp"

namespace subcount {

struct ScalingRow {
  int threads = 1;
  double wall_seconds = 0.0;
  double speedup = 1.0;     // baseline wall / this wall
  double efficiency = 1.0;  // speedup / (threads / baseline threads)
  uint64_t peak_mem_bytes = 0;
  uint64_t checksum = 0;  // FNV-1a over the per-iteration total bit patterns

  bool operator==(const ScalingRow&) const = default;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;

  bool operator==(const ScalingReport&) const = default;
};

uint64_t totals_checksum(const std::vector<double>& totals);

// Derives speedup/efficiency columns from raw (threads, wall) timings.
// Baseline is the first row. efficiency(p) * (p / p0) * T_p = T_p0 exactly.
ScalingReport report_from_timings(
    const std::vector<std::pair<int, double>>& timings,
    uint64_t peak_mem_bytes = 0, uint64_t checksum = 0);

// For each thread count runs `repeat` timed dp_iteration sweeps with
// identical seeds and keeps the median wall time.
ScalingReport run_scaling(const Graph& g, const TemplateTree& tpl,
                          const std::vector<int>& thread_list, int repeat,
                          uint64_t seed);

std::vector<std::pair<int, double>> efficiency_series(
    const ScalingReport& report);

// CSV schema: threads,wall_seconds,speedup,efficiency,peak_mem_bytes,checksum
void emit_report_csv(const ScalingReport& report, std::ostream& out);
void emit_report_json(const ScalingReport& report, std::ostream& out);
ScalingReport report_from_json(std::istream& in);
void emit_report(const ScalingReport& report, const std::string& format,
                 const std::string& path);

}  // namespace subcount
