#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subcount/colorcount.hpp"
#include "subcount/graph.hpp"
#include "subcount/template_tree.hpp"

namespace subcount {

// Vertex sharding for the simulated multi-worker run: contiguous near-equal
// ranges plus, per worker, the remote vertices adjacent to owned ones.
struct ShardPlan {
  int workers = 1;
  std::vector<std::pair<uint32_t, uint32_t>> ranges;  // [begin, end)
  std::vector<std::vector<uint32_t>> halos;           // sorted, no owned ids

  int owner(uint32_t v) const;

  // Rows crossing worker boundaries for one passive-child exchange.
  uint64_t total_halo_rows() const;
};

ShardPlan partition_vertices(const Graph& g, int w);

struct StepMessages {
  int plan_index = -1;  // composite subtemplate whose combine this feeds
  uint64_t rows = 0;    // halo rows exchanged, summed over workers
  uint64_t bytes = 0;
};

struct DistributedResult {
  Estimate estimate;
  std::vector<StepMessages> messages_per_step;  // one entry per composite
};

// In-process reproduction of the MPI execution: workers own contiguous
// vertex ranges, compute DP rows for owned vertices only, and after each
// composite's passive-child table completes push those rows for halo
// vertices over typed channels before the combine step. Per-iteration
// totals are bitwise identical to the single-process run. Unreceived
// remote cells are poisoned with NaN, so any protocol gap corrupts the
// total instead of passing silently; a row arriving for an unexpected
// vertex is a hard fault.
DistributedResult distributed_estimate(const Graph& g, const TemplateTree& tpl,
                                       int workers, int iterations,
                                       uint64_t seed);

}  // namespace subcount
