#pragma once

#include <cstdint>
#include <vector>

#include "subcount/graph.hpp"
#include "subcount/partition.hpp"
#include "subcount/template_tree.hpp"

namespace subcount {

// ---- dense color-set indexing (combinatorial number system, colex) ----

inline constexpr uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / i;
  return r;
}

// rank({a1 < ... < as}) = sum_i C(ai, i); equals the position of the mask
// in increasing numeric order among all s-subsets of {0..k-1}.
uint32_t subset_rank(uint32_t mask);
uint32_t subset_unrank(uint32_t rank, int s, int k);

// For every color set of full_size (indexed by rank), the (activeRank,
// passiveRank) pairs of its splits into active_size + passive colors, in a
// fixed enumeration order so sums are reproducible everywhere.
std::vector<std::vector<std::pair<uint32_t, uint32_t>>> color_split_table(
    int k, int full_size, int active_size);

// ---- coloring ----

struct Coloring {
  std::vector<uint8_t> colors;  // one value in [0, k) per vertex
  int k = 1;
};

// colors[v] = hash3(seed, iteration, v) mod k. Independent of thread count.
Coloring color_graph(const Graph& g, int k, uint64_t seed, uint64_t iteration);

// ---- one color-coding iteration ----

struct DpResult {
  double total = 0.0;            // colorful embeddings under this coloring
  uint64_t peak_table_bytes = 0;  // instrumented live-table high-water mark
};

// Bottom-up DP over the plan's schedule. Leaf tables hold 1 at the vertex's
// own color; a composite combines its active child at v with its passive
// child at each neighbor u over all color-set splits. Bitwise identical for
// any `threads` value (fixed-order block reduction).
DpResult dp_iteration_instrumented(const Graph& g, const Coloring& coloring,
                                   const PartitionPlan& plan, int threads);
double dp_iteration(const Graph& g, const Coloring& coloring,
                    const PartitionPlan& plan, int threads = 1);

// ---- multi-iteration estimator ----

struct Estimate {
  double value = 0.0;  // mean of per_iteration
  std::vector<double> per_iteration;
  double stderr_value = 0.0;  // sample stddev / sqrt(N); 0 when N = 1
  int iterations = 0;
  uint64_t seed = 0;
};

Estimate estimate_from_totals(const std::vector<double>& totals,
                              const TemplateTree& tpl, uint64_t seed);

// Occurrence-count estimator: per-iteration totals are scaled by
// k^k/k! / |Aut(T)| with k = t, then averaged over N iterations.
Estimate estimate(const Graph& g, const TemplateTree& tpl, int iterations,
                  int threads, uint64_t seed);

// Peak of sum-of-live-table sizes over the schedule, under the liveness
// rule "a child table is freed right after its parent is computed".
// Table size is n * C(k, |S|) * 8 bytes.
uint64_t estimate_peak_memory(uint64_t n, const PartitionPlan& plan);

// Canonical total reduction shared by the threaded and the sharded paths:
// fixed-size blocks summed in ascending vertex order, block partials
// combined in ascending block order.
inline constexpr uint32_t kReduceBlock = 1024;
double reduce_blocked(const std::vector<double>& per_vertex);

}  // namespace subcount
