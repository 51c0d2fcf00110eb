#include "subcount/colorcount.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "subcount/hash.hpp"

namespace subcount {

uint32_t subset_rank(uint32_t mask) {
  uint32_t rank = 0;
  int i = 0;
  while (mask) {
    int a = std::countr_zero(mask);
    mask &= mask - 1;
    ++i;
    rank += static_cast<uint32_t>(binomial(a, i));
  }
  return rank;
}

uint32_t subset_unrank(uint32_t rank, int s, int k) {
  if (rank >= binomial(k, s))
    throw std::out_of_range("subset_unrank: rank out of range");
  uint32_t mask = 0;
  uint32_t r = rank;
  int limit = k;
  for (int i = s; i >= 1; --i) {
    int a = i - 1;
    for (int cand = limit - 1; cand >= i - 1; --cand) {
      if (binomial(cand, i) <= r) {
        a = cand;
        break;
      }
    }
    mask |= 1u << a;
    r -= static_cast<uint32_t>(binomial(a, i));
    limit = a;
  }
  return mask;
}

Coloring color_graph(const Graph& g, int k, uint64_t seed,
                     uint64_t iteration) {
  if (k < 1 || k > kMaxTemplateVertices)
    throw std::invalid_argument("color_graph: k must be in [1, 16]");
  Coloring c;
  c.k = k;
  c.colors.resize(g.vertex_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    c.colors[v] = static_cast<uint8_t>(hash3(seed, iteration, v) %
                                       static_cast<uint64_t>(k));
  return c;
}

double reduce_blocked(const std::vector<double>& per_vertex) {
  double total = 0.0;
  size_t n = per_vertex.size();
  for (size_t b = 0; b < n; b += kReduceBlock) {
    double partial = 0.0;
    size_t end = std::min(n, b + kReduceBlock);
    for (size_t v = b; v < end; ++v) partial += per_vertex[v];
    total += partial;
  }
  return total;
}

std::vector<std::vector<std::pair<uint32_t, uint32_t>>> color_split_table(
    int k, int full_size, int active_size) {
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> splits(
      binomial(k, full_size));
  // Gosper's hack: s-subsets of {0..k-1} in ascending mask order, which is
  // exactly colex rank order.
  uint32_t mask = (1u << full_size) - 1;
  uint32_t limit = 1u << k;
  for (uint32_t rank = 0; mask < limit; ++rank) {
    auto& out = splits[rank];
    for (uint32_t sub = mask;; sub = (sub - 1) & mask) {
      if (std::popcount(sub) == active_size)
        out.emplace_back(subset_rank(sub), subset_rank(mask ^ sub));
      if (sub == 0) break;
    }
    uint32_t c = mask & static_cast<uint32_t>(-static_cast<int32_t>(mask));
    uint32_t r = mask + c;
    if (r >= limit) break;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return splits;
}

// Runs fn over contiguous vertex ranges; range boundaries depend only on
// the thread count requested, but each row is written independently so the
// tables are identical for any value.
static void parallel_rows(uint32_t n, int threads,
                          const std::function<void(uint32_t, uint32_t)>& body) {
  if (threads <= 1 || n < 2) {
    body(0, n);
    return;
  }
  int w = std::min<int>(threads, static_cast<int>(n));
  std::vector<std::thread> pool;
  pool.reserve(w);
  uint32_t chunk = n / w, extra = n % w, begin = 0;
  for (int i = 0; i < w; ++i) {
    uint32_t end = begin + chunk + (static_cast<uint32_t>(i) < extra ? 1 : 0);
    pool.emplace_back(body, begin, end);
    begin = end;
  }
  for (auto& t : pool) t.join();
}

DpResult dp_iteration_instrumented(const Graph& g, const Coloring& coloring,
                                   const PartitionPlan& plan, int threads) {
  const int k = coloring.k;
  const uint32_t n = g.vertex_count();
  if (coloring.colors.size() != n)
    throw std::invalid_argument("dp_iteration: coloring length mismatch");
  if (plan.subtemplates[plan.top_index].size() != k)
    throw std::invalid_argument("dp_iteration: coloring k != template size");

  std::vector<std::vector<double>> tables(plan.subtemplates.size());
  std::vector<uint64_t> table_bytes(plan.subtemplates.size(), 0);
  uint64_t live = 0, peak = 0;

  auto alloc = [&](int idx, double fill) -> std::vector<double>& {
    uint64_t cols = binomial(k, plan.subtemplates[idx].size());
    table_bytes[idx] = static_cast<uint64_t>(n) * cols * sizeof(double);
    tables[idx].assign(static_cast<size_t>(n) * cols, fill);
    live += table_bytes[idx];
    peak = std::max(peak, live);
    return tables[idx];
  };
  auto release = [&](int idx) {
    live -= table_bytes[idx];
    tables[idx] = {};
    tables[idx].shrink_to_fit();
  };

  for (int idx : plan.schedule) {
    const auto& sub = plan.subtemplates[idx];
    if (sub.is_leaf()) {
      auto& table = alloc(idx, 0.0);
      parallel_rows(n, threads, [&](uint32_t lo, uint32_t hi) {
        for (uint32_t v = lo; v < hi; ++v)
          table[static_cast<size_t>(v) * k + coloring.colors[v]] = 1.0;
      });
      continue;
    }
    const auto& active = plan.subtemplates[sub.active_child];
    const auto& passive = plan.subtemplates[sub.passive_child];
    auto splits = color_split_table(k, sub.size(), active.size());
    const uint64_t cols = binomial(k, sub.size());
    const uint64_t acols = binomial(k, active.size());
    const uint64_t pcols = binomial(k, passive.size());
    const auto& atab = tables[sub.active_child];
    const auto& ptab = tables[sub.passive_child];
    auto& table = alloc(idx, 0.0);
    parallel_rows(n, threads, [&](uint32_t lo, uint32_t hi) {
      for (uint32_t v = lo; v < hi; ++v) {
        const double* arow = atab.data() + static_cast<size_t>(v) * acols;
        double* row = table.data() + static_cast<size_t>(v) * cols;
        for (uint32_t u : g.neighbors(v)) {
          const double* prow = ptab.data() + static_cast<size_t>(u) * pcols;
          for (uint64_t r = 0; r < cols; ++r) {
            double acc = 0.0;
            for (auto [ra, rp] : splits[r]) acc += arow[ra] * prow[rp];
            row[r] += acc;
          }
        }
      }
    });
    release(sub.active_child);
    release(sub.passive_child);
  }

  const auto& top = tables[plan.top_index];
  const uint64_t top_cols = binomial(k, k);  // 1; full set has rank 0
  std::vector<double> per_vertex(n);
  for (uint32_t v = 0; v < n; ++v)
    per_vertex[v] = top[static_cast<size_t>(v) * top_cols];
  return {reduce_blocked(per_vertex), peak};
}

double dp_iteration(const Graph& g, const Coloring& coloring,
                    const PartitionPlan& plan, int threads) {
  return dp_iteration_instrumented(g, coloring, plan, threads).total;
}

Estimate estimate_from_totals(const std::vector<double>& totals,
                              const TemplateTree& tpl, uint64_t seed) {
  const int k = static_cast<int>(tpl.vertex_count());
  double kk = 1.0, kf = 1.0;
  for (int i = 0; i < k; ++i) kk *= k;
  for (int i = 2; i <= k; ++i) kf *= i;
  const double sigma = static_cast<double>(count_automorphisms(tpl));
  Estimate e;
  e.seed = seed;
  e.iterations = static_cast<int>(totals.size());
  e.per_iteration.reserve(totals.size());
  for (double t : totals) e.per_iteration.push_back(t * kk / kf / sigma);
  double sum = 0.0;
  for (double x : e.per_iteration) sum += x;
  e.value = sum / e.iterations;
  if (e.iterations > 1) {
    double ss = 0.0;
    for (double x : e.per_iteration) ss += (x - e.value) * (x - e.value);
    e.stderr_value = std::sqrt(ss / (e.iterations - 1)) /
                     std::sqrt(static_cast<double>(e.iterations));
  }
  return e;
}

Estimate estimate(const Graph& g, const TemplateTree& tpl, int iterations,
                  int threads, uint64_t seed) {
  if (iterations < 1)
    throw std::invalid_argument("estimate: iterations must be >= 1");
  const int k = static_cast<int>(tpl.vertex_count());
  PartitionPlan plan = partition_template(tpl);
  std::vector<double> totals;
  totals.reserve(iterations);
  for (int i = 0; i < iterations; ++i) {
    Coloring c = color_graph(g, k, seed, static_cast<uint64_t>(i));
    totals.push_back(dp_iteration(g, c, plan, threads));
  }
  return estimate_from_totals(totals, tpl, seed);
}

uint64_t estimate_peak_memory(uint64_t n, const PartitionPlan& plan) {
  const int k = plan.subtemplates[plan.top_index].size();
  std::vector<uint64_t> bytes(plan.subtemplates.size(), 0);
  uint64_t live = 0, peak = 0;
  for (int idx : plan.schedule) {
    const auto& sub = plan.subtemplates[idx];
    bytes[idx] = n * binomial(k, sub.size()) * sizeof(double);
    live += bytes[idx];
    peak = std::max(peak, live);
    if (!sub.is_leaf()) {
      live -= bytes[sub.active_child];
      live -= bytes[sub.passive_child];
    }
  }
  return peak;
}

}  // namespace subcount
