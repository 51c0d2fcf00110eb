#include "subcount/partitioned.hpp"

#include <algorithm>
#include <barrier>
#include <cmath>
#include <condition_variable>
#include <deque>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace subcount {

int ShardPlan::owner(uint32_t v) const {
  for (int i = 0; i < workers; ++i)
    if (v >= ranges[i].first && v < ranges[i].second) return i;
  throw std::out_of_range("shard plan: vertex outside every range");
}

uint64_t ShardPlan::total_halo_rows() const {
  uint64_t rows = 0;
  for (const auto& h : halos) rows += h.size();
  return rows;
}

ShardPlan partition_vertices(const Graph& g, int w) {
  uint32_t n = g.vertex_count();
  if (w < 1 || static_cast<uint32_t>(w) > n)
    throw std::invalid_argument("partition_vertices: workers out of [1, n]");
  ShardPlan plan;
  plan.workers = w;
  uint32_t chunk = n / w, extra = n % w, begin = 0;
  for (int i = 0; i < w; ++i) {
    uint32_t end = begin + chunk + (static_cast<uint32_t>(i) < extra ? 1 : 0);
    plan.ranges.emplace_back(begin, end);
    begin = end;
  }
  plan.halos.resize(w);
  for (int i = 0; i < w; ++i) {
    auto [lo, hi] = plan.ranges[i];
    std::vector<uint32_t>& halo = plan.halos[i];
    for (uint32_t v = lo; v < hi; ++v)
      for (uint32_t u : g.neighbors(v))
        if (u < lo || u >= hi) halo.push_back(u);
    std::sort(halo.begin(), halo.end());
    halo.erase(std::unique(halo.begin(), halo.end()), halo.end());
  }
  return plan;
}

namespace {

struct HaloRow {
  int plan_index;
  uint32_t vertex;
  std::vector<double> row;
};

// Reliable ordered typed channel between two worker identities.
class Channel {
 public:
  void push(HaloRow msg) {
    {
      std::lock_guard lock(mu_);
      q_.push_back(std::move(msg));
    }
    cv_.notify_one();
  }
  HaloRow pop() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return !q_.empty(); });
    HaloRow msg = std::move(q_.front());
    q_.pop_front();
    return msg;
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<HaloRow> q_;
};

std::vector<uint32_t> intersect_range(const std::vector<uint32_t>& sorted,
                                      uint32_t lo, uint32_t hi) {
  auto first = std::lower_bound(sorted.begin(), sorted.end(), lo);
  auto last = std::lower_bound(first, sorted.end(), hi);
  return {first, last};
}

}  // namespace

DistributedResult distributed_estimate(const Graph& g, const TemplateTree& tpl,
                                       int workers, int iterations,
                                       uint64_t seed) {
  if (iterations < 1)
    throw std::invalid_argument("distributed_estimate: iterations >= 1");
  const int k = static_cast<int>(tpl.vertex_count());
  const uint32_t n = g.vertex_count();
  const PartitionPlan plan = partition_template(tpl);
  const ShardPlan shards = partition_vertices(g, workers);
  const int w = shards.workers;

  // parent composite fed by each table, if the table is a passive child
  std::vector<int> passive_of(plan.subtemplates.size(), -1);
  for (size_t idx = 0; idx < plan.subtemplates.size(); ++idx) {
    const auto& s = plan.subtemplates[idx];
    if (!s.is_leaf()) passive_of[s.passive_child] = static_cast<int>(idx);
  }

  // rows worker i owes worker j: owned_i restricted to halo_j
  std::vector<std::vector<std::vector<uint32_t>>> send_sets(w),
      expect_sets(w);
  for (int i = 0; i < w; ++i) {
    send_sets[i].resize(w);
    expect_sets[i].resize(w);
    for (int j = 0; j < w; ++j) {
      if (i == j) continue;
      send_sets[i][j] = intersect_range(shards.halos[j],
                                        shards.ranges[i].first,
                                        shards.ranges[i].second);
      expect_sets[i][j] = intersect_range(shards.halos[i],
                                          shards.ranges[j].first,
                                          shards.ranges[j].second);
    }
  }

  std::vector<std::vector<Channel>> channels(w);
  for (auto& row : channels) row = std::vector<Channel>(w);

  std::vector<double> per_vertex(n, 0.0);
  std::vector<double> totals(iterations, 0.0);
  std::vector<StepMessages> messages;
  for (size_t idx = 0; idx < plan.subtemplates.size(); ++idx)
    if (!plan.subtemplates[idx].is_leaf())
      messages.push_back({static_cast<int>(idx), 0, 0});
  std::mutex message_mu;

  std::barrier sync(w);
  std::vector<std::exception_ptr> errors(w);

  auto worker_body = [&](int me) {
    const auto [lo, hi] = shards.ranges[me];
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int iter = 0; iter < iterations; ++iter) {
      Coloring coloring =
          color_graph(g, k, seed, static_cast<uint64_t>(iter));
      std::vector<std::vector<double>> tables(plan.subtemplates.size());
      for (int idx : plan.schedule) {
        const auto& sub = plan.subtemplates[idx];
        const uint64_t cols = binomial(k, sub.size());
        auto& table = tables[idx];
        table.assign(static_cast<size_t>(n) * cols, nan);  // poison remote
        if (sub.is_leaf()) {
          for (uint32_t v = lo; v < hi; ++v) {
            double* row = table.data() + static_cast<size_t>(v) * k;
            std::fill(row, row + k, 0.0);
            row[coloring.colors[v]] = 1.0;
          }
        } else {
          const auto& active = plan.subtemplates[sub.active_child];
          const auto& passive = plan.subtemplates[sub.passive_child];
          auto splits = color_split_table(k, sub.size(), active.size());
          const uint64_t acols = binomial(k, active.size());
          const uint64_t pcols = binomial(k, passive.size());
          const auto& atab = tables[sub.active_child];
          const auto& ptab = tables[sub.passive_child];
          for (uint32_t v = lo; v < hi; ++v) {
            const double* arow = atab.data() + static_cast<size_t>(v) * acols;
            double* row = table.data() + static_cast<size_t>(v) * cols;
            std::fill(row, row + cols, 0.0);
            for (uint32_t u : g.neighbors(v)) {
              const double* prow =
                  ptab.data() + static_cast<size_t>(u) * pcols;
              for (uint64_t r = 0; r < cols; ++r) {
                double acc = 0.0;
                for (auto [ra, rp] : splits[r]) acc += arow[ra] * prow[rp];
                row[r] += acc;
              }
            }
          }
          tables[sub.active_child] = {};
          tables[sub.passive_child] = {};
        }
        // halo exchange: this table feeds a combine step as passive child
        if (passive_of[idx] >= 0) {
          for (int j = 0; j < w; ++j) {
            if (j == me) continue;
            for (uint32_t v : send_sets[me][j]) {
              std::vector<double> row(
                  table.begin() + static_cast<size_t>(v) * cols,
                  table.begin() + static_cast<size_t>(v + 1) * cols);
              channels[me][j].push({idx, v, std::move(row)});
            }
          }
          uint64_t got_rows = 0, got_bytes = 0;
          for (int j = 0; j < w; ++j) {
            if (j == me) continue;
            for (uint32_t expected : expect_sets[me][j]) {
              HaloRow msg = channels[j][me].pop();
              if (msg.plan_index != idx || msg.vertex != expected ||
                  msg.row.size() != cols)
                throw std::runtime_error(
                    "halo exchange: message contract violation");
              std::copy(msg.row.begin(), msg.row.end(),
                        table.begin() + static_cast<size_t>(msg.vertex) * cols);
              ++got_rows;
              got_bytes += msg.row.size() * sizeof(double);
            }
          }
          if (iter == 0) {
            std::lock_guard lock(message_mu);
            for (auto& m : messages) {
              if (m.plan_index == passive_of[idx]) {
                m.rows += got_rows;
                m.bytes += got_bytes;
              }
            }
          }
        }
      }
      const auto& top = tables[plan.top_index];
      for (uint32_t v = lo; v < hi; ++v) per_vertex[v] = top[v];
      sync.arrive_and_wait();
      if (me == 0) totals[iter] = reduce_blocked(per_vertex);
      sync.arrive_and_wait();
    }
  };

  std::vector<std::thread> pool;
  for (int i = 0; i < w; ++i) {
    pool.emplace_back([&, i] {
      try {
        worker_body(i);
      } catch (...) {
        errors[i] = std::current_exception();
        sync.arrive_and_drop();  // release peers blocked on the barrier
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  DistributedResult result;
  result.estimate = estimate_from_totals(totals, tpl, seed);
  result.messages_per_step = std::move(messages);
  return result;
}

}  // namespace subcount
