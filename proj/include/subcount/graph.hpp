#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace subcount {

// Undirected graph in compressed adjacency (CSR) form. Both directions of
// every edge are stored; neighbor lists are sorted, deduplicated, and free
// of self-loops. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Builds from an arbitrary edge list over vertices [0, n). Self-loops and
  // duplicate (or reversed-duplicate) edges are dropped; the number of
  // dropped input pairs is reported through `dropped` when non-null.
  static Graph from_edges(uint32_t n,
                          std::vector<std::pair<uint32_t, uint32_t>> edges,
                          uint64_t* dropped = nullptr);

  uint32_t vertex_count() const { return n_; }
  uint64_t edge_count() const { return m_; }

  std::span<const uint32_t> neighbors(uint32_t v) const {
    return {adj_.data() + offsets_[v],
            static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
  }
  uint32_t degree(uint32_t v) const {
    return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(uint32_t u, uint32_t v) const;

  const std::vector<uint64_t>& offsets() const { return offsets_; }
  const std::vector<uint32_t>& adjacency() const { return adj_; }

  // Full invariant scan (symmetry, ordering, bounds). Throws on violation.
  void validate() const;

 private:
  uint32_t n_ = 0;
  uint64_t m_ = 0;
  std::vector<uint64_t> offsets_{0};
  std::vector<uint32_t> adj_;
};

struct LoadResult {
  Graph graph;
  uint64_t dropped = 0;  // self-loop / duplicate input lines
};

// Whitespace-separated "u v" pairs, 0-based ids; lines starting with '#' or
// '%' are comments. Vertex range is [0, max id].
LoadResult load_edge_list(const std::string& path);

// One line per undirected edge, smaller endpoint first.
void save_edge_list(const Graph& g, const std::string& path);

struct DegreeStats {
  uint32_t min_degree = 0;
  uint32_t max_degree = 0;
  double mean_degree = 0.0;
  uint32_t isolated = 0;
};

DegreeStats degree_stats(const Graph& g);

struct RmatParams {
  int scale = 10;  // n = 2^scale
  uint64_t edges = 0;
  double a = 0.57, b = 0.19, c = 0.19, d = 0.05;
  uint64_t seed = 0;
};

// Recursive-quadrant generator. Each candidate edge e is drawn by `scale`
// quadrant picks, pick l using uniform01(hash3(seed, e, l)). Self-loops and
// duplicates are dropped afterwards, so the delivered edge count may be
// below the requested one. Deterministic in the parameters.
Graph rmat_generate(const RmatParams& p);

// The raw (u, v) pair for candidate edge `e`, before any dedup. Exposed so
// tests can re-draw the walk independently.
std::pair<uint32_t, uint32_t> rmat_draw_edge(const RmatParams& p, uint64_t e);

}  // namespace subcount
