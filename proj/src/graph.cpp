#include "subcount/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "subcount/hash.hpp"

namespace subcount {

Graph Graph::from_edges(uint32_t n,
                        std::vector<std::pair<uint32_t, uint32_t>> edges,
                        uint64_t* dropped) {
  uint64_t drop = 0;
  std::vector<std::pair<uint32_t, uint32_t>> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("vertex id out of range");
    if (u == v) {
      ++drop;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  auto last = std::unique(canon.begin(), canon.end());
  drop += static_cast<uint64_t>(canon.end() - last);
  canon.erase(last, canon.end());
  if (dropped) *dropped = drop;

  Graph g;
  g.n_ = n;
  g.m_ = canon.size();
  std::vector<uint32_t> deg(n, 0);
  for (auto [u, v] : canon) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(2 * g.m_);
  std::vector<uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : canon) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  // canon is sorted, so rows for u fill ascending; rows for v get ascending
  // u values as well. Sort anyway to keep the invariant locally checkable.
  for (uint32_t v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + static_cast<ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::validate() const {
  if (offsets_.size() != static_cast<size_t>(n_) + 1)
    throw std::runtime_error("offsets length mismatch");
  if (offsets_[0] != 0 || offsets_[n_] != 2 * m_)
    throw std::runtime_error("offset endpoints invalid");
  for (uint32_t v = 0; v < n_; ++v) {
    if (offsets_[v + 1] < offsets_[v])
      throw std::runtime_error("offsets not nondecreasing");
    auto nb = neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n_) throw std::runtime_error("neighbor id out of range");
      if (nb[i] == v) throw std::runtime_error("self-loop");
      if (i > 0 && nb[i] <= nb[i - 1])
        throw std::runtime_error("neighbor list not strictly ascending");
      if (!has_edge(nb[i], v)) throw std::runtime_error("asymmetric edge");
    }
  }
}

LoadResult load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  uint32_t max_id = 0;
  bool any = false;
  std::string line;
  uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') continue;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v) || u < 0 || v < 0)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": malformed edge line");
    if (u > std::numeric_limits<uint32_t>::max() ||
        v > std::numeric_limits<uint32_t>::max())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": vertex id overflows 32 bits");
    edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
    max_id = std::max({max_id, static_cast<uint32_t>(u),
                       static_cast<uint32_t>(v)});
    any = true;
  }
  LoadResult r;
  r.graph = Graph::from_edges(any ? max_id + 1 : 0, std::move(edges),
                              &r.dropped);
  return r;
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write edge list: " + path);
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    for (uint32_t u : g.neighbors(v))
      if (v < u) out << v << ' ' << u << '\n';
  if (!out) throw std::runtime_error("write failure: " + path);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  uint32_t n = g.vertex_count();
  if (n == 0) return s;
  s.min_degree = std::numeric_limits<uint32_t>::max();
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
    if (d == 0) ++s.isolated;
  }
  s.mean_degree = 2.0 * static_cast<double>(g.edge_count()) / n;
  return s;
}

static void check_rmat_params(const RmatParams& p) {
  if (p.scale < 1) throw std::invalid_argument("rmat: scale must be >= 1");
  double sum = p.a + p.b + p.c + p.d;
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("rmat: a+b+c+d must sum to 1");
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0)
    throw std::invalid_argument("rmat: negative quadrant probability");
}

std::pair<uint32_t, uint32_t> rmat_draw_edge(const RmatParams& p, uint64_t e) {
  uint32_t u = 0, v = 0;
  for (int level = 0; level < p.scale; ++level) {
    double r = uniform01(hash3(p.seed, e, static_cast<uint64_t>(level)));
    uint32_t half = 1u << (p.scale - 1 - level);
    if (r < p.a) {
      // top-left: neither bit set
    } else if (r < p.a + p.b) {
      v += half;
    } else if (r < p.a + p.b + p.c) {
      u += half;
    } else {
      u += half;
      v += half;
    }
  }
  return {u, v};
}

Graph rmat_generate(const RmatParams& p) {
  check_rmat_params(p);
  uint32_t n = 1u << p.scale;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(p.edges);
  for (uint64_t e = 0; e < p.edges; ++e) edges.push_back(rmat_draw_edge(p, e));
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace subcount
