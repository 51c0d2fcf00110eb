#include "subcount/template_tree.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace subcount {

TemplateTree TemplateTree::from_edges(
    uint32_t t, std::vector<std::pair<uint32_t, uint32_t>> edges) {
  if (t < 1 || t > static_cast<uint32_t>(kMaxTemplateVertices))
    throw std::invalid_argument("template: vertex count must be in [1, 16]");
  if (edges.size() != static_cast<size_t>(t) - 1)
    throw std::invalid_argument("template: a tree on t vertices has t-1 edges");
  TemplateTree tpl;
  tpl.t_ = t;
  tpl.adj_.resize(t);
  for (auto [u, v] : edges) {
    if (u >= t || v >= t)
      throw std::invalid_argument("template: vertex id out of range");
    if (u == v) throw std::invalid_argument("template: self-loop");
    tpl.adj_[u].push_back(v);
    tpl.adj_[v].push_back(u);
  }
  tpl.edges_ = std::move(edges);
  for (auto& nb : tpl.adj_) std::sort(nb.begin(), nb.end());
  // connectivity check; t-1 edges + connected rules out cycles
  std::vector<char> seen(t, 0);
  std::vector<uint32_t> stack{0};
  seen[0] = 1;
  uint32_t reached = 1;
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    for (uint32_t u : tpl.adj_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != t)
    throw std::invalid_argument("template: not connected (or has a cycle)");
  for (uint32_t v = 0; v < t; ++v) {
    auto& nb = tpl.adj_[v];
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("template: duplicate edge");
  }
  return tpl;
}

bool TemplateTree::has_edge(uint32_t u, uint32_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

TemplateTree parse_template(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open template: " + path);
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
                               ": malformed template line");
    edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
    max_id = std::max({max_id, static_cast<uint32_t>(u),
                       static_cast<uint32_t>(v)});
    any = true;
  }
  uint32_t t = any ? max_id + 1 : 1;
  return TemplateTree::from_edges(t, std::move(edges));
}

namespace {

uint64_t factorial(uint64_t n) {
  uint64_t r = 1;
  for (uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Canonical encoding of the subtree at v (parent excluded) and the number
// of automorphisms fixing v, via sorted child encodings: identical child
// subtrees can be permuted freely.
std::pair<std::string, uint64_t> encode_rooted(const TemplateTree& tpl,
                                               uint32_t v, int parent) {
  std::vector<std::string> child_codes;
  uint64_t aut = 1;
  for (uint32_t u : tpl.neighbors(v)) {
    if (static_cast<int>(u) == parent) continue;
    auto [code, a] = encode_rooted(tpl, u, static_cast<int>(v));
    child_codes.push_back(std::move(code));
    aut *= a;
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  size_t i = 0;
  while (i < child_codes.size()) {
    size_t j = i;
    while (j < child_codes.size() && child_codes[j] == child_codes[i]) ++j;
    aut *= factorial(j - i);
    for (size_t k = i; k < j; ++k) code += child_codes[k];
    i = j;
  }
  code += ")";
  return {code, aut};
}

// Centroid(s): vertices minimizing the largest component after removal.
std::vector<uint32_t> centroids(const TemplateTree& tpl) {
  uint32_t t = tpl.vertex_count();
  std::vector<uint32_t> subtree(t, 1);
  std::vector<uint32_t> best;
  uint32_t best_val = t + 1;
  // iterative post-order from 0
  std::vector<int> parent(t, -1);
  std::vector<uint32_t> order;
  order.reserve(t);
  std::vector<uint32_t> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (uint32_t u : tpl.neighbors(v)) {
      if (parent[u] < 0) {
        parent[u] = static_cast<int>(v);
        stack.push_back(u);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    uint32_t v = *it;
    if (v != 0) subtree[static_cast<uint32_t>(parent[v])] += subtree[v];
  }
  for (uint32_t v = 0; v < t; ++v) {
    uint32_t largest = t - subtree[v];
    for (uint32_t u : tpl.neighbors(v))
      if (parent[u] == static_cast<int>(v) && u != 0)
        largest = std::max(largest, subtree[u]);
    if (largest < best_val) {
      best_val = largest;
      best = {v};
    } else if (largest == best_val) {
      best.push_back(v);
    }
  }
  return best;
}

}  // namespace

uint64_t count_automorphisms(const TemplateTree& tpl) {
  if (tpl.vertex_count() == 1) return 1;
  auto cs = centroids(tpl);
  if (cs.size() == 1) {
    return encode_rooted(tpl, cs[0], -1).second;
  }
  // two centroids, always adjacent
  auto [code0, aut0] = encode_rooted(tpl, cs[0], static_cast<int>(cs[1]));
  auto [code1, aut1] = encode_rooted(tpl, cs[1], static_cast<int>(cs[0]));
  uint64_t aut = aut0 * aut1;
  if (code0 == code1) aut *= 2;
  return aut;
}

}  // namespace subcount
