#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "subcount/graph.hpp"
#include "subcount/template_tree.hpp"

namespace testutil {

using subcount::Graph;
using subcount::TemplateTree;

// Decode a Pruefer sequence over t >= 2 labels into tree edges.
inline std::vector<std::pair<uint32_t, uint32_t>> pruefer_decode(
    const std::vector<uint32_t>& seq, uint32_t t) {
  std::vector<uint32_t> degree(t, 1);
  for (uint32_t s : seq) ++degree[s];
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::vector<char> used(t, 0);
  for (uint32_t s : seq) {
    for (uint32_t leaf = 0; leaf < t; ++leaf) {
      if (degree[leaf] == 1 && !used[leaf]) {
        edges.emplace_back(leaf, s);
        used[leaf] = 1;
        --degree[s];
        break;
      }
    }
  }
  uint32_t a = t, b = t;
  for (uint32_t v = 0; v < t; ++v) {
    if (!used[v] && degree[v] == 1) {
      if (a == t)
        a = v;
      else
        b = v;
    }
  }
  edges.emplace_back(a, b);
  return edges;
}

inline TemplateTree random_tree(uint32_t t, std::mt19937& rng) {
  if (t == 1) return TemplateTree::from_edges(1, {});
  if (t == 2) return TemplateTree::from_edges(2, {{0, 1}});
  std::uniform_int_distribution<uint32_t> pick(0, t - 1);
  std::vector<uint32_t> seq(t - 2);
  for (auto& s : seq) s = pick(rng);
  return TemplateTree::from_edges(t, pruefer_decode(seq, t));
}

inline TemplateTree path_template(uint32_t t) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 0; v + 1 < t; ++v) edges.emplace_back(v, v + 1);
  return TemplateTree::from_edges(t, std::move(edges));
}

inline TemplateTree star_template(uint32_t leaves) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return TemplateTree::from_edges(leaves + 1, std::move(edges));
}

inline Graph triangle() {
  return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
}

inline Graph path_graph(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph erdos_renyi(uint32_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

// Permutation brute force: automorphisms as adjacency-preserving bijections.
inline uint64_t brute_force_automorphisms(const TemplateTree& tpl) {
  uint32_t t = tpl.vertex_count();
  std::vector<uint32_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : tpl.edges()) {
      if (!tpl.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace testutil
