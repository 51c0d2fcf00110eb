#pragma once

#include <cstdint>

#include "subcount/colorcount.hpp"
#include "subcount/graph.hpp"
#include "subcount/template_tree.hpp"

namespace subcount {

// Exact backtracking oracles. Guard rails: n <= 2000 and t <= 8.

// Injective adjacency-preserving maps V(T) -> V(G).
uint64_t brute_force_embeddings(const Graph& g, const TemplateTree& tpl);

// Embeddings whose image uses t pairwise distinct colors.
uint64_t brute_force_colorful(const Graph& g, const Coloring& coloring,
                              const TemplateTree& tpl);

}  // namespace subcount
