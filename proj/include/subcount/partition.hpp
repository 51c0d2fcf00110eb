#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "subcount/template_tree.hpp"

namespace subcount {

// One node of the template decomposition. Either a singleton leaf or a
// composite with an active child (keeps this entry's root) and a passive
// child (the subtree across the cut edge root--cutNeighbor).
struct Subtemplate {
  uint32_t vertex_mask = 0;  // subset of template ids, t <= 16
  uint32_t root = 0;
  int active_child = -1;
  int passive_child = -1;
  int cut_neighbor = -1;

  int size() const { return std::popcount(vertex_mask); }
  bool is_leaf() const { return active_child < 0; }
};

struct PartitionPlan {
  std::vector<Subtemplate> subtemplates;
  std::vector<int> schedule;  // bottom-up: children before parents
  int top_index = -1;

  void validate(const TemplateTree& tpl) const;  // throws on violation
};

// Deterministic decomposition rooted at template vertex 0. Each composite
// cuts the edge from its root to the highest-labeled remaining child
// subtree; the passive child is that subtree rooted at the cut neighbor.
PartitionPlan partition_template(const TemplateTree& tpl);

}  // namespace subcount
