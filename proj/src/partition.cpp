#include "subcount/partition.hpp"

#include <stdexcept>

namespace subcount {

namespace {

struct Builder {
  const TemplateTree& tpl;
  std::vector<int> parent;  // rooted at template vertex 0
  PartitionPlan plan;

  explicit Builder(const TemplateTree& t) : tpl(t) {
    uint32_t n = tpl.vertex_count();
    parent.assign(n, -1);
    std::vector<uint32_t> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
      uint32_t v = stack.back();
      stack.pop_back();
      for (uint32_t u : tpl.neighbors(v)) {
        if (parent[u] < 0) {
          parent[u] = static_cast<int>(v);
          stack.push_back(u);
        }
      }
    }
    parent[0] = -1;
  }

  uint32_t subtree_mask(uint32_t root, uint32_t within) {
    uint32_t mask = 1u << root;
    std::vector<uint32_t> stack{root};
    while (!stack.empty()) {
      uint32_t v = stack.back();
      stack.pop_back();
      for (uint32_t u : tpl.neighbors(v)) {
        uint32_t bit = 1u << u;
        if ((within & bit) && !(mask & bit) &&
            parent[u] == static_cast<int>(v)) {
          mask |= bit;
          stack.push_back(u);
        }
      }
    }
    return mask;
  }

  // Emits the decomposition of the subtree (mask, root) in schedule order:
  // passive side first, then active side, then the composite itself.
  int build(uint32_t mask, uint32_t root) {
    if ((mask & (mask - 1)) == 0) {
      plan.subtemplates.push_back({mask, root, -1, -1, -1});
      int idx = static_cast<int>(plan.subtemplates.size()) - 1;
      plan.schedule.push_back(idx);
      return idx;
    }
    // cut the edge to the highest-labeled child subtree still in mask
    int cut = -1;
    for (uint32_t u : tpl.neighbors(root)) {
      if ((mask & (1u << u)) && parent[u] == static_cast<int>(root))
        cut = std::max(cut, static_cast<int>(u));
    }
    if (cut < 0) throw std::logic_error("partition: composite without child");
    uint32_t passive_mask = subtree_mask(static_cast<uint32_t>(cut), mask);
    uint32_t active_mask = mask & ~passive_mask;
    int passive = build(passive_mask, static_cast<uint32_t>(cut));
    int active = build(active_mask, root);
    plan.subtemplates.push_back({mask, root, active, passive, cut});
    int idx = static_cast<int>(plan.subtemplates.size()) - 1;
    plan.schedule.push_back(idx);
    return idx;
  }
};

}  // namespace

PartitionPlan partition_template(const TemplateTree& tpl) {
  Builder b(tpl);
  uint32_t full = (1u << tpl.vertex_count()) - 1;
  b.plan.top_index = b.build(full, 0);
  b.plan.validate(tpl);
  return b.plan;
}

void PartitionPlan::validate(const TemplateTree& tpl) const {
  uint32_t t = tpl.vertex_count();
  uint32_t full = (1u << t) - 1;
  if (top_index < 0 || subtemplates[top_index].vertex_mask != full)
    throw std::logic_error("plan: top entry does not cover the template");
  if (schedule.size() != subtemplates.size())
    throw std::logic_error("plan: schedule length mismatch");
  std::vector<char> done(subtemplates.size(), 0);
  uint32_t cut_edges = 0;  // bit i set when edge i of tpl has been cut
  for (int idx : schedule) {
    const auto& s = subtemplates[idx];
    if (s.is_leaf()) {
      if (s.size() != 1 || s.passive_child >= 0 || s.cut_neighbor >= 0)
        throw std::logic_error("plan: malformed leaf");
      if (s.vertex_mask != (1u << s.root))
        throw std::logic_error("plan: leaf root outside its set");
    } else {
      const auto& a = subtemplates[s.active_child];
      const auto& p = subtemplates[s.passive_child];
      if (!done[s.active_child] || !done[s.passive_child])
        throw std::logic_error("plan: schedule lists parent before child");
      if ((a.vertex_mask & p.vertex_mask) ||
          (a.vertex_mask | p.vertex_mask) != s.vertex_mask)
        throw std::logic_error("plan: children do not partition the entry");
      if (s.root != a.root)
        throw std::logic_error("plan: root not inherited from active child");
      if (s.cut_neighbor != static_cast<int>(p.root))
        throw std::logic_error("plan: cut neighbor is not the passive root");
      if (!tpl.has_edge(s.root, static_cast<uint32_t>(s.cut_neighbor)))
        throw std::logic_error("plan: cut pair is not a template edge");
      bool found = false;
      for (size_t e = 0; e < tpl.edges().size(); ++e) {
        auto [x, y] = tpl.edges()[e];
        if ((x == s.root && static_cast<int>(y) == s.cut_neighbor) ||
            (y == s.root && static_cast<int>(x) == s.cut_neighbor)) {
          if (cut_edges & (1u << e))
            throw std::logic_error("plan: edge cut twice");
          cut_edges |= 1u << e;
          found = true;
        }
      }
      if (!found) throw std::logic_error("plan: cut edge not found");
    }
    done[idx] = 1;
  }
  if (t > 1 && cut_edges != ((1u << (t - 1)) - 1))
    throw std::logic_error("plan: not every template edge is cut");
}

}  // namespace subcount
