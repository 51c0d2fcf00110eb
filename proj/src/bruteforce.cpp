#include "subcount/bruteforce.hpp"

#include <stdexcept>

namespace subcount {

namespace {

struct Backtracker {
  const Graph& g;
  const TemplateTree& tpl;
  const Coloring* coloring;  // null: count all embeddings
  std::vector<int> image;    // template id -> graph vertex, -1 unset
  std::vector<char> used;    // graph vertex already in the image
  std::vector<uint32_t> order;  // template ids, each adjacent to a prior one
  std::vector<int> anchor;      // prior neighbor of order[i] in the template
  uint64_t count = 0;

  Backtracker(const Graph& g_, const TemplateTree& tpl_, const Coloring* c)
      : g(g_), tpl(tpl_), coloring(c) {
    uint32_t t = tpl.vertex_count();
    image.assign(t, -1);
    used.assign(g.vertex_count(), 0);
    std::vector<char> placed(t, 0);
    order.push_back(0);
    anchor.push_back(-1);
    placed[0] = 1;
    for (size_t i = 0; i < order.size(); ++i) {
      for (uint32_t u : tpl.neighbors(order[i])) {
        if (!placed[u]) {
          placed[u] = 1;
          order.push_back(u);
          anchor.push_back(static_cast<int>(order[i]));
        }
      }
    }
  }

  bool consistent(uint32_t tv, uint32_t gv) const {
    for (uint32_t tn : tpl.neighbors(tv)) {
      int gn = image[tn];
      if (gn >= 0 && !g.has_edge(gv, static_cast<uint32_t>(gn))) return false;
    }
    return true;
  }

  bool colors_distinct(uint32_t gv, size_t depth) const {
    if (!coloring) return true;
    uint8_t c = coloring->colors[gv];
    for (size_t i = 0; i < depth; ++i)
      if (coloring->colors[static_cast<uint32_t>(image[order[i]])] == c)
        return false;
    return true;
  }

  void place(size_t depth) {
    if (depth == order.size()) {
      ++count;
      return;
    }
    uint32_t tv = order[depth];
    if (anchor[depth] < 0) {
      for (uint32_t gv = 0; gv < g.vertex_count(); ++gv)
        try_vertex(tv, gv, depth);
    } else {
      uint32_t base = static_cast<uint32_t>(image[anchor[depth]]);
      for (uint32_t gv : g.neighbors(base)) try_vertex(tv, gv, depth);
    }
  }

  void try_vertex(uint32_t tv, uint32_t gv, size_t depth) {
    if (used[gv] || !consistent(tv, gv) || !colors_distinct(gv, depth)) return;
    image[tv] = static_cast<int>(gv);
    used[gv] = 1;
    place(depth + 1);
    used[gv] = 0;
    image[tv] = -1;
  }
};

void check_guard_rails(const Graph& g, const TemplateTree& tpl) {
  if (g.vertex_count() > 2000)
    throw std::invalid_argument("brute force: n > 2000");
  if (tpl.vertex_count() > 8)
    throw std::invalid_argument("brute force: t > 8");
}

}  // namespace

uint64_t brute_force_embeddings(const Graph& g, const TemplateTree& tpl) {
  check_guard_rails(g, tpl);
  Backtracker bt(g, tpl, nullptr);
  bt.place(0);
  return bt.count;
}

uint64_t brute_force_colorful(const Graph& g, const Coloring& coloring,
                              const TemplateTree& tpl) {
  check_guard_rails(g, tpl);
  Backtracker bt(g, tpl, &coloring);
  bt.place(0);
  return bt.count;
}

}  // namespace subcount
