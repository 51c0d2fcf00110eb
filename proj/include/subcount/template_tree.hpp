#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace subcount {

inline constexpr int kMaxTemplateVertices = 16;

// Tree template T: connected, acyclic, 1..16 vertices with ids 0..t-1.
class TemplateTree {
 public:
  static TemplateTree from_edges(
      uint32_t t, std::vector<std::pair<uint32_t, uint32_t>> edges);

  uint32_t vertex_count() const { return t_; }
  const std::vector<std::pair<uint32_t, uint32_t>>& edges() const {
    return edges_;
  }
  const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj_[v]; }
  bool has_edge(uint32_t u, uint32_t v) const;

 private:
  uint32_t t_ = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges_;
  std::vector<std::vector<uint32_t>> adj_;
};

// Same edge-list format as graphs; ids must cover 0..t-1 exactly.
TemplateTree parse_template(const std::string& path);

// |Aut(T)| of the unrooted tree, via canonical rooted encodings at the
// centroid(s). Two centroids with isomorphic halves contribute a factor 2.
uint64_t count_automorphisms(const TemplateTree& tpl);

}  // namespace subcount
