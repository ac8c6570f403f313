#include <algorithm>

#include "bfly/graph.hpp"

namespace bfly {

EdgeList symmetrize(const EdgeList& el) {
  EdgeList out;
  out.num_vertices = el.num_vertices;
  out.edges.reserve(el.edges.size() * 2);
  for (const auto& e : el.edges) {
    if (e.src == e.dst) continue;
    out.edges.push_back(e);
    out.edges.push_back({e.dst, e.src});
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  out.edges.shrink_to_fit();
  return out;
}

}  // namespace bfly
