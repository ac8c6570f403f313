#include <algorithm>
#include <string>

#include "bfly/graph.hpp"

namespace bfly {

Graph::Graph(std::vector<edge_t> offsets, std::vector<vertex_t> adjacency)
    : offsets_(std::move(offsets)), adjacency_(std::move(adjacency)) {
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != adjacency_.size())
    throw std::invalid_argument("offsets must start at 0 and end at the adjacency size");
  if (!std::is_sorted(offsets_.begin(), offsets_.end()))
    throw std::invalid_argument("offsets must be non-decreasing");
}

edge_t Graph::max_degree() const noexcept {
  edge_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

EdgeList Graph::to_edge_list() const {
  EdgeList el;
  el.num_vertices = num_vertices();
  el.edges.reserve(adjacency_.size());
  for (vertex_t v = 0; v < num_vertices(); ++v)
    for (auto u : neighbors(v)) el.edges.push_back({v, u});
  return el;
}

Graph build_csr(const EdgeList& el) {
  const auto n = el.num_vertices;
  std::vector<edge_t> offsets(n + 1, 0);
  for (const auto& e : el.edges) {
    if (e.src >= n || e.dst >= n)
      throw std::invalid_argument("edge (" + std::to_string(e.src) + "," +
                                  std::to_string(e.dst) + ") outside vertex range");
    if (e.src == e.dst)
      throw std::invalid_argument("self-edge on vertex " + std::to_string(e.src) +
                                  "; symmetrize the edge list first");
    ++offsets[e.src + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  std::vector<vertex_t> adjacency(el.edges.size());
  std::vector<edge_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : el.edges) adjacency[cursor[e.src]++] = e.dst;

  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last)
      throw std::invalid_argument("duplicate edge (" + std::to_string(v) + "," +
                                  std::to_string(*dup) + "); symmetrize the edge list first");
  }

  Graph g(std::move(offsets), std::move(adjacency));
  for (vertex_t v = 0; v < n; ++v) {
    for (auto u : g.neighbors(v)) {
      auto back = g.neighbors(u);
      if (!std::binary_search(back.begin(), back.end(), v))
        throw std::invalid_argument("edge (" + std::to_string(v) + "," + std::to_string(u) +
                                    ") has no reverse; symmetrize the edge list first");
    }
  }
  return g;
}

}  // namespace bfly
