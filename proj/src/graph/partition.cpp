#include <algorithm>
#include <string>

#include "bfly/graph.hpp"

namespace bfly {

Partition::Partition(std::vector<vertex_t> boundaries) : boundaries_(std::move(boundaries)) {
  if (boundaries_.size() < 2) throw std::invalid_argument("partition needs at least one part");
  if (boundaries_.front() != 0) throw std::invalid_argument("partition must start at vertex 0");
  if (!std::is_sorted(boundaries_.begin(), boundaries_.end()))
    throw std::invalid_argument("partition boundaries must be ascending");
}

node_id Partition::owner(vertex_t v) const {
  if (v >= num_vertices())
    throw std::out_of_range("vertex " + std::to_string(v) + " outside partition");
  // First boundary strictly greater than v closes the owning part.
  auto it = std::upper_bound(boundaries_.begin() + 1, boundaries_.end(), v);
  return static_cast<node_id>(it - boundaries_.begin() - 1);
}

Partition partition_1d(const Graph& g, std::size_t num_parts) {
  const std::size_t n = g.num_vertices();
  if (num_parts == 0) throw std::invalid_argument("num_parts must be >= 1");
  if (n > 0 && num_parts > n)
    throw std::invalid_argument("num_parts (" + std::to_string(num_parts) +
                                ") exceeds vertex count (" + std::to_string(n) + ")");
  const auto offsets = g.offsets();
  const edge_t m = g.num_edges();

  std::vector<vertex_t> boundaries(num_parts + 1, 0);
  std::size_t v = 0;
  for (std::size_t part = 0; part < num_parts; ++part) {
    // Cumulative target round(m * (part+1) / num_parts), halves rounded up.
    const edge_t target = (2 * m * (part + 1) + num_parts) / (2 * num_parts);
    while (v < n && offsets[v] < target) ++v;
    boundaries[part + 1] = static_cast<vertex_t>(v);
  }
  boundaries[num_parts] = static_cast<vertex_t>(n);
  return Partition(std::move(boundaries));
}

}  // namespace bfly
