#pragma once

#include <vector>

#include "bfly/graph.hpp"

namespace bfly {

/// Per-vertex hop counts from a single root; kUnreached for vertices outside
/// the root's component.
struct DistanceArray {
  vertex_t root = 0;
  std::vector<distance_t> d;

  std::size_t reached() const noexcept;
  /// 1 + largest finite distance (0 for an empty array).
  std::size_t num_levels() const noexcept;

  friend bool operator==(const DistanceArray&, const DistanceArray&) = default;
};

/// Level-synchronous top-down BFS on one compute node. With threads > 1 the
/// frontier is expanded in parallel; the result does not depend on it.
DistanceArray bfs_top_down(const Graph& g, vertex_t root, int threads = 1);

/// Number of vertices at each distance from root.
std::vector<std::size_t> frontier_sizes(const Graph& g, vertex_t root);

/// Histogram of a distance array by level.
std::vector<std::size_t> level_histogram(const DistanceArray& dist);

}  // namespace bfly
