#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <utility>
#include <vector>

#include "bfly/types.hpp"

namespace bfly {

struct Edge {
  vertex_t src;
  vertex_t dst;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A directed edge list as read or generated, possibly with duplicates and
/// self-loops until passed through symmetrize().
struct EdgeList {
  std::vector<Edge> edges;
  std::size_t num_vertices = 0;
};

enum class EdgeFormat { edge_list_text, matrix_market };

/// Reads edges from `in`. Text format is one "src dst" pair per line
/// (0-based, '#' and '%' lines ignored). Matrix Market coordinate files are
/// read as patterns; indices are shifted to 0-based and num_vertices is
/// taken from the size line.
EdgeList load_edge_list(std::istream& in, EdgeFormat format);

/// Mirrors every non-loop edge, drops self-loops and duplicates, and sorts by
/// (src, dst). num_vertices is preserved.
EdgeList symmetrize(const EdgeList& el);

/// Immutable compressed adjacency (CSR) of a symmetric simple graph.
class Graph {
 public:
  Graph() : offsets_{0} {}
  Graph(std::vector<edge_t> offsets, std::vector<vertex_t> adjacency);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  /// Directed edge count after cleanup; each undirected edge counts twice.
  edge_t num_edges() const noexcept { return adjacency_.size(); }

  edge_t degree(vertex_t v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
    return {adjacency_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  edge_t max_degree() const noexcept;

  std::span<const edge_t> offsets() const noexcept { return offsets_; }
  std::span<const vertex_t> adjacency() const noexcept { return adjacency_; }

  /// Reconstructs the directed edge list in (src, dst) order.
  EdgeList to_edge_list() const;

 private:
  std::vector<edge_t> offsets_;
  std::vector<vertex_t> adjacency_;
};

/// Builds CSR from a symmetrized edge list. Throws std::invalid_argument on
/// self-loops, duplicate edges, or a missing reverse edge.
Graph build_csr(const EdgeList& el);

/// Quadrant probabilities for the recursive-matrix generator. Defaults follow
/// the Graph500 Kronecker parameters.
struct RmatParams {
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
};

/// Samples edge_factor * 2^scale directed edges over 2^scale vertices. Pure
/// function of its arguments.
EdgeList generate_rmat(int scale, int edge_factor, std::uint64_t seed,
                       const RmatParams& params = {});

/// Contiguous, edge-balanced 1D partition. Part g owns
/// [boundaries[g], boundaries[g+1]).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<vertex_t> boundaries);

  std::size_t num_parts() const noexcept {
    return boundaries_.empty() ? 0 : boundaries_.size() - 1;
  }
  std::span<const vertex_t> boundaries() const noexcept { return boundaries_; }

  vertex_t begin(node_id part) const noexcept { return boundaries_[part]; }
  vertex_t end(node_id part) const noexcept { return boundaries_[part + 1]; }
  bool owns(node_id part, vertex_t v) const noexcept {
    return v >= boundaries_[part] && v < boundaries_[part + 1];
  }
  node_id owner(vertex_t v) const;
  std::size_t num_vertices() const noexcept {
    return boundaries_.empty() ? 0 : boundaries_.back();
  }

  edge_t owned_edges(const Graph& g, node_id part) const noexcept {
    return g.offsets()[end(part)] - g.offsets()[begin(part)];
  }

 private:
  std::vector<vertex_t> boundaries_;
};

Partition partition_1d(const Graph& g, std::size_t num_parts);

}  // namespace bfly
