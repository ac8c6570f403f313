#pragma once

#include <span>
#include <vector>

#include "bfly/frontier_queue.hpp"
#include "bfly/graph.hpp"

namespace bfly {

/// Read-only adjacency of the vertices one compute node owns.
class OwnedAdjacency {
 public:
  OwnedAdjacency() = default;
  OwnedAdjacency(const Graph& g, vertex_t begin, vertex_t end)
      : begin_(begin),
        end_(end),
        offsets_(g.offsets().subspan(begin, std::size_t{end} - begin + 1)),
        adjacency_(g.adjacency()) {}

  vertex_t begin() const noexcept { return begin_; }
  vertex_t end() const noexcept { return end_; }
  bool owns(vertex_t v) const noexcept { return v >= begin_ && v < end_; }
  std::size_t size() const noexcept { return end_ - begin_; }
  edge_t num_edges() const noexcept { return offsets_.back() - offsets_.front(); }

  std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
    const auto i = v - begin_;
    return adjacency_.subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
  }

 private:
  vertex_t begin_ = 0;
  vertex_t end_ = 0;
  std::span<const edge_t> offsets_;
  std::span<const vertex_t> adjacency_;
};

/// Counters a node accumulates over one traversal.
struct NodeCounters {
  std::uint64_t edges_scanned = 0;
  std::uint64_t messages = 0;
  std::uint64_t vertices_received = 0;
  std::uint64_t recv_high_water = 0;
};

/// One compute node's private world: owned adjacency, a full-length distance
/// view, and its local/global frontier queues.
class NodeState {
 public:
  NodeState(node_id id, const Graph& g, vertex_t owned_begin, vertex_t owned_end,
            std::size_t recv_capacity);

  node_id id() const noexcept { return id_; }
  const OwnedAdjacency& owned() const noexcept { return owned_; }

  /// Resets all queues and distances for a new root; allocation-free.
  void reset(vertex_t root);

  /// Expands q_local at `level`: unseen neighbors get level + 1 and go to
  /// q_global_next, and to q_local_next when owned.
  void traverse(distance_t level, int threads);

  /// Pulls the published prefix of each source's q_global_next into the
  /// receive buffer, then merges unseen vertices at level + 1.
  void pull(std::span<const node_id> sources, std::span<const NodeState> nodes,
            distance_t level);

  /// Exposes the current q_global_next length to pullers.
  void publish() noexcept { published_ = q_global_next_.size(); }
  std::size_t published() const noexcept { return published_; }

  /// q_global <- q_global_next, q_local <- q_local_next; next queues cleared.
  void swap_queues() noexcept;

  std::span<const distance_t> distances() const noexcept { return d_local_; }
  const FrontierQueue& q_local() const noexcept { return q_local_; }
  const FrontierQueue& q_global() const noexcept { return q_global_; }
  const FrontierQueue& q_local_next() const noexcept { return q_local_next_; }
  const FrontierQueue& q_global_next() const noexcept { return q_global_next_; }
  std::size_t recv_capacity() const noexcept { return recv_.capacity(); }
  const NodeCounters& counters() const noexcept { return counters_; }

 private:
  void discover(vertex_t u, distance_t next_level) noexcept;
  void discover_concurrent(vertex_t u, distance_t next_level) noexcept;

  node_id id_;
  OwnedAdjacency owned_;
  std::vector<distance_t> d_local_;
  FrontierQueue q_local_;
  FrontierQueue q_global_;
  FrontierQueue q_local_next_;
  FrontierQueue q_global_next_;
  FrontierQueue recv_;
  std::size_t published_ = 0;
  NodeCounters counters_;
};

}  // namespace bfly
