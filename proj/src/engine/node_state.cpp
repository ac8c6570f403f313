#include <algorithm>
#include <atomic>
#include <cstring>

#include "bfly/node_state.hpp"

namespace bfly {

void FrontierQueue::append(std::span<const vertex_t> src) noexcept {
  if (src.size() > capacity_ - size_) fatal("frontier queue capacity exceeded");
  if (!src.empty()) std::memcpy(data_.get() + size_, src.data(), src.size_bytes());
  size_ += src.size();
}

NodeState::NodeState(node_id id, const Graph& g, vertex_t owned_begin, vertex_t owned_end,
                     std::size_t recv_capacity)
    : id_(id),
      owned_(g, owned_begin, owned_end),
      d_local_(g.num_vertices(), kUnreached),
      q_local_(owned_.size()),
      q_global_(g.num_vertices()),
      q_local_next_(owned_.size()),
      q_global_next_(g.num_vertices()),
      recv_(recv_capacity) {}

void NodeState::reset(vertex_t root) {
  std::fill(d_local_.begin(), d_local_.end(), kUnreached);
  q_local_.clear();
  q_global_.clear();
  q_local_next_.clear();
  q_global_next_.clear();
  recv_.clear();
  published_ = 0;
  counters_ = {};
  d_local_[root] = 0;
  if (owned_.owns(root)) q_local_.push(root);
}

void NodeState::discover(vertex_t u, distance_t next_level) noexcept {
  if (d_local_[u] != kUnreached) return;
  d_local_[u] = next_level;
  q_global_next_.push(u);
  if (owned_.owns(u)) q_local_next_.push(u);
}

void NodeState::discover_concurrent(vertex_t u, distance_t next_level) noexcept {
  std::atomic_ref<distance_t> du(d_local_[u]);
  distance_t expected = kUnreached;
  if (du.load(std::memory_order_relaxed) != kUnreached ||
      !du.compare_exchange_strong(expected, next_level, std::memory_order_relaxed))
    return;
  q_global_next_.push_concurrent(u);
  if (owned_.owns(u)) q_local_next_.push_concurrent(u);
}

void NodeState::traverse(distance_t level, int threads) {
  const distance_t next_level = level + 1;
  if (threads <= 1) {
    for (auto v : q_local_) {
      auto adj = owned_.neighbors(v);
      counters_.edges_scanned += adj.size();
      for (auto u : adj) discover(u, next_level);
    }
    return;
  }

  const auto frontier = static_cast<std::int64_t>(q_local_.size());
  const vertex_t* queue = q_local_.begin();
  std::uint64_t scanned = 0;
#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : scanned)
  for (std::int64_t i = 0; i < frontier; ++i) {
    auto adj = owned_.neighbors(queue[i]);
    scanned += adj.size();
    for (auto u : adj) discover_concurrent(u, next_level);
  }
  counters_.edges_scanned += scanned;
}

void NodeState::pull(std::span<const node_id> sources, std::span<const NodeState> nodes,
                     distance_t level) {
  recv_.clear();
  for (auto src : sources) {
    const auto& peer = nodes[src];
    const auto n = peer.published();
    if (n == 0) continue;
    recv_.append(peer.q_global_next_.prefix(n));
    ++counters_.messages;
    counters_.vertices_received += n;
  }
  counters_.recv_high_water = std::max<std::uint64_t>(counters_.recv_high_water, recv_.size());

  const distance_t next_level = level + 1;
  for (auto v : recv_) discover(v, next_level);
  recv_.clear();
}

void NodeState::swap_queues() noexcept {
  swap(q_global_, q_global_next_);
  swap(q_local_, q_local_next_);
  q_global_next_.clear();
  q_local_next_.clear();
  published_ = 0;
}

}  // namespace bfly
