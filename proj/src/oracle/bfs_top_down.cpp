#include <algorithm>
#include <atomic>
#include <memory>
#include <string>

#include "bfly/oracle.hpp"

namespace bfly {

std::size_t DistanceArray::reached() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [](distance_t x) { return x != kUnreached; }));
}

std::size_t DistanceArray::num_levels() const noexcept {
  std::size_t levels = 0;
  for (auto x : d)
    if (x != kUnreached) levels = std::max<std::size_t>(levels, std::size_t{x} + 1);
  return levels;
}

DistanceArray bfs_top_down(const Graph& g, vertex_t root, int threads) {
  const std::size_t n = g.num_vertices();
  if (root >= n)
    throw std::out_of_range("root " + std::to_string(root) + " outside graph of " +
                            std::to_string(n) + " vertices");

  DistanceArray out{root, std::vector<distance_t>(n, kUnreached)};
  auto& d = out.d;

  // Current and next frontier, swapped each level.
  auto current = std::make_unique<vertex_t[]>(n);
  auto next = std::make_unique<vertex_t[]>(n);
  std::size_t current_size = 1;
  current[0] = root;
  d[root] = 0;

  distance_t level = 0;
  while (current_size > 0) {
    std::atomic<std::size_t> next_size{0};
    const auto frontier = static_cast<std::int64_t>(current_size);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) if (threads > 1)
    for (std::int64_t i = 0; i < frontier; ++i) {
      for (auto u : g.neighbors(current[static_cast<std::size_t>(i)])) {
        std::atomic_ref<distance_t> du(d[u]);
        distance_t expected = kUnreached;
        if (du.load(std::memory_order_relaxed) == kUnreached &&
            du.compare_exchange_strong(expected, level + 1, std::memory_order_relaxed)) {
          next[next_size.fetch_add(1, std::memory_order_relaxed)] = u;
        }
      }
    }
    std::swap(current, next);
    current_size = next_size.load();
    ++level;
  }
  return out;
}

std::vector<std::size_t> level_histogram(const DistanceArray& dist) {
  std::vector<std::size_t> sizes(dist.num_levels(), 0);
  for (auto x : dist.d)
    if (x != kUnreached) ++sizes[x];
  return sizes;
}

std::vector<std::size_t> frontier_sizes(const Graph& g, vertex_t root) {
  return level_histogram(bfs_top_down(g, root));
}

}  // namespace bfly
