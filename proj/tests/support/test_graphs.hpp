#pragma once

// Graph fixtures and independent reference implementations used only by the
// test suites. Nothing here calls into the engine or the CSR traversal path.

#include <bitset>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "bfly/graph.hpp"
#include "bfly/schedule.hpp"

namespace bfly::testing {

inline EdgeList undirected(std::size_t n, const std::vector<std::pair<vertex_t, vertex_t>>& edges) {
  EdgeList el;
  el.num_vertices = n;
  for (auto [u, v] : edges) el.edges.push_back({u, v});
  return el;
}

inline Graph to_graph(const EdgeList& el) { return build_csr(symmetrize(el)); }

inline Graph path_graph(std::size_t n) {
  EdgeList el;
  el.num_vertices = n;
  for (std::size_t v = 0; v + 1 < n; ++v)
    el.edges.push_back({static_cast<vertex_t>(v), static_cast<vertex_t>(v + 1)});
  return to_graph(el);
}

inline Graph star_graph(std::size_t leaves) {
  EdgeList el;
  el.num_vertices = leaves + 1;
  for (std::size_t v = 1; v <= leaves; ++v) el.edges.push_back({0, static_cast<vertex_t>(v)});
  return to_graph(el);
}

/// Erdos-Renyi G(n, p), sampled pairwise.
inline EdgeList gnp_edges(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeList el;
  el.num_vertices = n;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) el.edges.push_back({static_cast<vertex_t>(u), static_cast<vertex_t>(v)});
  return el;
}

inline Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  return to_graph(gnp_edges(n, p, seed));
}

/// Five disjoint components of different shapes laid out on consecutive ids:
/// a path, a cycle, a star, a clique, and a sparse random graph.
inline Graph five_components() {
  EdgeList el;
  vertex_t base = 0;
  auto add = [&](vertex_t u, vertex_t v) { el.edges.push_back({base + u, base + v}); };
  for (vertex_t v = 0; v + 1 < 300; ++v) add(v, v + 1);
  base += 300;
  for (vertex_t v = 0; v < 200; ++v) add(v, (v + 1) % 200);
  base += 200;
  for (vertex_t v = 1; v < 150; ++v) add(0, v);
  base += 150;
  for (vertex_t u = 0; u < 40; ++u)
    for (vertex_t v = u + 1; v < 40; ++v) add(u, v);
  base += 40;
  auto random = gnp_edges(800, 0.01, 99);
  for (auto e : random.edges) add(e.src, e.dst);
  base += 800;
  el.num_vertices = base;
  return to_graph(el);
}

inline Graph rmat_graph(int scale, int edge_factor, std::uint64_t seed) {
  return to_graph(generate_rmat(scale, edge_factor, seed));
}

/// Textbook queue BFS over adjacency sets built directly from an edge list.
inline std::vector<distance_t> naive_bfs(const EdgeList& el, vertex_t root) {
  std::vector<std::set<vertex_t>> adj(el.num_vertices);
  for (auto e : el.edges) {
    if (e.src == e.dst) continue;
    adj[e.src].insert(e.dst);
    adj[e.dst].insert(e.src);
  }
  std::vector<distance_t> d(el.num_vertices, kUnreached);
  std::queue<vertex_t> q;
  d[root] = 0;
  q.push(root);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto u : adj[v])
      if (d[u] == kUnreached) {
        d[u] = d[v] + 1;
        q.push(u);
      }
  }
  return d;
}

/// Set-based reference for symmetrize().
inline std::vector<Edge> set_symmetrize(const EdgeList& el) {
  std::set<std::pair<vertex_t, vertex_t>> s;
  for (auto e : el.edges) {
    if (e.src == e.dst) continue;
    s.insert({e.src, e.dst});
    s.insert({e.dst, e.src});
  }
  std::vector<Edge> out;
  for (auto [u, v] : s) out.push_back({u, v});
  return out;
}

/// knows(g) after applying every round of the receive relation in order.
/// Each round reads the pre-round state, mirroring the engine's snapshots.
inline std::vector<std::bitset<64>> knows_closure(const ButterflySchedule& s,
                                                  std::vector<std::size_t>* per_round_min = nullptr) {
  std::vector<std::bitset<64>> knows(s.num_nodes());
  for (node_id g = 0; g < s.num_nodes(); ++g) knows[g].set(g);
  for (std::size_t i = 0; i < s.num_rounds(); ++i) {
    auto before = knows;
    for (node_id g = 0; g < s.num_nodes(); ++g)
      for (auto src : s.sources(i, g)) knows[g] |= before[src];
    if (per_round_min) {
      std::size_t smallest = 64;
      for (const auto& k : knows) smallest = std::min(smallest, k.count());
      per_round_min->push_back(smallest);
    }
  }
  return knows;
}

}  // namespace bfly::testing
