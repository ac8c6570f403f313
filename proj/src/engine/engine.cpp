#include <algorithm>
#include <string>

#include "bfly/engine.hpp"

namespace bfly {
namespace {

ButterflySchedule default_schedule(const Partition& p, const EngineConfig& cfg) {
  const auto cn = static_cast<std::uint32_t>(p.num_parts());
  if (cfg.fanout < 1 || cfg.fanout > cn)
    throw std::invalid_argument("fanout " + std::to_string(cfg.fanout) + " invalid for " +
                                std::to_string(cn) + " compute nodes");
  // All-to-all is the single-round butterfly whose radix is the node count.
  if (cfg.strategy == Strategy::all_to_all) return make_schedule(cn, cn);
  return make_schedule(cn, cfg.fanout);
}

}  // namespace

std::uint64_t RunStats::buffer_high_water_max() const noexcept {
  return buffer_high_water.empty()
             ? 0
             : *std::max_element(buffer_high_water.begin(), buffer_high_water.end());
}

Engine::Engine(const Graph& g, const Partition& p, const EngineConfig& cfg)
    : Engine(g, p, cfg, default_schedule(p, cfg)) {}

Engine::Engine(const Graph& g, const Partition& p, const EngineConfig& cfg,
               ButterflySchedule schedule)
    : graph_(&g), cfg_(cfg), schedule_(std::move(schedule)) {
  const auto cn = p.num_parts();
  if (cn == 0) throw std::invalid_argument("partition has no parts");
  if (p.num_vertices() != g.num_vertices())
    throw std::invalid_argument("partition covers " + std::to_string(p.num_vertices()) +
                                " vertices but graph has " +
                                std::to_string(g.num_vertices()));
  if (schedule_.num_nodes() != cn)
    throw std::invalid_argument("schedule is for " + std::to_string(schedule_.num_nodes()) +
                                " nodes, partition has " + std::to_string(cn));
  if (cfg_.intra_node_parallelism < 1)
    throw std::invalid_argument("intra_node_parallelism must be >= 1");
  if (cfg_.fanout < 1 || cfg_.fanout > cn)
    throw std::invalid_argument("fanout " + std::to_string(cfg_.fanout) + " invalid for " +
                                std::to_string(cn) + " compute nodes");

  const auto n = g.num_vertices();
  recv_capacity_ = buffer_bound(n, schedule_.fanout());
  if (schedule_.max_sources_per_round() * n > recv_capacity_)
    throw std::invalid_argument("schedule pulls from " +
                                std::to_string(schedule_.max_sources_per_round()) +
                                " sources per round, more than the buffer bound allows");
  scheduled_per_sync_ = message_count_remote(schedule_);

  nodes_.reserve(cn);
  for (std::size_t part = 0; part < cn; ++part)
    nodes_.emplace_back(static_cast<node_id>(part), g, p.begin(static_cast<node_id>(part)),
                        p.end(static_cast<node_id>(part)), recv_capacity_);

  // Levels never exceed the vertex count.
  stats_.per_level_frontier_size.reserve(n + 1);
  stats_.per_level_remote_messages.reserve(n + 1);
  stats_.buffer_high_water.resize(cn);

  executor_ = std::make_unique<Executor>(cfg_.worker_mode, cn);
}

Engine::~Engine() = default;

void Engine::init(vertex_t root) {
  if (root >= graph_->num_vertices())
    throw std::out_of_range("root " + std::to_string(root) + " outside graph of " +
                            std::to_string(graph_->num_vertices()) + " vertices");
  root_ = root;
  level_ = 0;
  executor_->superstep([&](node_id g) { nodes_[g].reset(root); });

  stats_.levels = 0;
  stats_.per_level_frontier_size.clear();
  stats_.per_level_frontier_size.push_back(1);
  stats_.remote_messages = 0;
  stats_.remote_vertices_transferred = 0;
  stats_.scheduled_transfers = 0;
  stats_.per_level_remote_messages.clear();
  stats_.sync_phases = 0;
  stats_.rounds_executed = 0;
  std::fill(stats_.buffer_high_water.begin(), stats_.buffer_high_water.end(), 0);
  stats_.elapsed = {};
  stats_.traversed_edges = 0;
}

void Engine::phase1_traverse() {
  const auto level = level_;
  const auto threads = static_cast<int>(cfg_.intra_node_parallelism);
  executor_->superstep([&](node_id g) { nodes_[g].traverse(level, threads); });
}

void Engine::phase2_sync() {
  std::uint64_t messages_before = 0;
  for (const auto& node : nodes_) messages_before += node.counters().messages;

  const auto level = level_;
  const std::span<const NodeState> view(nodes_);
  for (std::size_t round = 0; round < schedule_.num_rounds(); ++round) {
    // Sources expose exactly what they held when the round started.
    for (auto& node : nodes_) node.publish();
    executor_->superstep(
        [&](node_id g) { nodes_[g].pull(schedule_.sources(round, g), view, level); });
    ++stats_.rounds_executed;
  }

  std::uint64_t messages_after = 0;
  for (const auto& node : nodes_) messages_after += node.counters().messages;
  stats_.per_level_remote_messages.push_back(messages_after - messages_before);
  stats_.scheduled_transfers += scheduled_per_sync_;
  ++stats_.sync_phases;

  if (observer_) observer_(LevelView{level_, view});
}

bool Engine::advance() {
  // Every node agrees on the frontier after phase 2, so node 0 decides.
  const auto next_size = nodes_.front().q_global_next().size();
  for (auto& node : nodes_) node.swap_queues();
  ++level_;
  if (next_size == 0) return false;
  stats_.per_level_frontier_size.push_back(next_size);
  return true;
}

void Engine::execute(vertex_t root) {
  const auto start = std::chrono::steady_clock::now();
  init(root);
  do {
    phase1_traverse();
    phase2_sync();
  } while (advance());
  stats_.elapsed = std::chrono::steady_clock::now() - start;

  stats_.levels = stats_.per_level_frontier_size.size();
  for (std::size_t g = 0; g < nodes_.size(); ++g) {
    const auto& c = nodes_[g].counters();
    stats_.remote_messages += c.messages;
    stats_.remote_vertices_transferred += c.vertices_received;
    stats_.traversed_edges += c.edges_scanned;
    stats_.buffer_high_water[g] = c.recv_high_water;
  }
}

DistanceArray Engine::distances() const {
  auto d = nodes_.front().distances();
  return DistanceArray{root_, std::vector<distance_t>(d.begin(), d.end())};
}

RunResult Engine::run(vertex_t root) {
  execute(root);
  return RunResult{distances(), stats_};
}

RunResult run(const Graph& g, const Partition& p, vertex_t root, const EngineConfig& cfg) {
  Engine engine(g, p, cfg);
  return engine.run(root);
}

}  // namespace bfly
