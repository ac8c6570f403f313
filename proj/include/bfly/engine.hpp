#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bfly/executor.hpp"
#include "bfly/graph.hpp"
#include "bfly/node_state.hpp"
#include "bfly/oracle.hpp"
#include "bfly/schedule.hpp"

namespace bfly {

enum class Strategy { butterfly, all_to_all };

struct EngineConfig {
  std::uint32_t fanout = 1;
  Strategy strategy = Strategy::butterfly;
  WorkerMode worker_mode = WorkerMode::lockstep;
  std::uint32_t intra_node_parallelism = 1;
};

struct RunStats {
  std::size_t levels = 0;
  /// Synchronized frontier size per level, starting with the root's level.
  std::vector<std::size_t> per_level_frontier_size;
  /// Non-empty cross-node transfers; empty source buffers are skipped.
  std::uint64_t remote_messages = 0;
  std::uint64_t remote_vertices_transferred = 0;
  /// Transfers the schedule prescribes, counting empty ones.
  std::uint64_t scheduled_transfers = 0;
  /// One entry per synchronization phase.
  std::vector<std::uint64_t> per_level_remote_messages;
  std::size_t sync_phases = 0;
  std::size_t rounds_executed = 0;
  std::vector<std::uint64_t> buffer_high_water;
  std::chrono::duration<double> elapsed{};
  std::uint64_t traversed_edges = 0;

  std::uint64_t buffer_high_water_max() const noexcept;
};

struct RunResult {
  DistanceArray distances;
  RunStats stats;
};

/// State of every node right after a synchronization phase at `level`, before
/// the queues are swapped. The synchronized frontier is q_global_next.
struct LevelView {
  distance_t level;
  std::span<const NodeState> nodes;
};

using LevelObserver = std::function<void(const LevelView&)>;

/// Multi-node top-down BFS with butterfly (or all-to-all) frontier
/// synchronization over simulated compute nodes.
///
/// All buffers are sized in the constructor; execute() does not allocate.
class Engine {
 public:
  Engine(const Graph& g, const Partition& p, const EngineConfig& cfg);
  /// Uses an explicit synchronization schedule instead of the one implied by
  /// the configuration.
  Engine(const Graph& g, const Partition& p, const EngineConfig& cfg,
         ButterflySchedule schedule);
  ~Engine();

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  void set_observer(LevelObserver observer) { observer_ = std::move(observer); }

  /// Resets every node for `root`: all nodes set d[root] = 0, only the owner
  /// enqueues it.
  void init(vertex_t root);
  /// Phase 1 on every node at the current level.
  void phase1_traverse();
  /// Phase 2: one barrier-separated superstep per schedule round.
  void phase2_sync();
  /// Swaps queues and bumps the level. Returns false once the synchronized
  /// frontier is empty.
  bool advance();

  /// init + loop to termination; allocation-free.
  void execute(vertex_t root);
  /// execute() and collect node 0's distances with the run statistics.
  RunResult run(vertex_t root);

  DistanceArray distances() const;
  const RunStats& stats() const noexcept { return stats_; }
  std::span<const NodeState> nodes() const noexcept { return nodes_; }
  distance_t level() const noexcept { return level_; }
  const ButterflySchedule& schedule() const noexcept { return schedule_; }
  const EngineConfig& config() const noexcept { return cfg_; }
  std::uint64_t incoming_capacity_per_node() const noexcept { return recv_capacity_; }

 private:
  const Graph* graph_;
  EngineConfig cfg_;
  ButterflySchedule schedule_;
  std::uint64_t recv_capacity_;
  std::uint64_t scheduled_per_sync_;
  std::vector<NodeState> nodes_;
  std::unique_ptr<Executor> executor_;
  LevelObserver observer_;
  RunStats stats_;
  distance_t level_ = 0;
  vertex_t root_ = 0;
};

/// One-shot convenience wrapper.
RunResult run(const Graph& g, const Partition& p, vertex_t root, const EngineConfig& cfg);

}  // namespace bfly
