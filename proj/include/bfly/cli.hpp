#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfly/engine.hpp"
#include "bfly/graph.hpp"
#include "bfly/schedule.hpp"

namespace bfly::cli {

struct LoadedGraph {
  std::string name;
  Graph graph;
  /// Edges as read, before symmetrization and cleanup.
  std::uint64_t input_edges = 0;
};

LoadedGraph load_graph(const std::string& path, EdgeFormat format);
LoadedGraph load_graph(std::istream& in, EdgeFormat format, std::string name);

/// Writes a symmetrized edge list, one "src dst" line per directed edge.
void write_edge_list(const EdgeList& el, std::ostream& out);

struct GenerateOptions {
  int scale = 10;
  int edge_factor = 8;
  std::uint64_t seed = 1;
  std::string out_path;
  RmatParams params;
};

struct GenerateSummary {
  std::size_t num_vertices = 0;
  std::uint64_t num_edges = 0;
};

GenerateSummary cmd_generate(const GenerateOptions& opts);

/// Up to `count` distinct vertices drawn uniformly; a pure function of
/// (vertex count, count, seed). Returns all vertices when count exceeds them.
std::vector<vertex_t> sample_roots(std::size_t num_vertices, std::size_t count,
                                   std::uint64_t seed);

struct BenchOptions {
  std::uint32_t num_nodes = 1;
  std::uint32_t fanout = 1;
  Strategy strategy = Strategy::butterfly;
  WorkerMode mode = WorkerMode::lockstep;
  std::uint32_t threads_per_node = 1;
  std::size_t roots = 100;
  std::size_t trim = 25;
  std::uint64_t seed = 1;
};

struct RunSummary {
  vertex_t root = 0;
  double elapsed_s = 0;
  std::size_t levels = 0;
  std::uint64_t remote_messages = 0;
  std::uint64_t remote_vertices = 0;
  std::uint64_t scheduled_transfers = 0;
  std::uint64_t rounds_executed = 0;
  std::uint64_t buffer_high_water_max = 0;
  std::uint64_t traversed_edges = 0;
  std::vector<std::size_t> frontier_sizes;
  bool kept = false;

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct BenchReport {
  std::string graph_name;
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  std::uint64_t input_edges = 0;
  std::uint32_t num_nodes = 1;
  std::uint32_t fanout = 1;
  std::string strategy;
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t roots_requested = 0;
  std::uint64_t roots_sampled = 0;
  std::uint64_t trim = 0;
  std::uint64_t roots_kept = 0;
  bool roots_truncated = false;
  double mean_time = 0;
  double teps_nominal = 0;
  double teps_touched = 0;
  double mean_traversed_edges = 0;
  double mean_remote_messages = 0;
  double mean_remote_vertices = 0;
  double mean_rounds = 0;
  std::uint64_t max_buffer_high_water = 0;
  std::uint64_t buffer_bound = 0;
  /// Every sampled run in sampling order; `kept` marks the trimmed set.
  std::vector<RunSummary> per_run;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

void to_json(nlohmann::json& j, const RunSummary& r);
void from_json(const nlohmann::json& j, RunSummary& r);
void to_json(nlohmann::json& j, const BenchReport& r);
void from_json(const nlohmann::json& j, BenchReport& r);

/// CSV columns: root, elapsed_s, levels, remote_messages, remote_vertices,
/// buffer_high_water_max.
void write_csv(const BenchReport& report, std::ostream& out);

BenchReport cmd_bench(const LoadedGraph& graph, const BenchOptions& opts);

struct VerifyOptions {
  std::uint32_t num_nodes = 1;
  std::uint32_t fanout = 1;
  Strategy strategy = Strategy::butterfly;
  WorkerMode mode = WorkerMode::lockstep;
  std::uint32_t threads_per_node = 1;
  std::size_t roots = 10;
  std::uint64_t seed = 1;
};

struct Mismatch {
  vertex_t root = 0;
  vertex_t vertex = 0;
  distance_t expected = 0;
  distance_t got = 0;
};

struct VerifyOutcome {
  std::size_t roots_checked = 0;
  std::optional<Mismatch> first_mismatch;

  bool passed() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares the engine against bfs_top_down on sampled roots. A schedule
/// override replaces the one derived from the options.
VerifyOutcome cmd_verify(const Graph& g, const VerifyOptions& opts,
                         const std::optional<ButterflySchedule>& schedule = std::nullopt);

nlohmann::json schedule_to_json(const ButterflySchedule& s);
ButterflySchedule schedule_from_json(const nlohmann::json& j);
nlohmann::json cmd_schedule(std::uint32_t num_nodes, std::uint32_t fanout);

std::string to_string(Strategy s);
std::string to_string(WorkerMode m);

/// Entry point for the `bfly` executable.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace bfly::cli
