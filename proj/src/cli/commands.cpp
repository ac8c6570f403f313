#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>

#include "bfly/cli.hpp"

namespace bfly::cli {

using nlohmann::json;

std::string to_string(Strategy s) {
  return s == Strategy::butterfly ? "butterfly" : "all2all";
}

std::string to_string(WorkerMode m) {
  return m == WorkerMode::lockstep ? "lockstep" : "concurrent";
}

LoadedGraph load_graph(std::istream& in, EdgeFormat format, std::string name) {
  auto el = load_edge_list(in, format);
  LoadedGraph out;
  out.name = std::move(name);
  out.input_edges = el.edges.size();
  out.graph = build_csr(symmetrize(el));
  return out;
}

LoadedGraph load_graph(const std::string& path, EdgeFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_graph(in, format, std::filesystem::path(path).stem().string());
}

void write_edge_list(const EdgeList& el, std::ostream& out) {
  for (const auto& e : el.edges) out << e.src << ' ' << e.dst << '\n';
}

GenerateSummary cmd_generate(const GenerateOptions& opts) {
  auto el = symmetrize(generate_rmat(opts.scale, opts.edge_factor, opts.seed, opts.params));
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + opts.out_path + "' for writing");
  out << "# rmat scale=" << opts.scale << " edge_factor=" << opts.edge_factor
      << " seed=" << opts.seed << '\n';
  write_edge_list(el, out);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + opts.out_path + "' failed");
  return {el.num_vertices, el.edges.size()};
}

std::vector<vertex_t> sample_roots(std::size_t num_vertices, std::size_t count,
                                   std::uint64_t seed) {
  std::vector<vertex_t> roots;
  if (count >= num_vertices) {
    roots.resize(num_vertices);
    std::iota(roots.begin(), roots.end(), vertex_t{0});
    return roots;
  }
  std::mt19937_64 rng(seed);
  std::unordered_set<vertex_t> seen;
  roots.reserve(count);
  while (roots.size() < count) {
    auto v = static_cast<vertex_t>(rng() % num_vertices);
    if (seen.insert(v).second) roots.push_back(v);
  }
  return roots;
}

BenchReport cmd_bench(const LoadedGraph& loaded, const BenchOptions& opts) {
  const auto& g = loaded.graph;
  if (g.num_vertices() == 0) throw std::invalid_argument("graph has no vertices");

  BenchReport report;
  report.graph_name = loaded.name;
  report.num_vertices = g.num_vertices();
  report.num_edges = g.num_edges();
  report.input_edges = loaded.input_edges;
  report.num_nodes = opts.num_nodes;
  report.fanout = opts.fanout;
  report.strategy = to_string(opts.strategy);
  report.mode = to_string(opts.mode);
  report.seed = opts.seed;
  report.roots_requested = opts.roots;
  report.trim = opts.trim;

  const auto roots = sample_roots(g.num_vertices(), opts.roots, opts.seed);
  report.roots_sampled = roots.size();
  report.roots_truncated = roots.size() < opts.roots;
  if (roots.size() <= 2 * opts.trim)
    throw std::invalid_argument("need more than 2*trim roots (" + std::to_string(roots.size()) +
                                " sampled, trim " + std::to_string(opts.trim) + ")");

  const auto partition = partition_1d(g, opts.num_nodes);
  EngineConfig cfg{opts.fanout, opts.strategy, opts.mode, opts.threads_per_node};
  Engine engine(g, partition, cfg);
  report.buffer_bound = engine.incoming_capacity_per_node();

  report.per_run.reserve(roots.size());
  for (auto root : roots) {
    engine.execute(root);
    const auto& s = engine.stats();
    RunSummary run;
    run.root = root;
    run.elapsed_s = s.elapsed.count();
    run.levels = s.levels;
    run.remote_messages = s.remote_messages;
    run.remote_vertices = s.remote_vertices_transferred;
    run.scheduled_transfers = s.scheduled_transfers;
    run.rounds_executed = s.rounds_executed;
    run.buffer_high_water_max = s.buffer_high_water_max();
    run.traversed_edges = s.traversed_edges;
    run.frontier_sizes = s.per_level_frontier_size;
    report.per_run.push_back(std::move(run));
  }

  std::vector<std::size_t> order(report.per_run.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.per_run[a].elapsed_s < report.per_run[b].elapsed_s;
  });
  for (std::size_t i = opts.trim; i + opts.trim < order.size(); ++i)
    report.per_run[order[i]].kept = true;

  double time = 0, traversed = 0, messages = 0, vertices = 0, rounds = 0;
  std::uint64_t kept = 0;
  for (const auto& run : report.per_run) {
    report.max_buffer_high_water = std::max(report.max_buffer_high_water, run.buffer_high_water_max);
    if (!run.kept) continue;
    ++kept;
    time += run.elapsed_s;
    traversed += static_cast<double>(run.traversed_edges);
    messages += static_cast<double>(run.remote_messages);
    vertices += static_cast<double>(run.remote_vertices);
    rounds += static_cast<double>(run.rounds_executed);
  }
  report.roots_kept = kept;
  const auto k = static_cast<double>(kept);
  report.mean_time = time / k;
  report.mean_traversed_edges = traversed / k;
  report.mean_remote_messages = messages / k;
  report.mean_remote_vertices = vertices / k;
  report.mean_rounds = rounds / k;
  if (report.mean_time > 0) {
    report.teps_nominal = static_cast<double>(report.num_edges) / report.mean_time;
    report.teps_touched = report.mean_traversed_edges / report.mean_time;
  }
  return report;
}

VerifyOutcome cmd_verify(const Graph& g, const VerifyOptions& opts,
                         const std::optional<ButterflySchedule>& schedule) {
  if (g.num_vertices() == 0) throw std::invalid_argument("graph has no vertices");
  const auto partition = partition_1d(g, opts.num_nodes);
  EngineConfig cfg{opts.fanout, opts.strategy, opts.mode, opts.threads_per_node};
  auto engine = schedule ? std::make_unique<Engine>(g, partition, cfg, *schedule)
                         : std::make_unique<Engine>(g, partition, cfg);

  VerifyOutcome outcome;
  for (auto root : sample_roots(g.num_vertices(), opts.roots, opts.seed)) {
    engine->execute(root);
    const auto expected = bfs_top_down(g, root);
    const auto got = engine->nodes().front().distances();
    ++outcome.roots_checked;
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
      if (expected.d[v] != got[v]) {
        outcome.first_mismatch = Mismatch{root, v, expected.d[v], got[v]};
        return outcome;
      }
    }
  }
  return outcome;
}

json schedule_to_json(const ButterflySchedule& s) {
  return json{{"num_nodes", s.num_nodes()},
              {"fanout", s.fanout()},
              {"radix", s.radix()},
              {"num_rounds", s.num_rounds()},
              {"rounds", s.rounds()}};
}

ButterflySchedule schedule_from_json(const json& j) {
  return ButterflySchedule::from_rounds(j.at("num_nodes").get<std::uint32_t>(),
                                        j.at("fanout").get<std::uint32_t>(),
                                        j.at("rounds").get<std::vector<ButterflySchedule::Round>>());
}

json cmd_schedule(std::uint32_t num_nodes, std::uint32_t fanout) {
  const auto s = make_schedule(num_nodes, fanout);
  auto j = schedule_to_json(s);
  j["message_count_paper"] = message_count_paper(num_nodes, fanout);
  j["message_count_remote"] = message_count_remote(s);
  return j;
}

namespace {

std::string format_distance(distance_t d) {
  return d == kUnreached ? "unreached" : std::to_string(d);
}

const std::map<std::string, EdgeFormat> kFormats{{"edges", EdgeFormat::edge_list_text},
                                                 {"mtx", EdgeFormat::matrix_market}};
const std::map<std::string, Strategy> kStrategies{{"butterfly", Strategy::butterfly},
                                                  {"all2all", Strategy::all_to_all}};
const std::map<std::string, WorkerMode> kModes{{"lockstep", WorkerMode::lockstep},
                                               {"concurrent", WorkerMode::concurrent}};

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-node butterfly BFS simulator and benchmark harness"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a symmetrized RMAT edge list");
  generate->add_option("--scale", gen.scale, "log2 of the vertex count")->required();
  generate->add_option("--edge-factor", gen.edge_factor, "Edges per vertex")->capture_default_str();
  generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate->add_option("--out", gen.out_path, "Output path")->required();
  generate->add_option("--a", gen.params.a)->capture_default_str();
  generate->add_option("--b", gen.params.b)->capture_default_str();
  generate->add_option("--c", gen.params.c)->capture_default_str();
  generate->add_option("--d", gen.params.d)->capture_default_str();

  std::string graph_path;
  EdgeFormat format = EdgeFormat::edge_list_text;
  BenchOptions bench_opts;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Benchmark over sampled roots (JSON report)");
  bench->add_option("--graph", graph_path)->required();
  bench->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));
  bench->add_option("--nodes", bench_opts.num_nodes)->capture_default_str();
  bench->add_option("--fanout", bench_opts.fanout)->capture_default_str();
  bench->add_option("--strategy", bench_opts.strategy)
      ->transform(CLI::CheckedTransformer(kStrategies));
  bench->add_option("--roots", bench_opts.roots)->capture_default_str();
  bench->add_option("--trim", bench_opts.trim)->capture_default_str();
  bench->add_option("--seed", bench_opts.seed)->capture_default_str();
  bench->add_option("--mode", bench_opts.mode)->transform(CLI::CheckedTransformer(kModes));
  bench->add_option("--threads-per-node", bench_opts.threads_per_node)->capture_default_str();
  bench->add_option("--csv", csv_path, "Also write the per-run table as CSV");

  VerifyOptions verify_opts;
  std::string schedule_path;
  auto* verify = app.add_subcommand("verify", "Check the engine against the sequential BFS");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));
  verify->add_option("--nodes", verify_opts.num_nodes)->capture_default_str();
  verify->add_option("--fanout", verify_opts.fanout)->capture_default_str();
  verify->add_option("--strategy", verify_opts.strategy)
      ->transform(CLI::CheckedTransformer(kStrategies));
  verify->add_option("--roots", verify_opts.roots)->capture_default_str();
  verify->add_option("--seed", verify_opts.seed)->capture_default_str();
  verify->add_option("--mode", verify_opts.mode)->transform(CLI::CheckedTransformer(kModes));
  verify->add_option("--threads-per-node", verify_opts.threads_per_node)->capture_default_str();
  verify->add_option("--schedule", schedule_path, "Schedule JSON to use instead of the default");

  std::uint32_t sched_nodes = 1, sched_fanout = 1;
  auto* schedule = app.add_subcommand("schedule", "Dump the butterfly schedule as JSON");
  schedule->add_option("--nodes", sched_nodes)->required();
  schedule->add_option("--fanout", sched_fanout)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*generate) {
      auto summary = cmd_generate(gen);
      out << "vertices " << summary.num_vertices << "\nedges " << summary.num_edges << '\n';
      return 0;
    }
    if (*bench) {
      auto report = cmd_bench(load_graph(graph_path, format), bench_opts);
      out << json(report).dump(2) << '\n';
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot open '" + csv_path + "' for writing");
        write_csv(report, csv);
      }
      return 0;
    }
    if (*verify) {
      auto loaded = load_graph(graph_path, format);
      std::optional<ButterflySchedule> override_schedule;
      if (!schedule_path.empty()) {
        std::ifstream in(schedule_path);
        if (!in) throw std::runtime_error("cannot open '" + schedule_path + "'");
        override_schedule = schedule_from_json(json::parse(in));
      }
      auto outcome = cmd_verify(loaded.graph, verify_opts, override_schedule);
      if (outcome.passed()) {
        out << "PASS " << outcome.roots_checked << " roots\n";
        return 0;
      }
      const auto& m = *outcome.first_mismatch;
      out << "FAIL root " << m.root << ": vertex " << m.vertex << " expected "
          << format_distance(m.expected) << " got " << format_distance(m.got) << '\n';
      return 1;
    }
    if (*schedule) {
      out << cmd_schedule(sched_nodes, sched_fanout).dump(2) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace bfly::cli
