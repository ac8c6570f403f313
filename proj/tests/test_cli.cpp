#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "bfly/cli.hpp"
#include "support/test_graphs.hpp"

using namespace bfly;
using namespace bfly::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "bfly_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

LoadedGraph loaded(Graph g, std::string name = "fixture") {
  LoadedGraph out;
  out.name = std::move(name);
  out.input_edges = g.num_edges();
  out.graph = std::move(g);
  return out;
}

int invoke(std::vector<std::string> args, std::string& out_text, std::string& err_text) {
  args.insert(args.begin(), "bfly");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  out_text = out.str();
  err_text = err.str();
  return rc;
}

}  // namespace

TEST_CASE("sample_roots is pure, distinct, and truncates") {
  auto a = sample_roots(1000, 100, 5);
  CHECK(a == sample_roots(1000, 100, 5));
  CHECK(a != sample_roots(1000, 100, 6));
  CHECK(std::set<vertex_t>(a.begin(), a.end()).size() == 100);
  for (auto v : a) CHECK(v < 1000);
  CHECK(sample_roots(10, 20, 1).size() == 10);
}

TEST_CASE("generate writes a bounded, deterministic symmetrized file") {
  GenerateOptions opts;
  opts.scale = 4;
  opts.edge_factor = 2;
  opts.seed = 1;
  opts.out_path = scratch("g4a.txt").string();
  auto summary = cmd_generate(opts);
  CHECK(summary.num_edges <= 64);
  auto first = slurp(opts.out_path);

  auto g = load_graph(opts.out_path, EdgeFormat::edge_list_text);
  CHECK(g.graph.num_vertices() <= 16);
  CHECK(g.graph.num_edges() == summary.num_edges);

  opts.out_path = scratch("g4b.txt").string();
  cmd_generate(opts);
  CHECK(slurp(opts.out_path) == first);
}

TEST_CASE("generate at scale 14 reloads into a valid graph") {
  GenerateOptions opts;
  opts.scale = 14;
  opts.edge_factor = 8;
  opts.seed = 3;
  opts.out_path = scratch("g14.txt").string();
  auto summary = cmd_generate(opts);
  std::ifstream in(opts.out_path);
  auto el = load_edge_list(in, EdgeFormat::edge_list_text);
  CHECK(el.edges.size() == summary.num_edges);
  // The file is already symmetric and clean, so build_csr accepts it as is.
  auto g = build_csr(el);
  CHECK(symmetrize(el).edges == el.edges);
  CHECK(g.num_edges() == summary.num_edges);
  CHECK(g.offsets().back() == g.num_edges());
}

TEST_CASE("bench trims and reports") {
  auto g = loaded(testing::rmat_graph(9, 8, 4));
  BenchOptions opts;
  opts.num_nodes = 4;
  opts.fanout = 2;
  opts.roots = 100;
  opts.trim = 25;
  auto report = cmd_bench(g, opts);
  CHECK(report.roots_sampled == 100);
  CHECK(report.roots_kept == 50);
  CHECK(report.per_run.size() == 100);
  CHECK(std::count_if(report.per_run.begin(), report.per_run.end(),
                      [](const RunSummary& r) { return r.kept; }) == 50);
  CHECK(report.teps_nominal * report.mean_time ==
        doctest::Approx(static_cast<double>(report.num_edges)).epsilon(1e-12));
  CHECK(report.teps_touched * report.mean_time ==
        doctest::Approx(report.mean_traversed_edges).epsilon(1e-12));
  CHECK(report.buffer_bound == buffer_bound(g.graph.num_vertices(), 2));
  CHECK(report.max_buffer_high_water <= report.buffer_bound);

  // Kept runs are the middle of the elapsed-time ordering.
  double max_dropped_fast = 0, min_kept = 1e300;
  std::vector<double> kept, dropped;
  for (const auto& r : report.per_run) (r.kept ? kept : dropped).push_back(r.elapsed_s);
  std::sort(dropped.begin(), dropped.end());
  max_dropped_fast = dropped[24];
  min_kept = *std::min_element(kept.begin(), kept.end());
  CHECK(max_dropped_fast <= min_kept);
  CHECK(dropped[25] >= *std::max_element(kept.begin(), kept.end()));
}

TEST_CASE("bench without trimming averages every run") {
  auto g = loaded(testing::path_graph(40));
  BenchOptions opts;
  opts.roots = 3;
  opts.trim = 0;
  auto report = cmd_bench(g, opts);
  REQUIRE(report.roots_kept == 3);
  double sum = 0;
  for (const auto& r : report.per_run) sum += r.elapsed_s;
  CHECK(report.mean_time == doctest::Approx(sum / 3));
}

TEST_CASE("bench flags truncated root samples and rejects over-trimming") {
  auto g = loaded(testing::path_graph(10));
  BenchOptions opts;
  opts.roots = 20;
  opts.trim = 2;
  auto report = cmd_bench(g, opts);
  CHECK(report.roots_truncated);
  CHECK(report.roots_sampled == 10);
  CHECK(report.roots_kept == 6);

  opts.trim = 5;
  CHECK_THROWS_AS(cmd_bench(g, opts), std::invalid_argument);
}

TEST_CASE("bench strategies agree on levels but not on messages") {
  auto g = loaded(testing::rmat_graph(10, 8, 17));
  BenchOptions opts;
  opts.num_nodes = 8;
  opts.fanout = 1;
  opts.roots = 10;
  opts.trim = 2;
  auto butterfly = cmd_bench(g, opts);
  opts.strategy = Strategy::all_to_all;
  auto a2a = cmd_bench(g, opts);
  REQUIRE(butterfly.per_run.size() == a2a.per_run.size());
  std::uint64_t msgs_b = 0, msgs_a = 0;
  for (std::size_t i = 0; i < butterfly.per_run.size(); ++i) {
    CHECK(butterfly.per_run[i].root == a2a.per_run[i].root);
    CHECK(butterfly.per_run[i].levels == a2a.per_run[i].levels);
    CHECK(butterfly.per_run[i].frontier_sizes == a2a.per_run[i].frontier_sizes);
    msgs_b += butterfly.per_run[i].remote_messages;
    msgs_a += a2a.per_run[i].remote_messages;
  }
  CHECK(msgs_b != msgs_a);
}

TEST_CASE("bench report round-trips through JSON and CSV has the fixed columns") {
  auto g = loaded(testing::rmat_graph(8, 4, 1), "rmat8");
  BenchOptions opts;
  opts.num_nodes = 3;
  opts.roots = 7;
  opts.trim = 1;
  auto report = cmd_bench(g, opts);
  json j = report;
  auto text = j.dump();
  auto back = json::parse(text).get<BenchReport>();
  CHECK(back == report);
  CHECK(json(back).dump() == text);

  std::ostringstream csv;
  write_csv(report, csv);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "root,elapsed_s,levels,remote_messages,remote_vertices,buffer_high_water_max");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 7);
}

TEST_CASE("verify passes on a single node and a nine-node schedule") {
  auto g = testing::rmat_graph(12, 8, 2);
  VerifyOptions single;
  single.roots = 5;
  CHECK(cmd_verify(g, single).passed());

  VerifyOptions nine;
  nine.num_nodes = 9;
  nine.fanout = 1;
  nine.roots = 10;
  auto outcome = cmd_verify(g, nine);
  CHECK(outcome.passed());
  CHECK(outcome.roots_checked == 10);
}

TEST_CASE("verify reports the first mismatch for a corrupted schedule") {
  auto g = testing::rmat_graph(12, 8, 2);
  auto rounds = make_schedule(8, 1).rounds();
  rounds[2][0].clear();
  auto broken = ButterflySchedule::from_rounds(8, 1, rounds);
  VerifyOptions opts;
  opts.num_nodes = 8;
  opts.roots = 5;
  auto outcome = cmd_verify(g, opts, broken);
  REQUIRE_FALSE(outcome.passed());
  const auto& m = *outcome.first_mismatch;
  auto oracle = bfs_top_down(g, m.root);
  CHECK(oracle.d[m.vertex] == m.expected);
  CHECK(m.got != m.expected);
}

TEST_CASE("schedule dump") {
  auto j = cmd_schedule(16, 1);
  CHECK(j["num_rounds"] == 4);
  CHECK(j["message_count_paper"] == 64);
  CHECK(j["message_count_remote"] == 64);
  CHECK(cmd_schedule(16, 4)["num_rounds"] == 2);
  CHECK(cmd_schedule(16, 4)["message_count_paper"] == 128);
  auto nine = cmd_schedule(9, 1);
  for (int g = 0; g < 8; ++g) CHECK(nine["rounds"][3][g] == json::array({8}));
  CHECK(schedule_from_json(nine).rounds() == make_schedule(9, 1).rounds());
  CHECK_THROWS_AS(cmd_schedule(3, 4), std::invalid_argument);
}

TEST_CASE("command line front end") {
  std::string out, err;
  CHECK(invoke({"schedule", "--nodes", "16", "--fanout", "4"}, out, err) == 0);
  CHECK(json::parse(out)["message_count_paper"] == 128);

  CHECK(invoke({"schedule", "--nodes", "3", "--fanout", "4"}, out, err) == 2);
  CHECK(err.find("fanout") != std::string::npos);
  CHECK(invoke({"bench"}, out, err) != 0);

  auto graph = scratch("cli_graph.txt").string();
  CHECK(invoke({"generate", "--scale", "8", "--edge-factor", "4", "--seed", "2", "--out", graph},
               out, err) == 0);
  CHECK(out.find("vertices 256") != std::string::npos);

  auto csv = scratch("cli_bench.csv").string();
  CHECK(invoke({"bench", "--graph", graph, "--nodes", "4", "--fanout", "2", "--roots", "6",
                "--trim", "1", "--strategy", "all2all", "--csv", csv},
               out, err) == 0);
  auto report = json::parse(out).get<BenchReport>();
  CHECK(report.roots_kept == 4);
  CHECK(report.strategy == "all2all");
  CHECK(slurp(csv).rfind("root,elapsed_s", 0) == 0);

  CHECK(invoke({"verify", "--graph", graph, "--nodes", "5", "--fanout", "2", "--roots", "4",
                "--mode", "concurrent"},
               out, err) == 0);
  CHECK(out.rfind("PASS", 0) == 0);

  auto rounds = make_schedule(4, 1).rounds();
  rounds[1][0].clear();
  auto sched_path = scratch("broken_schedule.json");
  std::ofstream(sched_path) << schedule_to_json(ButterflySchedule::from_rounds(4, 1, rounds));
  CHECK(invoke({"verify", "--graph", graph, "--nodes", "4", "--roots", "4", "--schedule",
                sched_path.string()},
               out, err) == 1);
  CHECK(out.rfind("FAIL root", 0) == 0);
  CHECK(out.find("expected") != std::string::npos);
}
