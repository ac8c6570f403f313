#include <ostream>

#include "bfly/cli.hpp"

namespace bfly::cli {

using nlohmann::json;

void to_json(json& j, const RunSummary& r) {
  j = json{{"root", r.root},
           {"elapsed_s", r.elapsed_s},
           {"levels", r.levels},
           {"remote_messages", r.remote_messages},
           {"remote_vertices", r.remote_vertices},
           {"scheduled_transfers", r.scheduled_transfers},
           {"rounds_executed", r.rounds_executed},
           {"buffer_high_water_max", r.buffer_high_water_max},
           {"traversed_edges", r.traversed_edges},
           {"frontier_sizes", r.frontier_sizes},
           {"kept", r.kept}};
}

void from_json(const json& j, RunSummary& r) {
  j.at("root").get_to(r.root);
  j.at("elapsed_s").get_to(r.elapsed_s);
  j.at("levels").get_to(r.levels);
  j.at("remote_messages").get_to(r.remote_messages);
  j.at("remote_vertices").get_to(r.remote_vertices);
  j.at("scheduled_transfers").get_to(r.scheduled_transfers);
  j.at("rounds_executed").get_to(r.rounds_executed);
  j.at("buffer_high_water_max").get_to(r.buffer_high_water_max);
  j.at("traversed_edges").get_to(r.traversed_edges);
  j.at("frontier_sizes").get_to(r.frontier_sizes);
  j.at("kept").get_to(r.kept);
}

void to_json(json& j, const BenchReport& r) {
  j = json{{"graph_name", r.graph_name},
           {"num_vertices", r.num_vertices},
           {"num_edges", r.num_edges},
           {"input_edges", r.input_edges},
           {"config",
            {{"num_nodes", r.num_nodes},
             {"fanout", r.fanout},
             {"strategy", r.strategy},
             {"mode", r.mode}}},
           {"seed", r.seed},
           {"roots_requested", r.roots_requested},
           {"roots_sampled", r.roots_sampled},
           {"trim", r.trim},
           {"roots_kept", r.roots_kept},
           {"roots_truncated", r.roots_truncated},
           {"mean_time", r.mean_time},
           {"teps_nominal", r.teps_nominal},
           {"teps_touched", r.teps_touched},
           {"mean_traversed_edges", r.mean_traversed_edges},
           {"mean_remote_messages", r.mean_remote_messages},
           {"mean_remote_vertices", r.mean_remote_vertices},
           {"mean_rounds", r.mean_rounds},
           {"max_buffer_high_water", r.max_buffer_high_water},
           {"buffer_bound", r.buffer_bound},
           {"per_run", r.per_run}};
}

void from_json(const json& j, BenchReport& r) {
  j.at("graph_name").get_to(r.graph_name);
  j.at("num_vertices").get_to(r.num_vertices);
  j.at("num_edges").get_to(r.num_edges);
  j.at("input_edges").get_to(r.input_edges);
  const auto& cfg = j.at("config");
  cfg.at("num_nodes").get_to(r.num_nodes);
  cfg.at("fanout").get_to(r.fanout);
  cfg.at("strategy").get_to(r.strategy);
  cfg.at("mode").get_to(r.mode);
  j.at("seed").get_to(r.seed);
  j.at("roots_requested").get_to(r.roots_requested);
  j.at("roots_sampled").get_to(r.roots_sampled);
  j.at("trim").get_to(r.trim);
  j.at("roots_kept").get_to(r.roots_kept);
  j.at("roots_truncated").get_to(r.roots_truncated);
  j.at("mean_time").get_to(r.mean_time);
  j.at("teps_nominal").get_to(r.teps_nominal);
  j.at("teps_touched").get_to(r.teps_touched);
  j.at("mean_traversed_edges").get_to(r.mean_traversed_edges);
  j.at("mean_remote_messages").get_to(r.mean_remote_messages);
  j.at("mean_remote_vertices").get_to(r.mean_remote_vertices);
  j.at("mean_rounds").get_to(r.mean_rounds);
  j.at("max_buffer_high_water").get_to(r.max_buffer_high_water);
  j.at("buffer_bound").get_to(r.buffer_bound);
  j.at("per_run").get_to(r.per_run);
}

void write_csv(const BenchReport& report, std::ostream& out) {
  out << "root,elapsed_s,levels,remote_messages,remote_vertices,buffer_high_water_max\n";
  for (const auto& run : report.per_run) {
    out << run.root << ',' << json(run.elapsed_s).dump() << ',' << run.levels << ','
        << run.remote_messages << ',' << run.remote_vertices << ','
        << run.buffer_high_water_max << '\n';
  }
}

}  // namespace bfly::cli
