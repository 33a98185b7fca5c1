// Copyright 2026 The rtas Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rtas: router-to-AS mapping pipeline.
//
//   rtas build  --nodes N --links L --ip2as P --out graph.bin
//   rtas weigh  --graph graph.bin --method fhc:ra:gen:plus:fused --out w.tsv
//   rtas assign --graph graph.bin --method METHOD --out assignment.tsv
//   rtas eval   --graph graph.bin --truth truth.txt --sweep ways --out r.json
//   rtas synth  --out-dir DIR
//   rtas bench  --sizes 1000000,2000000,4000000 --out bench.json
//
// Exit codes: 0 ok, 1 validation or usage error, 2 I/O error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtas/baseline.hpp"
#include "rtas/bench.hpp"
#include "rtas/cluster.hpp"
#include "rtas/eval.hpp"
#include "rtas/graph_cache.hpp"
#include "rtas/ingest.hpp"
#include "rtas/method_spec.hpp"
#include "rtas/synth.hpp"
#include "rtas/tsv_io.hpp"
#include "rtas/weights.hpp"

namespace {

using rtas::IoError;
using rtas::ValidationError;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::ifstream open_in(const std::string& path) {
  if (!fs::is_regular_file(path)) throw IoError("cannot read '" + path + "'");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

std::shared_ptr<const rtas::RouterGraph> load_graph_ptr(const std::string& path) {
  if (!fs::is_regular_file(path)) throw IoError("cannot read '" + path + "'");
  return std::make_shared<const rtas::RouterGraph>(rtas::load_graph(path));
}

std::string percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * x);
  return buf;
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string nodes, links, ip2as, out;
  int min_ports = 2;
};

int cmd_build(const BuildArgs& a) {
  auto nodes_in = open_in(a.nodes);
  auto links_in = open_in(a.links);
  auto ip2as_in = open_in(a.ip2as);
  const auto nodes = rtas::parse_nodes(nodes_in);
  const auto links = rtas::parse_links(links_in);
  const auto ip2as = rtas::parse_ip2as(ip2as_in);
  const auto built = rtas::build_graph(nodes, links, ip2as.table, a.min_ports);
  rtas::save_graph(a.out, built.graph);
  const auto& s = built.stats;
  std::cout << "routers " << built.graph.router_count() << "\n"
            << "edges " << built.graph.edge_count() << "\n"
            << "input_nodes " << s.input_nodes << "\n"
            << "dropped_few_ports " << s.dropped_few_ports << "\n"
            << "dropped_isolated " << s.dropped_isolated << "\n"
            << "duplicate_tokens " << s.duplicate_tokens << "\n"
            << "duplicate_addrs " << s.duplicate_addrs << "\n"
            << "unresolved_link_members " << s.link_members_unresolved << "\n"
            << "unannotated_ports " << s.unannotated_ports << "\n"
            << "malformed_lines " << nodes.malformed + links.malformed + ip2as.malformed
            << "\n"
            << "degenerate_links " << links.degenerate << "\n"
            << "prefixes " << ip2as.table.size() << " (conflicts "
            << ip2as.table.conflicts() << ")\n";
  return 0;
}

// ---------------------------------------------------------------- weigh

struct MethodArgs {
  std::string graph, method, out;
  bool normalize = false;
  bool shuffle = false;
  std::uint64_t seed = 1;
};

rtas::MethodSpec method_of(const MethodArgs& a) {
  auto spec = rtas::parse_method(a.method);
  spec.weights.normalize_similarity = a.normalize;
  return spec;
}

int cmd_weigh(const MethodArgs& a) {
  const auto spec = method_of(a);
  if (spec.kind != rtas::MethodSpec::Kind::kFastHierarchy) {
    throw ValidationError("weigh needs an fhc:... method");
  }
  const auto graph = load_graph_ptr(a.graph);
  const auto weighted = rtas::build_weighted_graph(graph, spec.weights);
  auto out = open_out(a.out);
  rtas::write_weights_tsv(out, weighted);
  std::cout << "edges " << graph->edge_count() << "\n"
            << "undefined_port_edges "
            << weighted.diagnostics().undefined_port_edges << "\n";
  return 0;
}

// ---------------------------------------------------------------- assign

int cmd_assign(const MethodArgs& a) {
  const auto spec = method_of(a);
  const auto graph = load_graph_ptr(a.graph);
  const auto assignment = rtas::run_method(
      graph, spec, a.shuffle ? std::optional<std::uint64_t>(a.seed) : std::nullopt);
  auto out = open_out(a.out);
  rtas::write_assignment_tsv(out, assignment);
  std::size_t by[5] = {0, 0, 0, 0, 0};
  for (const auto& e : assignment.entries()) ++by[static_cast<int>(e.provenance)];
  std::cout << "method " << rtas::format_method(spec) << "\n";
  for (auto p : {rtas::Provenance::kSeed, rtas::Provenance::kChained,
                 rtas::Provenance::kElection, rtas::Provenance::kDegree,
                 rtas::Provenance::kUnassigned}) {
    std::cout << rtas::provenance_name(p) << ' ' << by[static_cast<int>(p)] << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string graph, truth, assignment, methods, sweep, out, grid_out;
  bool normalize = false;
  std::size_t shuffles = 0;
  std::uint64_t seed = 1;
};

Json report_json(const rtas::EvalReport& r, bool with_shuffles) {
  Json j;
  j["method"] = r.method;
  j["total"] = r.result.total;
  j["correct"] = r.result.correct;
  j["assigned"] = r.result.assigned;
  j["unassigned"] = r.result.unassigned;
  j["accuracy"] = r.result.accuracy;
  if (with_shuffles) {
    j["shuffle_accuracies"] = r.shuffle_accuracies;
    j["mean"] = r.mean;
    j["std_error"] = r.std_error;
  }
  return j;
}

struct Evaluator {
  std::shared_ptr<const rtas::RouterGraph> graph;
  rtas::GroundTruth truth;
  std::optional<rtas::SeedSet> seeds;
  const EvalArgs& args;

  rtas::EvalReport run(const rtas::MethodSpec& spec) {
    rtas::EvalReport report;
    report.method = rtas::format_method(spec);
    if (spec.kind == rtas::MethodSpec::Kind::kElectionDegree) {
      report.result = rtas::accuracy(rtas::election_degree(*graph), truth);
      return report;
    }
    if (!seeds) seeds = rtas::seed_set(*graph);
    auto config = spec.weights;
    config.normalize_similarity = args.normalize;
    const auto weighted = rtas::build_weighted_graph(graph, config);
    if (args.shuffles >= 2) {
      auto r = rtas::robustness(weighted, *seeds, truth, args.shuffles, args.seed);
      r.method = report.method;
      return r;
    }
    report.result = rtas::accuracy(
        rtas::assign_all_parallel(weighted, *seeds, rtas::default_order(*seeds)),
        truth);
    return report;
  }
};

rtas::MethodSpec fhc(rtas::MetricFamily f, rtas::NeighborMode n, rtas::FusionOp op,
                     rtas::WeightMode m) {
  rtas::MethodSpec s;
  s.weights.metric = {f, n};
  s.weights.fusion = op;
  s.weights.mode = m;
  return s;
}

int cmd_eval(const EvalArgs& a) {
  const int sources = !a.assignment.empty() + !a.methods.empty() + !a.sweep.empty();
  if (sources != 1) {
    throw ValidationError("eval needs exactly one of --assignment, --methods, --sweep");
  }
  if (a.shuffles == 1) throw ValidationError("--shuffles must be 0 or >= 2");
  auto truth_in = open_in(a.truth);
  const auto truth_file = rtas::parse_truth(truth_in);
  Evaluator ev{load_graph_ptr(a.graph), {}, std::nullopt, a};
  ev.truth = rtas::resolve_ground_truth(*ev.graph, truth_file.ip_to_as);

  std::vector<rtas::EvalReport> reports;
  Json grid;
  if (!a.assignment.empty()) {
    auto in = open_in(a.assignment);
    const auto assignment = rtas::read_assignment_tsv(in, ev.graph->router_count());
    rtas::EvalReport r;
    r.method = fs::path(a.assignment).filename().string();
    r.result = rtas::accuracy(assignment, ev.truth);
    reports.push_back(r);
  } else if (!a.methods.empty()) {
    std::stringstream list(a.methods);
    std::string item;
    while (std::getline(list, item, ',')) {
      if (!item.empty()) reports.push_back(ev.run(rtas::parse_method(item)));
    }
  } else {
    using rtas::FusionOp;
    using rtas::NeighborMode;
    using rtas::WeightMode;
    std::vector<std::string> columns;
    std::vector<std::vector<rtas::MethodSpec>> rows;
    if (a.sweep == "ways") {
      rtas::MethodSpec baseline;
      baseline.kind = rtas::MethodSpec::Kind::kElectionDegree;
      reports.push_back(ev.run(baseline));
      reports.push_back(ev.run(fhc(rtas::MetricFamily::kRA, NeighborMode::kGeneralized,
                                   FusionOp::kPlus, WeightMode::kPortOnly)));
      columns = {"way2", "way3", "way4", "way5"};
      for (auto f : rtas::kAllMetricFamilies) {
        rows.push_back({fhc(f, NeighborMode::kPlain, FusionOp::kPlus, WeightMode::kSimOnly),
                        fhc(f, NeighborMode::kGeneralized, FusionOp::kPlus, WeightMode::kSimOnly),
                        fhc(f, NeighborMode::kPlain, FusionOp::kPlus, WeightMode::kFused),
                        fhc(f, NeighborMode::kGeneralized, FusionOp::kPlus, WeightMode::kFused)});
      }
    } else if (a.sweep == "operators") {
      for (auto op : rtas::kAllFusionOps) columns.emplace_back(rtas::fusion_name(op));
      for (auto f : rtas::kAllMetricFamilies) {
        std::vector<rtas::MethodSpec> row;
        for (auto op : rtas::kAllFusionOps) {
          row.push_back(fhc(f, NeighborMode::kGeneralized, op, WeightMode::kFused));
        }
        rows.push_back(row);
      }
    } else {
      throw ValidationError("unknown sweep '" + a.sweep + "' (ways|operators)");
    }
    grid["kind"] = a.sweep;
    grid["columns"] = columns;
    grid["rows"] = Json::array();
    std::ostringstream tsv;
    tsv << "metric";
    for (const auto& c : columns) tsv << '\t' << c;
    tsv << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto metric = rtas::metric_name(rtas::kAllMetricFamilies[i]);
      Json row;
      row["metric"] = metric;
      row["accuracy"] = Json::array();
      tsv << metric;
      for (const auto& spec : rows[i]) {
        reports.push_back(ev.run(spec));
        row["accuracy"].push_back(reports.back().result.accuracy);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "\t%.6f", reports.back().result.accuracy);
        tsv << buf;
      }
      tsv << '\n';
      grid["rows"].push_back(row);
    }
    if (!a.grid_out.empty()) {
      auto out = open_out(a.grid_out);
      out << tsv.str();
    }
  }

  const bool with_shuffles = a.shuffles >= 2;
  Json doc;
  doc["graph"] = {{"routers", ev.graph->router_count()},
                  {"edges", ev.graph->edge_count()}};
  const auto& c = ev.truth.counters;
  doc["truth"] = {{"truth_ips", c.truth_ips},
                  {"unmatched_ips", c.unmatched_ips},
                  {"candidates", c.candidates},
                  {"solo", c.solo},
                  {"conflicting", c.conflicting},
                  {"missing_port_as", c.missing_port_as},
                  {"resolved", ev.truth.resolved.size()}};
  doc["shuffles"] = a.shuffles;
  doc["seed"] = a.seed;
  doc["methods"] = Json::array();
  for (const auto& r : reports) {
    const bool shuffled = with_shuffles && !r.shuffle_accuracies.empty();
    doc["methods"].push_back(report_json(r, shuffled));
  }
  if (!grid.is_null()) doc["grid"] = grid;
  if (!a.out.empty()) {
    auto out = open_out(a.out);
    out << doc.dump(2) << '\n';
  }

  std::printf("resolved ground truth: %zu routers (candidates %zu, solo %zu, "
              "conflicting %zu, missing port AS %zu)\n",
              ev.truth.resolved.size(), c.candidates, c.solo, c.conflicting,
              c.missing_port_as);
  std::printf("%-32s %9s %13s %10s", "method", "accuracy", "correct", "unassigned");
  if (with_shuffles) std::printf(" %9s %9s", "mean", "std_err");
  std::printf("\n");
  for (const auto& r : reports) {
    char frac[32];
    std::snprintf(frac, sizeof(frac), "%zu/%zu", r.result.correct, r.result.total);
    std::printf("%-32s %9s %13s %10zu", r.method.c_str(),
                percent(r.result.accuracy).c_str(), frac, r.result.unassigned);
    if (with_shuffles && !r.shuffle_accuracies.empty()) {
      std::printf(" %9s %9.4f", percent(r.mean).c_str(), r.std_error);
    }
    std::printf("\n");
  }
  return 0;
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  rtas::SynthConfig config;
  std::string out_dir;
};

int cmd_synth(const SynthArgs& a) {
  const auto data = rtas::synth_generate(a.config);
  rtas::write_synth_files(data, a.config.n_as, a.out_dir);
  rtas::save_graph(fs::path(a.out_dir) / "graph.bin", data.graph);
  std::cout << "routers " << data.graph.router_count() << "\n"
            << "edges " << data.graph.edge_count() << "\n"
            << "files nodes.txt links.txt ip2as.txt truth.txt graph.bin\n";
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> sizes = {1000000, 2000000, 4000000};
  std::uint64_t seed = 1;
  int reps = 3;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  if (a.sizes.size() < 3) throw ValidationError("bench needs at least three --sizes");
  const auto report = rtas::run_bench(a.sizes, a.seed, a.reps);
  Json doc;
  doc["points"] = Json::array();
  std::printf("%10s %10s %12s %12s %10s %14s\n", "routers", "edges",
              "w_serial_s", "w_omp_s", "assign_s", "peak_aux_B");
  for (const auto& p : report.points) {
    doc["points"].push_back({{"target_edges", p.target_edges},
                             {"routers", p.routers},
                             {"edges", p.edges},
                             {"weights_serial_s", p.weights_serial_s},
                             {"weights_parallel_s", p.weights_parallel_s},
                             {"assign_s", p.assign_s},
                             {"peak_aux_bytes", p.peak_aux_bytes}});
    std::printf("%10zu %10zu %12.4f %12.4f %10.4f %14zu\n", p.routers, p.edges,
                p.weights_serial_s, p.weights_parallel_s, p.assign_s,
                p.peak_aux_bytes);
  }
  for (std::size_t i = 1; i < report.points.size(); ++i) {
    const auto& p = report.points[i - 1];
    const auto& q = report.points[i];
    std::printf("edges x%.2f -> assign time x%.2f\n",
                static_cast<double>(q.edges) / p.edges, q.assign_s / p.assign_s);
  }
  std::printf("time exponent (log-log fit) %.3f\n", report.time_loglog.slope);
  std::printf("aux memory linear fit in N+E: R^2 %.5f, %.2f bytes per element\n",
              report.memory_linear.r2, report.memory_linear.slope);
  doc["time_exponent"] = report.time_loglog.slope;
  doc["memory_r2"] = report.memory_linear.r2;
  doc["memory_bytes_per_element"] = report.memory_linear.slope;
  doc["max_rss_kb"] = report.max_rss_kb;
  doc["threads"] = omp_get_max_threads();
  if (!a.out.empty()) {
    auto out = open_out(a.out);
    out << doc.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Router-to-AS mapping: graph build, edge weighting, fast "
               "hierarchy clustering, baselines and evaluation"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Cap on worker threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  const std::string method_help = "Method spec: " + rtas::method_grammar_help();
  app.footer("Methods: " + rtas::method_grammar_help() +
             "\nExit codes: 0 ok, 1 validation or usage error, 2 I/O error.");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Parse topology and IP-to-AS inputs into a graph cache");
  b->add_option("--nodes", build.nodes, "nodes file")->required();
  b->add_option("--links", build.links, "links file")->required();
  b->add_option("--ip2as", build.ip2as, "prefix-to-AS file")->required();
  b->add_option("--min-ports", build.min_ports, "Drop routers with fewer ports")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  b->add_option("--out", build.out, "graph cache to write")->required();

  MethodArgs weigh;
  auto* w = app.add_subcommand("weigh", "Dump per-edge weights as TSV");
  w->add_option("--graph", weigh.graph, "graph cache")->required();
  w->add_option("--method", weigh.method, method_help)->required();
  w->add_flag("--normalize", weigh.normalize, "Min-max rescale similarities before fusion");
  w->add_option("--out", weigh.out, "TSV to write")->required();

  MethodArgs assign;
  auto* as = app.add_subcommand("assign", "Assign every router to an AS");
  as->add_option("--graph", assign.graph, "graph cache")->required();
  as->add_option("--method", assign.method, method_help)->required();
  as->add_flag("--normalize", assign.normalize, "Min-max rescale similarities before fusion");
  as->add_flag("--shuffle", assign.shuffle, "Process routers in an order drawn from --seed");
  as->add_option("--seed", assign.seed, "RNG seed")->capture_default_str();
  as->add_option("--out", assign.out, "assignment TSV to write")->required();

  EvalArgs eval;
  auto* ev = app.add_subcommand("eval", "Score methods against ground truth");
  ev->add_option("--graph", eval.graph, "graph cache")->required();
  ev->add_option("--truth", eval.truth, "ground truth file (<ip> <asn>)")->required();
  ev->add_option("--assignment", eval.assignment, "assignment TSV to score");
  ev->add_option("--methods", eval.methods, "Comma-separated method specs. " + method_help);
  ev->add_option("--sweep", eval.sweep, "ways (10 metrics x ways 2-5) or operators (10 metrics x 4 fusions)")
      ->check(CLI::IsMember({"ways", "operators"}));
  ev->add_flag("--normalize", eval.normalize, "Min-max rescale similarities before fusion");
  ev->add_option("--shuffles", eval.shuffles, "Random processing orders per method (0 or >= 2)")
      ->capture_default_str();
  ev->add_option("--seed", eval.seed, "RNG seed for shuffles")->capture_default_str();
  ev->add_option("--out", eval.out, "JSON report to write");
  ev->add_option("--grid-out", eval.grid_out, "TSV accuracy grid to write (sweeps only)");

  SynthArgs synth;
  auto* sy = app.add_subcommand("synth", "Generate a planted-partition topology with ground truth");
  sy->add_option("--n-as", synth.config.n_as)->capture_default_str();
  sy->add_option("--routers-per-as", synth.config.routers_per_as)->capture_default_str();
  sy->add_option("--ports", synth.config.ports_per_router, "Mean ports per router (>= 2)")
      ->capture_default_str();
  sy->add_option("--p-in", synth.config.p_in)->capture_default_str();
  sy->add_option("--p-out", synth.config.p_out)->capture_default_str();
  sy->add_option("--label-noise", synth.config.label_noise)->capture_default_str();
  sy->add_option("--seed", synth.config.rng_seed)->capture_default_str();
  sy->add_option("--out-dir", synth.out_dir, "directory for the generated files")->required();

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "Scaling sweep of the clustering stage");
  be->add_option("--sizes", bench.sizes, "Target edge counts (>= 3)")
      ->delimiter(',')
      ->capture_default_str();
  be->add_option("--seed", bench.seed)->capture_default_str();
  be->add_option("--reps", bench.reps, "Timing repetitions per size")->capture_default_str();
  be->add_option("--out", bench.out, "JSON report to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (*b) return cmd_build(build);
    if (*w) return cmd_weigh(weigh);
    if (*as) return cmd_assign(assign);
    if (*ev) return cmd_eval(eval);
    if (*sy) return cmd_synth(synth);
    if (*be) return cmd_bench(bench);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
