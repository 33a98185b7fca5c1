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

#include "rtas/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include <sys/resource.h>

#include "rtas/cluster.hpp"
#include "rtas/weights.hpp"

namespace rtas {
namespace {

constexpr std::uint32_t kBenchRoutersPerAs = 50;
constexpr double kBenchPIn = 0.16;
constexpr double kBenchPOut = 0.004;

template <typename Fn>
double seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  if (n < 2 || ys.size() != n) throw ValidationError("fit needs >= 2 points");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx == 0.0 ? 0.0 : sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = (sxx == 0.0 || syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

SynthConfig bench_config(std::size_t target_edges, std::uint64_t seed) {
  const double per = kBenchRoutersPerAs;
  // Intra pairs plus ~1.5 backbone links per AS.
  const double edges_per_as =
      per * (per - 1) / 2 * kBenchPIn + 1.5 * per * per * kBenchPOut;
  SynthConfig c;
  c.n_as = static_cast<std::uint32_t>(
      std::max(2.0, std::round(static_cast<double>(target_edges) / edges_per_as)));
  c.routers_per_as = kBenchRoutersPerAs;
  c.ports_per_router = 3.0;
  c.p_in = kBenchPIn;
  c.p_out = kBenchPOut;
  c.label_noise = 0.3;
  c.rng_seed = seed;
  return c;
}

BenchReport run_bench(std::span<const std::size_t> target_edges,
                      std::uint64_t seed, int repetitions) {
  if (target_edges.size() < 3) {
    throw ValidationError("bench needs at least three sizes");
  }
  repetitions = std::max(1, repetitions);
  BenchReport report;
  for (std::size_t target : target_edges) {
    BenchPoint pt;
    pt.target_edges = target;
    auto graph = std::make_shared<const RouterGraph>(
        synth_generate(bench_config(target, seed)).graph);
    pt.routers = graph->router_count();
    pt.edges = graph->edge_count();

    WeightConfig config;  // ra:gen:plus:fused
    std::vector<EdgeWeights> scratch(graph->edge_count());
    pt.weights_serial_s = seconds(
        [&] { compute_edge_weights_serial(*graph, config, scratch); });
    pt.weights_parallel_s = seconds(
        [&] { compute_edge_weights_parallel(*graph, config, scratch); });
    const WeightedGraph weighted(graph, std::move(scratch), config);

    const SeedSet seeds = seed_set(*graph);
    const auto order = default_order(seeds);
    pt.assign_s = INFINITY;
    for (int rep = 0; rep < repetitions; ++rep) {
      AssignStats stats;
      const double t = seconds([&] { assign_all(weighted, seeds, order, &stats); });
      pt.assign_s = std::min(pt.assign_s, t);
      pt.peak_aux_bytes = stats.peak_aux_bytes;
    }
    report.points.push_back(pt);
  }
  std::vector<double> log_e;
  std::vector<double> log_t;
  std::vector<double> size;
  std::vector<double> mem;
  for (const BenchPoint& p : report.points) {
    log_e.push_back(std::log(static_cast<double>(p.edges)));
    log_t.push_back(std::log(p.assign_s));
    size.push_back(static_cast<double>(p.routers + p.edges));
    mem.push_back(static_cast<double>(p.peak_aux_bytes));
  }
  report.time_loglog = fit_line(log_e, log_t);
  report.memory_linear = fit_line(size, mem);
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  report.max_rss_kb = usage.ru_maxrss;
  return report;
}

}  // namespace rtas
