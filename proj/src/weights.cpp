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

#include "rtas/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <omp.h>

namespace rtas {
namespace {

constexpr std::array<std::string_view, 10> kMetricNames = {
    "cn", "salton", "jaccard", "sorensen", "hpi",
    "hdi", "lhn-i", "pa", "aa", "ra"};

// Quantities of one node pair that every metric is a function of.
struct PairCounts {
  double common = 0.0;    // |G(a) n G(b)| in the chosen neighbor mode
  double set_union = 0.0;
  double ra_sum = 0.0;    // sum of 1/K(z) over the intersection
  double aa_sum = 0.0;    // sum of 1/ln(max(K(z),2)) over the intersection
  double ka = 0.0;
  double kb = 0.0;
};

double inv_log_degree(std::uint32_t k) {
  return 1.0 / std::log(static_cast<double>(std::max<std::uint32_t>(k, 2)));
}

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

PairCounts pair_counts(const RouterGraph& graph, RouterId a, RouterId b,
                       NeighborMode mode, bool need_sums) {
  PairCounts pc;
  const auto na = graph.neighbors(a);
  const auto nb = graph.neighbors(b);
  pc.ka = na.size();
  pc.kb = nb.size();
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t common = 0;
  bool adjacent = false;
  while (i < na.size() && j < nb.size()) {
    if (na[i] < nb[j]) {
      adjacent |= (na[i] == b);
      ++i;
    } else if (nb[j] < na[i]) {
      ++j;
    } else {
      ++common;
      if (need_sums) {
        const std::uint32_t k = graph.degree(na[i]);
        pc.ra_sum += 1.0 / k;
        pc.aa_sum += inv_log_degree(k);
      }
      ++i;
      ++j;
    }
  }
  if (!adjacent) {
    adjacent = std::binary_search(na.begin() + static_cast<std::ptrdiff_t>(i),
                                  na.end(), b);
  }
  double size_a = pc.ka;
  double size_b = pc.kb;
  if (mode == NeighborMode::kGeneralized) {
    size_a += 1.0;
    size_b += 1.0;
    if (adjacent) {
      // a lies in G+(a) and, being adjacent, in G+(b); likewise b.
      common += 2;
      if (need_sums) {
        const std::uint32_t kav = graph.degree(a);
        const std::uint32_t kbv = graph.degree(b);
        pc.ra_sum += 1.0 / kav + 1.0 / kbv;
        pc.aa_sum += inv_log_degree(kav) + inv_log_degree(kbv);
      }
    }
  }
  pc.common = static_cast<double>(common);
  pc.set_union = size_a + size_b - pc.common;
  return pc;
}

double metric_value(MetricFamily family, const PairCounts& pc) {
  switch (family) {
    case MetricFamily::kCN: return pc.common;
    case MetricFamily::kSalton: return safe_div(pc.common, std::sqrt(pc.ka * pc.kb));
    case MetricFamily::kJaccard: return safe_div(pc.common, pc.set_union);
    case MetricFamily::kSorensen: return safe_div(2.0 * pc.common, pc.ka + pc.kb);
    case MetricFamily::kHPI: return safe_div(pc.common, std::min(pc.ka, pc.kb));
    case MetricFamily::kHDI: return safe_div(pc.common, std::max(pc.ka, pc.kb));
    case MetricFamily::kLHNI: return safe_div(pc.common, pc.ka * pc.kb);
    case MetricFamily::kPA: return pc.ka * pc.kb;
    case MetricFamily::kAA: return pc.aa_sum;
    case MetricFamily::kRA: return pc.ra_sum;
  }
  return 0.0;
}

bool needs_sums(MetricFamily f) {
  return f == MetricFamily::kAA || f == MetricFamily::kRA;
}

// Port weight of an adjacent pair, or nullopt when either side has no
// annotated port. Computed from integer counts so that e.g. 3/4 * 1/3 comes
// out as exactly 3/12.
std::optional<double> port_weight(const Router& a, const Router& b) {
  const std::uint32_t total_a = a.annotated_ports();
  const std::uint32_t total_b = b.annotated_ports();
  if (total_a == 0 || total_b == 0) return std::nullopt;
  std::uint64_t shared = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.as_freq.size() && j < b.as_freq.size()) {
    if (a.as_freq[i].as < b.as_freq[j].as) {
      ++i;
    } else if (b.as_freq[j].as < a.as_freq[i].as) {
      ++j;
    } else {
      shared += static_cast<std::uint64_t>(a.as_freq[i].count) * b.as_freq[j].count;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(shared) /
         (static_cast<double>(total_a) * static_cast<double>(total_b));
}

// Port and raw similarity of one edge; returns false if the port weight is
// undefined.
bool raw_edge_weights(const RouterGraph& graph, const WeightConfig& config,
                      EdgeId e, EdgeWeights& out) {
  const Edge& edge = graph.edge(e);
  bool defined = true;
  out.port = 0.0;
  out.sim = 0.0;
  if (config.mode != WeightMode::kSimOnly) {
    auto pw = port_weight(graph.router(edge.u), graph.router(edge.v));
    defined = pw.has_value();
    out.port = pw.value_or(0.0);
  }
  if (config.mode != WeightMode::kPortOnly) {
    const MetricFamily family = config.metric.family;
    if (family == MetricFamily::kPA) {
      out.sim = static_cast<double>(graph.degree(edge.u)) * graph.degree(edge.v);
    } else {
      out.sim = metric_value(
          family, pair_counts(graph, edge.u, edge.v, config.metric.mode,
                              needs_sums(family)));
    }
  }
  return defined;
}

double combine(const WeightConfig& config, const EdgeWeights& w) {
  switch (config.mode) {
    case WeightMode::kPortOnly: return w.port;
    case WeightMode::kSimOnly: return w.sim;
    case WeightMode::kFused: return fuse(w.port, w.sim, config.fusion);
  }
  return 0.0;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
};

double rescale(double x, const Range& r) {
  if (r.hi > r.lo) return (x - r.lo) / (r.hi - r.lo);
  return r.hi > 0.0 ? 1.0 : 0.0;
}

}  // namespace

std::string_view metric_name(MetricFamily family) {
  return kMetricNames[static_cast<std::size_t>(family)];
}

std::optional<MetricFamily> parse_metric(std::string_view name) {
  if (name == "lhni") name = "lhn-i";
  for (MetricFamily f : kAllMetricFamilies) {
    if (metric_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view neighbor_mode_name(NeighborMode mode) {
  return mode == NeighborMode::kPlain ? "plain" : "gen";
}

std::optional<NeighborMode> parse_neighbor_mode(std::string_view name) {
  if (name == "plain") return NeighborMode::kPlain;
  if (name == "gen") return NeighborMode::kGeneralized;
  return std::nullopt;
}

std::string_view fusion_name(FusionOp op) {
  switch (op) {
    case FusionOp::kPlus: return "plus";
    case FusionOp::kTimes: return "times";
    case FusionOp::kMax: return "max";
    case FusionOp::kMin: return "min";
  }
  return "plus";
}

std::optional<FusionOp> parse_fusion(std::string_view name) {
  for (FusionOp op : kAllFusionOps) {
    if (fusion_name(op) == name) return op;
  }
  return std::nullopt;
}

std::string_view weight_mode_name(WeightMode mode) {
  switch (mode) {
    case WeightMode::kPortOnly: return "port";
    case WeightMode::kSimOnly: return "sim";
    case WeightMode::kFused: return "fused";
  }
  return "fused";
}

std::optional<WeightMode> parse_weight_mode(std::string_view name) {
  for (WeightMode m : kAllWeightModes) {
    if (weight_mode_name(m) == name) return m;
  }
  return std::nullopt;
}

double info_transfer_weight(const RouterGraph& graph, RouterId a, RouterId b) {
  if (a == b) throw ValidationError("info transfer weight needs two routers");
  if (!graph.adjacent(a, b)) return 0.0;
  auto w = port_weight(graph.router(a), graph.router(b));
  if (!w) {
    throw ValidationError("router without AS-annotated ports on edge " +
                          std::to_string(a) + "-" + std::to_string(b));
  }
  return *w;
}

double similarity(const RouterGraph& graph, SimilarityMetric metric,
                  RouterId a, RouterId b) {
  if (a == b) throw ValidationError("similarity needs two distinct routers");
  if (metric.family == MetricFamily::kPA) {
    return static_cast<double>(graph.degree(a)) * graph.degree(b);
  }
  return metric_value(metric.family,
                      pair_counts(graph, a, b, metric.mode,
                                  needs_sums(metric.family)));
}

double fuse(double port, double sim, FusionOp op) {
  switch (op) {
    case FusionOp::kPlus: return port + sim;
    case FusionOp::kTimes: return port * sim;
    case FusionOp::kMax: return std::max(port, sim);
    case FusionOp::kMin: return std::min(port, sim);
  }
  return 0.0;
}

WeightedGraph::WeightedGraph(std::shared_ptr<const RouterGraph> graph,
                             std::vector<EdgeWeights> weights,
                             WeightConfig config,
                             WeightDiagnostics diagnostics)
    : graph_(std::move(graph)),
      weights_(std::move(weights)),
      config_(config),
      diagnostics_(diagnostics) {
  if (!graph_) throw ValidationError("weighted graph needs a graph");
  if (weights_.size() != graph_->edge_count()) {
    throw ValidationError("one weight record per edge required");
  }
}

WeightedGraph WeightedGraph::from_fused(std::shared_ptr<const RouterGraph> graph,
                                        std::vector<double> fused) {
  std::vector<EdgeWeights> w(fused.size());
  for (std::size_t i = 0; i < fused.size(); ++i) w[i].fused = fused[i];
  return WeightedGraph(std::move(graph), std::move(w), WeightConfig{});
}

WeightDiagnostics compute_edge_weights_serial(const RouterGraph& graph,
                                              const WeightConfig& config,
                                              std::span<EdgeWeights> weights) {
  WeightDiagnostics diag;
  const std::size_t m = graph.edge_count();
  Range range;
  for (std::size_t e = 0; e < m; ++e) {
    if (!raw_edge_weights(graph, config, static_cast<EdgeId>(e), weights[e])) {
      ++diag.undefined_port_edges;
    }
    range.lo = std::min(range.lo, weights[e].sim);
    range.hi = std::max(range.hi, weights[e].sim);
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (config.normalize_similarity) weights[e].sim = rescale(weights[e].sim, range);
    weights[e].fused = combine(config, weights[e]);
  }
  return diag;
}

WeightDiagnostics compute_edge_weights_parallel(const RouterGraph& graph,
                                                const WeightConfig& config,
                                                std::span<EdgeWeights> weights) {
  const std::int64_t m = static_cast<std::int64_t>(graph.edge_count());
  std::size_t undefined = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : undefined) \
    reduction(min : lo) reduction(max : hi)
  for (std::int64_t e = 0; e < m; ++e) {
    if (!raw_edge_weights(graph, config, static_cast<EdgeId>(e), weights[e])) {
      ++undefined;
    }
    lo = std::min(lo, weights[e].sim);
    hi = std::max(hi, weights[e].sim);
  }
  const Range range{lo, hi};
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < m; ++e) {
    if (config.normalize_similarity) weights[e].sim = rescale(weights[e].sim, range);
    weights[e].fused = combine(config, weights[e]);
  }
  WeightDiagnostics diag;
  diag.undefined_port_edges = undefined;
  return diag;
}

WeightedGraph build_weighted_graph(std::shared_ptr<const RouterGraph> graph,
                                   const WeightConfig& config,
                                   Execution execution) {
  if (!graph || graph->empty()) throw ValidationError("graph is empty");
  std::vector<EdgeWeights> weights(graph->edge_count());
  WeightDiagnostics diag =
      execution == Execution::kSerial
          ? compute_edge_weights_serial(*graph, config, weights)
          : compute_edge_weights_parallel(*graph, config, weights);
  return WeightedGraph(std::move(graph), std::move(weights), config, diag);
}

}  // namespace rtas
