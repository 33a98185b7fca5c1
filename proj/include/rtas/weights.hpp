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

// Edge weights for the router graph: the info transferring weight (product of
// matching per-AS port shares), ten local node-pair similarity indices over
// plain or generalized (self-including) neighborhoods, and their fusion.

#ifndef RTAS_WEIGHTS_HPP_
#define RTAS_WEIGHTS_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rtas/model.hpp"

namespace rtas {

enum class MetricFamily : std::uint8_t {
  kCN,
  kSalton,
  kJaccard,
  kSorensen,
  kHPI,
  kHDI,
  kLHNI,
  kPA,
  kAA,
  kRA,
};

inline constexpr std::array<MetricFamily, 10> kAllMetricFamilies = {
    MetricFamily::kCN,  MetricFamily::kSalton, MetricFamily::kJaccard,
    MetricFamily::kSorensen, MetricFamily::kHPI, MetricFamily::kHDI,
    MetricFamily::kLHNI, MetricFamily::kPA, MetricFamily::kAA,
    MetricFamily::kRA};

// Plain uses the neighbor set; Generalized adds the node itself. Degrees K
// stay topological in both modes.
enum class NeighborMode : std::uint8_t { kPlain, kGeneralized };

struct SimilarityMetric {
  MetricFamily family = MetricFamily::kRA;
  NeighborMode mode = NeighborMode::kGeneralized;

  bool operator==(const SimilarityMetric&) const = default;
};

enum class FusionOp : std::uint8_t { kPlus, kTimes, kMax, kMin };

inline constexpr std::array<FusionOp, 4> kAllFusionOps = {
    FusionOp::kPlus, FusionOp::kTimes, FusionOp::kMax, FusionOp::kMin};

enum class WeightMode : std::uint8_t { kPortOnly, kSimOnly, kFused };

inline constexpr std::array<WeightMode, 3> kAllWeightModes = {
    WeightMode::kPortOnly, WeightMode::kSimOnly, WeightMode::kFused};

// Lower-case tokens used by the CLI method grammar ("cn", "lhn-i", ...).
std::string_view metric_name(MetricFamily family);
std::optional<MetricFamily> parse_metric(std::string_view name);
std::string_view neighbor_mode_name(NeighborMode mode);
std::optional<NeighborMode> parse_neighbor_mode(std::string_view name);
std::string_view fusion_name(FusionOp op);
std::optional<FusionOp> parse_fusion(std::string_view name);
std::string_view weight_mode_name(WeightMode mode);
std::optional<WeightMode> parse_weight_mode(std::string_view name);

struct WeightConfig {
  SimilarityMetric metric;
  FusionOp fusion = FusionOp::kPlus;
  WeightMode mode = WeightMode::kFused;
  // Min-max rescale of similarities over all edges before fusion.
  bool normalize_similarity = false;

  bool operator==(const WeightConfig&) const = default;
};

struct EdgeWeights {
  double port = 0.0;
  double sim = 0.0;
  double fused = 0.0;

  bool operator==(const EdgeWeights&) const = default;
};

struct WeightDiagnostics {
  // Edges with an endpoint lacking any AS-annotated port; their port weight
  // is 0.
  std::size_t undefined_port_edges = 0;

  bool operator==(const WeightDiagnostics&) const = default;
};

// 0 for non-adjacent pairs; otherwise the sum over shared ASes of the product
// of both routers' port shares. Throws ValidationError when a == b or when an
// adjacent endpoint has no annotated port.
double info_transfer_weight(const RouterGraph& graph, RouterId a, RouterId b);

// Defined for any pair a != b. AA uses ln(max(K(Z), 2)).
double similarity(const RouterGraph& graph, SimilarityMetric metric,
                  RouterId a, RouterId b);

double fuse(double port, double sim, FusionOp op);

class WeightedGraph {
 public:
  WeightedGraph(std::shared_ptr<const RouterGraph> graph,
                std::vector<EdgeWeights> weights, WeightConfig config,
                WeightDiagnostics diagnostics = {});

  // Test and oracle entry point: fused weights given directly, port and sim
  // left at 0.
  static WeightedGraph from_fused(std::shared_ptr<const RouterGraph> graph,
                                  std::vector<double> fused);

  const RouterGraph& graph() const { return *graph_; }
  const std::shared_ptr<const RouterGraph>& graph_ptr() const { return graph_; }
  std::span<const EdgeWeights> weights() const { return weights_; }
  const EdgeWeights& weights(EdgeId e) const { return weights_[e]; }
  double fused(EdgeId e) const { return weights_[e].fused; }
  const WeightConfig& config() const { return config_; }
  const WeightDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  std::shared_ptr<const RouterGraph> graph_;
  std::vector<EdgeWeights> weights_;
  WeightConfig config_;
  WeightDiagnostics diagnostics_;
};

// Per-edge kernels. Both fill weights[e] for every edge id e and produce
// identical output; the serial one is the reference for tests and benches.
WeightDiagnostics compute_edge_weights_serial(const RouterGraph& graph,
                                              const WeightConfig& config,
                                              std::span<EdgeWeights> weights);
WeightDiagnostics compute_edge_weights_parallel(const RouterGraph& graph,
                                                const WeightConfig& config,
                                                std::span<EdgeWeights> weights);

enum class Execution : std::uint8_t { kSerial, kParallel };

WeightedGraph build_weighted_graph(std::shared_ptr<const RouterGraph> graph,
                                   const WeightConfig& config,
                                   Execution execution = Execution::kParallel);

}  // namespace rtas

#endif  // RTAS_WEIGHTS_HPP_
