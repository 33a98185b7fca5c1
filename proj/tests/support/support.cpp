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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>

namespace rtas::testing {

Router make_router(const std::string& token, const std::vector<std::uint32_t>& ases,
                   std::uint32_t addr_base) {
  std::vector<Interface> itfs;
  for (std::size_t i = 0; i < ases.size(); ++i) {
    Interface itf{Ipv4(addr_base + static_cast<std::uint32_t>(i)), std::nullopt};
    if (ases[i] != 0) itf.origin_as = AsNumber(ases[i]);
    itfs.push_back(itf);
  }
  return Router(0, token, std::move(itfs));
}

std::shared_ptr<const RouterGraph> make_graph(
    const std::vector<std::vector<std::uint32_t>>& ports,
    const std::vector<std::pair<RouterId, RouterId>>& edges) {
  std::vector<Router> routers;
  for (std::size_t i = 0; i < ports.size(); ++i) {
    routers.push_back(make_router("N" + std::to_string(i + 1), ports[i],
                                  0x0A000000u + static_cast<std::uint32_t>(i) * 256));
  }
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.push_back({std::min(u, v), std::max(u, v)});
  return std::make_shared<const RouterGraph>(
      RouterGraph::build(std::move(routers), std::move(es)));
}

std::shared_ptr<const RouterGraph> two_router_fixture() {
  return make_graph({{1, 1, 1, 2}, {1, 7, 8}}, {{0, 1}});
}

std::shared_ptr<const RouterGraph> path_fixture() {
  return make_graph({{1, 1}, {1, 1}, {1, 1}}, {{0, 1}, {1, 2}});
}

std::shared_ptr<const RouterGraph> two_triangle_fixture() {
  return make_graph({{1, 1}, {1, 1}, {1, 1}, {2, 2}, {2, 2}, {2, 2}},
                    {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

std::shared_ptr<const RouterGraph> random_graph(std::mt19937_64& rng,
                                                std::uint32_t max_n,
                                                bool allow_unannotated) {
  std::uniform_int_distribution<std::uint32_t> n_dist(2, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const std::uint32_t n = n_dist(rng);
    const double p = 0.02 + 0.3 * unit(rng);
    const std::uint32_t as_pool = 1 + static_cast<std::uint32_t>(unit(rng) * 5);
    std::uniform_int_distribution<std::uint32_t> as_dist(1, as_pool);
    std::uniform_int_distribution<int> port_dist(1, 5);
    std::vector<std::vector<std::uint32_t>> ports(n);
    for (auto& list : ports) {
      const int k = port_dist(rng);
      for (int i = 0; i < k; ++i) {
        const bool unknown = allow_unannotated && unit(rng) < 0.1;
        list.push_back(unknown ? 0 : as_dist(rng));
      }
      if (std::all_of(list.begin(), list.end(), [](auto a) { return a == 0; })) {
        list.push_back(as_dist(rng));
      }
    }
    std::vector<std::pair<RouterId, RouterId>> edges;
    for (RouterId u = 0; u < n; ++u) {
      for (RouterId v = u + 1; v < n; ++v) {
        if (unit(rng) < p) edges.emplace_back(u, v);
      }
    }
    auto g = make_graph(ports, edges);
    auto pruned = std::make_shared<const RouterGraph>(drop_isolated(*g));
    if (pruned->router_count() >= 2) return pruned;
  }
}

WeightedGraph random_weights(std::shared_ptr<const RouterGraph> graph,
                             std::mt19937_64& rng) {
  static constexpr double kValues[] = {0.0, 0.0, 0.25, 0.5, 0.5, 1.0, 2.0};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kValues) - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> fused(graph->edge_count());
  for (double& w : fused) w = unit(rng) < 0.5 ? kValues[pick(rng)] : unit(rng);
  return WeightedGraph::from_fused(std::move(graph), std::move(fused));
}

BruteSimilarity::BruteSimilarity(const RouterGraph& graph)
    : hood_(graph.router_count()) {
  for (const Edge& e : graph.edges()) {
    hood_[e.u].insert(e.v);
    hood_[e.v].insert(e.u);
  }
}

double BruteSimilarity::operator()(SimilarityMetric metric, RouterId a,
                                   RouterId b) const {
  auto set_of = [&](RouterId x) {
    std::set<RouterId> s = hood_[x];
    if (metric.mode == NeighborMode::kGeneralized) s.insert(x);
    return s;
  };
  auto degree = [&](RouterId x) { return static_cast<double>(hood_[x].size()); };
  const auto ga = set_of(a);
  const auto gb = set_of(b);
  std::set<RouterId> common, all;
  std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(),
                        std::inserter(common, common.end()));
  std::set_union(ga.begin(), ga.end(), gb.begin(), gb.end(),
                 std::inserter(all, all.end()));
  const double c = static_cast<double>(common.size());
  const double ka = degree(a);
  const double kb = degree(b);
  switch (metric.family) {
    case MetricFamily::kCN: return c;
    case MetricFamily::kSalton: return c / std::sqrt(ka * kb);
    case MetricFamily::kJaccard: return all.empty() ? 0.0 : c / static_cast<double>(all.size());
    case MetricFamily::kSorensen: return 2.0 * c / (ka + kb);
    case MetricFamily::kHPI: return c / std::min(ka, kb);
    case MetricFamily::kHDI: return c / std::max(ka, kb);
    case MetricFamily::kLHNI: return c / (ka * kb);
    case MetricFamily::kPA: return ka * kb;
    case MetricFamily::kAA: {
      double s = 0;
      for (RouterId z : common) s += 1.0 / std::log(std::max(degree(z), 2.0));
      return s;
    }
    case MetricFamily::kRA: {
      double s = 0;
      for (RouterId z : common) s += 1.0 / degree(z);
      return s;
    }
  }
  return 0.0;
}

double brute_similarity(const RouterGraph& graph, SimilarityMetric metric,
                        RouterId a, RouterId b) {
  return BruteSimilarity(graph)(metric, a, b);
}

double brute_port_weight(const RouterGraph& graph, RouterId a, RouterId b) {
  if (!graph.adjacent(a, b)) return 0.0;
  const auto& pa = graph.router(a).interfaces;
  const auto& pb = graph.router(b).interfaces;
  double na = 0, nb = 0, matches = 0;
  for (const auto& x : pa) na += x.origin_as.has_value();
  for (const auto& y : pb) nb += y.origin_as.has_value();
  for (const auto& x : pa) {
    for (const auto& y : pb) {
      if (x.origin_as && y.origin_as && *x.origin_as == *y.origin_as) ++matches;
    }
  }
  return matches / (na * nb);
}

PlantedInstance planted_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> n_cliques(2, 5);
  std::uniform_int_distribution<std::uint32_t> size_dist(4, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const std::size_t k = n_cliques(rng);
    std::vector<std::uint32_t> sizes(k);
    std::uint32_t n = 0;
    for (auto& s : sizes) n += (s = size_dist(rng));
    if (n > 60) continue;

    std::vector<std::uint32_t> clique_of;
    std::vector<std::uint32_t> first(k);
    for (std::size_t c = 0; c < k; ++c) {
      first[c] = static_cast<std::uint32_t>(clique_of.size());
      clique_of.insert(clique_of.end(), sizes[c], static_cast<std::uint32_t>(c));
    }
    // Tree over cliques: clique c attaches to a random earlier clique.
    std::vector<std::pair<RouterId, RouterId>> inter;
    for (std::size_t c = 1; c < k; ++c) {
      const std::size_t p = std::uniform_int_distribution<std::size_t>(0, c - 1)(rng);
      const RouterId u = first[c] + std::uniform_int_distribution<std::uint32_t>(0, sizes[c] - 1)(rng);
      const RouterId v = first[p] + std::uniform_int_distribution<std::uint32_t>(0, sizes[p] - 1)(rng);
      inter.emplace_back(u, v);
    }
    std::size_t m = inter.size();
    for (auto s : sizes) m += s * (s - 1) / 2;
    std::vector<std::size_t> clique_degree(k, 0);
    for (std::size_t c = 0; c < k; ++c) clique_degree[c] = sizes[c] * (sizes[c] - 1);
    for (auto [u, v] : inter) {
      ++clique_degree[clique_of[u]];
      ++clique_degree[clique_of[v]];
    }
    const std::size_t d_min = *std::min_element(clique_degree.begin(), clique_degree.end());
    if (d_min * d_min <= 2 * m) continue;

    // One AS per clique; seeds carry it alone, others mix in a foreign AS.
    std::vector<AsNumber> clique_as(k);
    for (std::size_t c = 0; c < k; ++c) clique_as[c] = AsNumber(100 + static_cast<std::uint32_t>(c));
    std::vector<std::vector<std::uint32_t>> ports(n);
    for (std::size_t c = 0; c < k; ++c) {
      const std::uint32_t forced_seed = first[c] + std::uniform_int_distribution<std::uint32_t>(0, sizes[c] - 1)(rng);
      for (std::uint32_t r = first[c]; r < first[c] + sizes[c]; ++r) {
        const bool seed = r == forced_seed || unit(rng) < 0.3;
        ports[r] = {clique_as[c].value, clique_as[c].value};
        if (!seed) ports[r].push_back(900 + static_cast<std::uint32_t>(unit(rng) * 5));
      }
    }
    std::vector<std::pair<RouterId, RouterId>> edges = inter;
    for (RouterId u = 0; u < n; ++u) {
      for (RouterId v = u + 1; v < n; ++v) {
        if (clique_of[u] == clique_of[v]) edges.emplace_back(u, v);
      }
    }
    auto graph = make_graph(ports, edges);

    std::vector<double> intra(k);
    for (auto& w : intra) w = 0.5 + 0.5 * unit(rng);
    const double floor = *std::min_element(intra.begin(), intra.end());
    std::vector<double> fused(graph->edge_count());
    for (EdgeId e = 0; e < graph->edge_count(); ++e) {
      const Edge& edge = graph->edge(e);
      fused[e] = clique_of[edge.u] == clique_of[edge.v]
                     ? intra[clique_of[edge.u]]
                     : floor * (0.05 + 0.9 * unit(rng));
    }
    return PlantedInstance{WeightedGraph::from_fused(graph, std::move(fused)),
                           std::move(clique_of), std::move(clique_as), k};
  }
}

}  // namespace rtas::testing
