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

// Fixture builders and brute-force reference implementations used by the
// unit and acceptance tests. Nothing here calls into the weight or
// clustering code under test.

#ifndef RTAS_TESTS_SUPPORT_HPP_
#define RTAS_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "rtas/cluster.hpp"
#include "rtas/model.hpp"
#include "rtas/weights.hpp"

namespace rtas::testing {

// Router with one interface per entry of `ases`; 0 marks an unannotated port.
Router make_router(const std::string& token, const std::vector<std::uint32_t>& ases,
                   std::uint32_t addr_base);

std::shared_ptr<const RouterGraph> make_graph(
    const std::vector<std::vector<std::uint32_t>>& ports,
    const std::vector<std::pair<RouterId, RouterId>>& edges);

// A = {1,1,1,2}, B = {1,7,8}, one edge.
std::shared_ptr<const RouterGraph> two_router_fixture();
// Path 0-1-2, all ports in AS 1.
std::shared_ptr<const RouterGraph> path_fixture();
// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
std::shared_ptr<const RouterGraph> two_triangle_fixture();

// Random simple graph without isolated routers; every router has 1..5
// ports drawn from ASes 1..as_pool, with ~10% unannotated when allowed.
std::shared_ptr<const RouterGraph> random_graph(std::mt19937_64& rng,
                                                std::uint32_t max_n,
                                                bool allow_unannotated);

// Random per-edge weights from a small value set so ties and zeros occur.
WeightedGraph random_weights(std::shared_ptr<const RouterGraph> graph,
                             std::mt19937_64& rng);

// Set-enumeration similarity over std::set neighborhoods rebuilt from the
// raw edge list.
class BruteSimilarity {
 public:
  explicit BruteSimilarity(const RouterGraph& graph);
  double operator()(SimilarityMetric metric, RouterId a, RouterId b) const;

 private:
  std::vector<std::set<RouterId>> hood_;
};

double brute_similarity(const RouterGraph& graph, SimilarityMetric metric,
                        RouterId a, RouterId b);

// Double loop over annotated interface pairs.
double brute_port_weight(const RouterGraph& graph, RouterId a, RouterId b);

struct PlantedInstance {
  WeightedGraph weighted;
  std::vector<std::uint32_t> clique_of;
  std::vector<AsNumber> clique_as;
  std::size_t cliques = 0;
};

// Cliques of size 4..10 (2..5 of them, N <= 60) linked by a random tree of
// single edges lighter than every intra-clique weight. Each clique has one
// AS and at least one seed. Resamples until the smallest clique degree d
// satisfies d*d > 2m, so merging any two blocks joined by one edge lowers Q.
PlantedInstance planted_instance(std::mt19937_64& rng);

}  // namespace rtas::testing

#endif  // RTAS_TESTS_SUPPORT_HPP_
