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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rtas/cluster.hpp"
#include "support.hpp"

namespace rtas {
namespace {

using testing::make_graph;

WeightedGraph with_weights(std::shared_ptr<const RouterGraph> g,
                           const std::vector<double>& by_edge_in_order) {
  return WeightedGraph::from_fused(std::move(g), by_edge_in_order);
}

TEST(SeedSet, SingleDistinctAs) {
  auto g = make_graph({{1, 1}, {1, 2}, {1, 0}, {0, 0}}, {{0, 1}, {1, 2}, {2, 3}});
  auto s = seed_set(*g);
  EXPECT_EQ(s.count, 2u);
  EXPECT_EQ(s.as_of[0], AsNumber(1));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.as_of[2], AsNumber(1));
  EXPECT_FALSE(s.contains(3));
}

TEST(SeedSet, EmptyIsAnError) {
  auto g = make_graph({{1, 2}, {1, 2}}, {{0, 1}});
  EXPECT_THROW(seed_set(*g), ValidationError);
}

TEST(StrongestExternalEdge, StarAndTies) {
  // Star: 0 linked to 1, 2, 3 with weights 0.2, 0.9, 0.5.
  auto g = make_graph({{1}, {1}, {1}, {1}}, {{0, 1}, {0, 2}, {0, 3}});
  auto w = with_weights(g, {0.2, 0.9, 0.5});
  std::vector<RouterId> a = {0};
  auto e = strongest_external_edge(w, a);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->member, 0u);
  EXPECT_EQ(e->neighbor, 2u);
  std::vector<RouterId> all = {0, 1, 2, 3};
  EXPECT_FALSE(strongest_external_edge(w, all));

  auto t = make_graph({{1}, {1}, {1}, {1}, {1}, {1}, {1}, {1}, {1}, {1}},
                      {{0, 9}, {0, 7}});
  auto tw = with_weights(t, {0.5, 0.5});
  auto tie = strongest_external_edge(tw, a);
  ASSERT_TRUE(tie);
  EXPECT_EQ(tie->neighbor, 7u);
}

TEST(AssignRouter, OneHopAndPath) {
  // Path u(0) - v(1) - s(2), s is the only seed.
  auto g = make_graph({{1, 2}, {1, 2}, {1, 1}}, {{0, 1}, {1, 2}});
  auto w = with_weights(g, {1.0, 1.0});
  auto known = seed_assignment(seed_set(*g));
  auto r = assign_router(w, known, 0, nullptr);
  EXPECT_EQ(r.as, AsNumber(1));
  EXPECT_EQ(r.chain, (std::vector<RouterId>{0, 1}));
  EXPECT_EQ(r.anchor, 2u);
  // Equal weights tie-break to the lower id, so v first walks through u.
  EXPECT_EQ(assign_router(w, known, 1, nullptr).chain.size(), 2u);
  auto hop = assign_router(with_weights(g, {0.5, 1.0}), known, 1, nullptr);
  EXPECT_EQ(hop.chain, (std::vector<RouterId>{1}));
  EXPECT_EQ(hop.as, AsNumber(1));
  EXPECT_THROW(assign_router(w, known, 2, nullptr), ValidationError);
}

TEST(AssignRouter, FollowsStrongestEdge) {
  // 0 has seeds 1 (AS 1) and 2 (AS 2); the heavier edge wins.
  auto g = make_graph({{1, 2}, {1}, {2}}, {{0, 1}, {0, 2}});
  auto known = seed_assignment(seed_set(*g));
  EXPECT_EQ(assign_router(with_weights(g, {0.3, 0.7}), known, 0, nullptr).as, AsNumber(2));
  EXPECT_EQ(assign_router(with_weights(g, {0.7, 0.3}), known, 0, nullptr).as, AsNumber(1));
  EXPECT_EQ(assign_router(with_weights(g, {0.5, 0.5}), known, 0, nullptr).as, AsNumber(1));
}

TEST(AssignAll, SeedlessComponentStaysUnassigned) {
  auto g = make_graph({{1, 1}, {1, 2}, {3, 4}, {3, 4}}, {{0, 1}, {2, 3}});
  auto w = with_weights(g, {1.0, 1.0});
  auto seeds = seed_set(*g);
  AssignStats stats;
  auto a = assign_all(w, seeds, default_order(seeds), &stats);
  EXPECT_EQ(a[0].provenance, Provenance::kSeed);
  EXPECT_EQ(a[1].as, AsNumber(1));
  EXPECT_EQ(a[1].provenance, Provenance::kChained);
  EXPECT_EQ(a[2].provenance, Provenance::kUnassigned);
  EXPECT_EQ(a[3].provenance, Provenance::kUnassigned);
  EXPECT_EQ(stats.chains, 2u);
  EXPECT_EQ(stats.unassigned_routers, 2u);
}

TEST(AssignAll, AllSeedsIsIdentity) {
  auto g = make_graph({{1}, {2}, {2}}, {{0, 1}, {1, 2}});
  auto seeds = seed_set(*g);
  auto a = assign_all(with_weights(g, {1, 1}), seeds, default_order(seeds));
  EXPECT_EQ(a, seed_assignment(seeds));
}

TEST(AssignAll, TwoCliquesOneSeedEach) {
  std::vector<std::vector<std::uint32_t>> ports = {{5, 5}, {5, 6}, {5, 7}, {6, 6}, {6, 5}, {6, 7}};
  auto g = make_graph(ports, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 5}});
  std::vector<double> w(g->edge_count(), 1.0);
  w[*g->find_edge(2, 5)] = 0.1;
  auto wg = with_weights(g, w);
  auto seeds = seed_set(*g);
  auto a = assign_all(wg, seeds, default_order(seeds));
  for (RouterId r : {0u, 1u, 2u}) EXPECT_EQ(a[r].as, AsNumber(5));
  for (RouterId r : {3u, 4u, 5u}) EXPECT_EQ(a[r].as, AsNumber(6));
}

TEST(AssignAll, RejectsBadOrders) {
  auto g = make_graph({{1}, {1, 2}, {1, 2}}, {{0, 1}, {1, 2}});
  auto w = with_weights(g, {1, 1});
  auto seeds = seed_set(*g);
  std::vector<RouterId> missing = {1};
  std::vector<RouterId> with_seed = {0, 1, 2};
  std::vector<RouterId> repeat = {1, 1};
  EXPECT_THROW(assign_all(w, seeds, missing), ValidationError);
  EXPECT_THROW(assign_all(w, seeds, with_seed), ValidationError);
  EXPECT_THROW(assign_all(w, seeds, repeat), ValidationError);
}

TEST(AssignAll, EqualWeightCliqueIsOrderIndependent) {
  std::vector<std::vector<std::uint32_t>> ports(8, {3, 4});
  ports[5] = {3, 3};
  std::vector<std::pair<RouterId, RouterId>> edges;
  for (RouterId u = 0; u < 8; ++u)
    for (RouterId v = u + 1; v < 8; ++v) edges.emplace_back(u, v);
  auto g = make_graph(ports, edges);
  auto w = with_weights(g, std::vector<double>(g->edge_count(), 0.5));
  auto seeds = seed_set(*g);
  auto base = assign_all(w, seeds, default_order(seeds));
  for (std::uint64_t s = 0; s < 10; ++s) {
    EXPECT_EQ(assign_all(w, seeds, shuffled_order(seeds, s)), base);
  }
}

TEST(AssignAll, ParallelMatchesSerial) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    auto g = testing::random_graph(rng, 80, true);
    auto w = testing::random_weights(g, rng);
    SeedSet seeds;
    try {
      seeds = seed_set(*g);
    } catch (const ValidationError&) {
      continue;
    }
    for (std::uint64_t s = 0; s < 3; ++s) {
      auto order = shuffled_order(seeds, s);
      EXPECT_EQ(assign_all(w, seeds, order), assign_all_parallel(w, seeds, order));
    }
  }
}

TEST(AssignRouter, TouchesOnlyItsComponent) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    auto g = testing::random_graph(rng, 60, true);
    auto w = testing::random_weights(g, rng);
    const auto comp = g->connected_components();
    Assignment none(g->router_count());
    for (RouterId r = 0; r < g->router_count(); ++r) {
      std::vector<RouterId> touched;
      auto res = assign_router(w, none, r, &touched);
      for (RouterId x : touched) ASSERT_EQ(comp[x], comp[r]);
      EXPECT_FALSE(res.as);
    }
  }
}

TEST(ShuffledOrder, DeterministicPermutation) {
  auto g = make_graph({{1}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto seeds = seed_set(*g);
  auto a = shuffled_order(seeds, 42);
  EXPECT_EQ(a, shuffled_order(seeds, 42));
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, default_order(seeds));
}

}  // namespace
}  // namespace rtas
