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

#include "rtas/model.hpp"
#include "support.hpp"

namespace rtas {
namespace {

using testing::make_graph;
using testing::make_router;

TEST(Ipv4, ParseAndFormatRoundTrip) {
  auto ip = parse_ipv4("10.1.2.3");
  ASSERT_TRUE(ip);
  EXPECT_EQ(ip->value, 0x0A010203u);
  EXPECT_EQ(format_ipv4(*ip), "10.1.2.3");
  EXPECT_FALSE(parse_ipv4("10.1.2"));
  EXPECT_FALSE(parse_ipv4("10.1.2.256"));
  EXPECT_FALSE(parse_ipv4("10.1.2.3x"));
  EXPECT_FALSE(parse_ipv4(""));
}

TEST(RouterAsFraction, CountsOnlyAnnotatedPorts) {
  EXPECT_DOUBLE_EQ(router_as_fraction(make_router("A", {1, 1, 1, 2}, 0), AsNumber(1)), 0.75);
  EXPECT_DOUBLE_EQ(router_as_fraction(make_router("A", {1, 1}, 0), AsNumber(1)), 1.0);
  EXPECT_DOUBLE_EQ(router_as_fraction(make_router("A", {1, 2, 2}, 0), AsNumber(3)), 0.0);
  EXPECT_DOUBLE_EQ(router_as_fraction(make_router("A", {1, 0, 2}, 0), AsNumber(1)), 0.5);
  EXPECT_THROW(router_as_fraction(make_router("A", {0, 0}, 0), AsNumber(1)), ValidationError);
}

TEST(RouterAsFraction, SumsToOne) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto g = testing::random_graph(rng, 20, true);
    for (const Router& r : g->routers()) {
      double sum = 0;
      for (const AsCount& c : r.as_freq) sum += router_as_fraction(r, c.as);
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(RouterGraph, BuildDedupsAndDropsSelfLoops) {
  auto g = make_graph({{1}, {1}, {1}}, {{0, 1}, {1, 0}, {1, 1}, {1, 2}});
  EXPECT_EQ(g->edge_count(), 2u);
  EXPECT_TRUE(g->adjacent(0, 1));
  EXPECT_TRUE(g->adjacent(1, 0));
  EXPECT_FALSE(g->adjacent(0, 2));
  EXPECT_FALSE(g->adjacent(1, 1));
  EXPECT_EQ(g->degree(1), 2u);
  EXPECT_FALSE(g->check_invariants(true).has_value());
}

TEST(RouterGraph, InvariantsHoldOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto g = testing::random_graph(rng, 40, true);
    auto problem = g->check_invariants(true);
    EXPECT_FALSE(problem.has_value()) << *problem;
    for (EdgeId e = 0; e < g->edge_count(); ++e) {
      const Edge& edge = g->edge(e);
      EXPECT_LT(edge.u, edge.v);
      EXPECT_EQ(g->find_edge(edge.u, edge.v), e);
      EXPECT_EQ(g->find_edge(edge.v, edge.u), e);
    }
  }
}

TEST(RouterGraph, ConnectedComponents) {
  auto g = make_graph({{1}, {1}, {1}, {1}, {1}}, {{0, 1}, {2, 3}, {3, 4}});
  auto c = g->connected_components();
  EXPECT_EQ(c[0], c[1]);
  EXPECT_EQ(c[2], c[3]);
  EXPECT_EQ(c[3], c[4]);
  EXPECT_NE(c[0], c[2]);
}

TEST(RouterGraph, DropIsolatedReindexes) {
  auto g = make_graph({{1}, {2}, {3}, {4}}, {{1, 3}});
  std::vector<RouterId> remap;
  auto d = drop_isolated(*g, &remap);
  ASSERT_EQ(d.router_count(), 2u);
  EXPECT_EQ(d.router(0).token, "N2");
  EXPECT_EQ(d.router(1).token, "N4");
  EXPECT_EQ(remap[0], ~0u);
  EXPECT_EQ(remap[1], 0u);
  EXPECT_EQ(remap[3], 1u);
  EXPECT_TRUE(d.adjacent(0, 1));
}

TEST(Provenance, NamesRoundTrip) {
  for (auto p : {Provenance::kSeed, Provenance::kChained, Provenance::kElection,
                 Provenance::kDegree, Provenance::kUnassigned}) {
    EXPECT_EQ(parse_provenance(provenance_name(p)), p);
  }
  EXPECT_FALSE(parse_provenance("bogus"));
}

TEST(Assignment, UnassignedIffAsAbsent) {
  Assignment a(3);
  a.set(0, AsNumber(5), Provenance::kSeed);
  a.set(1, AsNumber(6), Provenance::kChained);
  EXPECT_EQ(a.unassigned_count(), 1u);
  EXPECT_EQ(a[2].provenance, Provenance::kUnassigned);
  a.set_unassigned(1);
  EXPECT_FALSE(a.known(1));
  EXPECT_EQ(a.unassigned_count(), 2u);
}

}  // namespace
}  // namespace rtas
