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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rtas/baseline.hpp"
#include "rtas/cluster.hpp"
#include "rtas/graph_cache.hpp"
#include "rtas/ingest.hpp"
#include "rtas/synth.hpp"

namespace rtas {
namespace {

SynthConfig small(std::uint64_t seed) {
  SynthConfig c;
  c.n_as = 12;
  c.routers_per_as = 15;
  c.rng_seed = seed;
  return c;
}

TEST(Synth, Deterministic) {
  auto a = synth_generate(small(4));
  auto b = synth_generate(small(4));
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.home, b.home);
  auto c = synth_generate(small(5));
  EXPECT_FALSE(a.graph == c.graph);
}

TEST(Synth, GraphInvariantsAndTruth) {
  auto d = synth_generate(small(6));
  EXPECT_FALSE(d.graph.check_invariants(true).has_value());
  EXPECT_EQ(d.home.size(), d.graph.router_count());
  EXPECT_EQ(d.truth.resolved.size() + d.truth.counters.missing_port_as,
            d.graph.router_count());
  for (auto [r, as] : d.truth.resolved) EXPECT_EQ(as, d.home[r]);
}

TEST(Synth, NoiseFreeRoutersAreSeedsOfTheirHome) {
  auto c = small(7);
  c.label_noise = 0.0;
  auto d = synth_generate(c);
  auto seeds = seed_set(d.graph);
  EXPECT_EQ(seeds.count, d.graph.router_count());
  for (const Router& r : d.graph.routers()) {
    EXPECT_EQ(seeds.as_of[r.id], d.home[r.id]);
    EXPECT_EQ(election(r), d.home[r.id]);
  }
}

TEST(Synth, NoInterAsEdgesWithoutPOut) {
  auto c = small(8);
  c.p_out = 0.0;
  auto d = synth_generate(c);
  for (const Edge& e : d.graph.edges()) EXPECT_EQ(d.home[e.u], d.home[e.v]);
}

TEST(Synth, RejectsBadConfigs) {
  auto c = small(1);
  c.n_as = 1;
  EXPECT_THROW(synth_generate(c), ValidationError);
  c = small(1);
  c.p_in = 1.5;
  EXPECT_THROW(synth_generate(c), ValidationError);
  c = small(1);
  c.ports_per_router = 1.0;
  EXPECT_THROW(synth_generate(c), ValidationError);
  c = small(1);
  c.p_in = 0.0;
  c.p_out = 0.0;
  EXPECT_THROW(synth_generate(c), ValidationError);
}

TEST(Synth, FilesRebuildTheSameGraph) {
  auto d = synth_generate(small(9));
  const auto dir = std::filesystem::temp_directory_path() / "rtas_synth_files_test";
  std::filesystem::create_directories(dir);
  write_synth_files(d, 12, dir);
  std::ifstream nodes(dir / "nodes.txt"), links(dir / "links.txt"), ip2as(dir / "ip2as.txt"),
      truth(dir / "truth.txt");
  auto built = build_graph(parse_nodes(nodes), parse_links(links), parse_ip2as(ip2as).table, 2);
  EXPECT_EQ(built.graph, d.graph);
  auto t = parse_truth(truth);
  EXPECT_EQ(t.ip_to_as.size(), d.graph.router_count());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace rtas
