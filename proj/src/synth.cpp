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

#include "rtas/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <string>

namespace rtas {
namespace {

constexpr std::uint32_t kBlockBase = 16u << 24;
constexpr std::uint32_t kBlockBits = 12;  // /20 per AS

// Calls fn(k) for each k in [0, count) independently with probability p,
// skipping geometrically between hits.
template <typename Rng, typename Fn>
void bernoulli_hits(std::uint64_t count, double p, Rng& rng, Fn&& fn) {
  if (p <= 0.0 || count == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::uint64_t k = 0;
  while (true) {
    const double u = 1.0 - unit(rng);  // (0, 1]
    const double skip = std::floor(std::log(u) / log_q);
    if (skip >= static_cast<double>(count - k)) return;
    k += static_cast<std::uint64_t>(skip);
    fn(k);
    if (++k >= count) return;
  }
}

std::vector<std::vector<std::uint32_t>> make_backbone(std::uint32_t n_as,
                                                      std::mt19937_64& rng) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> links;
  auto add = [&](std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    return links.emplace(std::min(a, b), std::max(a, b)).second;
  };
  for (std::uint32_t a = 0; a < n_as; ++a) add(a, (a + 1) % n_as);
  std::uniform_int_distribution<std::uint32_t> pick(0, n_as - 1);
  const std::uint64_t possible = static_cast<std::uint64_t>(n_as) * (n_as - 1) / 2;
  std::uint32_t chords = std::min<std::uint64_t>(n_as / 2, possible - links.size());
  while (chords > 0) {
    if (add(pick(rng), pick(rng))) --chords;
  }
  std::vector<std::vector<std::uint32_t>> adj(n_as);
  for (auto [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

}  // namespace

void validate(const SynthConfig& c) {
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (c.n_as < 2) throw ValidationError("n_as must be >= 2");
  if (c.routers_per_as < 1) throw ValidationError("routers_per_as must be >= 1");
  if (!(c.ports_per_router >= 2.0)) {
    throw ValidationError("ports_per_router must be >= 2");
  }
  if (!prob(c.p_in) || !prob(c.p_out) || !prob(c.label_noise)) {
    throw ValidationError("probabilities must lie in [0, 1]");
  }
  if (static_cast<std::uint64_t>(c.n_as) << kBlockBits >
      (224ull << 24) - kBlockBase) {
    throw ValidationError("n_as too large for the synthetic address plan");
  }
}

SynthData synth_generate(const SynthConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.rng_seed);
  const std::uint32_t n_as = config.n_as;
  const std::uint32_t per = config.routers_per_as;
  const auto backbone = make_backbone(n_as, rng);

  const std::uint64_t n = static_cast<std::uint64_t>(n_as) * per;
  if (n > 0xFFFFFFF0ull) throw ValidationError("too many routers");
  std::vector<std::uint32_t> next_host(n_as, 1);
  std::poisson_distribution<std::uint32_t> extra_ports(
      std::max(config.ports_per_router - 2.0, 1.0));
  std::bernoulli_distribution noisy(config.label_noise);

  std::vector<Router> routers;
  routers.reserve(n);
  std::vector<AsNumber> home(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    const auto as_index = static_cast<std::uint32_t>(r / per);
    home[r] = AsNumber(as_index + 1);
    const std::uint32_t ports =
        2 + (config.ports_per_router > 2.0 ? extra_ports(rng) : 0u);
    std::vector<Interface> itfs;
    itfs.reserve(ports);
    for (std::uint32_t p = 0; p < ports; ++p) {
      std::uint32_t label = as_index;
      const auto& nbrs = backbone[as_index];
      if (noisy(rng) && !nbrs.empty()) {
        std::uniform_int_distribution<std::size_t> which(0, nbrs.size() - 1);
        label = nbrs[which(rng)];
      }
      if (next_host[label] >= (1u << kBlockBits)) {
        throw ValidationError("address block of AS " + std::to_string(label + 1) +
                              " exhausted; lower routers_per_as or ports");
      }
      const Ipv4 addr(kBlockBase + (label << kBlockBits) + next_host[label]++);
      itfs.push_back({addr, AsNumber(label + 1)});
    }
    routers.emplace_back(static_cast<RouterId>(r), "N" + std::to_string(r + 1),
                         std::move(itfs));
  }

  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < n_as; ++a) {
    const RouterId base = a * per;
    for (std::uint32_t i = 0; i + 1 < per; ++i) {
      bernoulli_hits(per - i - 1, config.p_in, rng, [&](std::uint64_t k) {
        edges.push_back({base + i, base + i + 1 + static_cast<RouterId>(k)});
      });
    }
  }
  for (std::uint32_t a = 0; a < n_as; ++a) {
    for (std::uint32_t b : backbone[a]) {
      if (b < a) continue;
      const std::uint64_t pairs = static_cast<std::uint64_t>(per) * per;
      bernoulli_hits(pairs, config.p_out, rng, [&](std::uint64_t k) {
        edges.push_back({a * per + static_cast<RouterId>(k / per),
                         b * per + static_cast<RouterId>(k % per)});
      });
    }
  }

  RouterGraph full = RouterGraph::build(std::move(routers), std::move(edges));
  std::vector<RouterId> remap;
  SynthData data;
  data.graph = drop_isolated(full, &remap);
  if (data.graph.empty()) {
    throw ValidationError("synthetic config produced an empty graph");
  }
  data.home.resize(data.graph.router_count());
  for (RouterId old = 0; old < remap.size(); ++old) {
    if (remap[old] != ~0u) data.home[remap[old]] = home[old];
  }
  // The truth file names every router's home AS; resolution then applies the
  // same filters as for measured data.
  std::unordered_map<Ipv4, AsNumber> ip_as;
  for (const Router& r : data.graph.routers()) {
    ip_as.emplace(r.interfaces.front().addr, data.home[r.id]);
  }
  data.truth = resolve_ground_truth(data.graph, ip_as);
  return data;
}

void write_synth_files(const SynthData& data, std::uint32_t n_as,
                       const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) throw IoError("cannot write " + (dir / name).string());
    return out;
  };
  const RouterGraph& g = data.graph;
  {
    auto out = open("nodes.txt");
    for (const Router& r : g.routers()) {
      out << "node " << r.token << ":";
      for (const Interface& itf : r.interfaces) out << ' ' << format_ipv4(itf.addr);
      out << '\n';
    }
  }
  {
    auto out = open("links.txt");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      out << "link L" << e + 1 << ": " << g.router(edge.u).token << ' '
          << g.router(edge.v).token << '\n';
    }
  }
  {
    auto out = open("ip2as.txt");
    for (std::uint32_t a = 0; a < n_as; ++a) {
      out << format_ipv4(Ipv4(kBlockBase + (a << kBlockBits))) << "/"
          << 32 - kBlockBits << ' ' << a + 1 << '\n';
    }
  }
  {
    auto out = open("truth.txt");
    for (const Router& r : g.routers()) {
      out << format_ipv4(r.interfaces.front().addr) << ' '
          << data.home[r.id].value << '\n';
    }
  }
}

}  // namespace rtas
