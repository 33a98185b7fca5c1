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

#include "rtas/cluster.hpp"

#include <algorithm>
#include <random>
#include <string>

#include <omp.h>

namespace rtas {
namespace {

struct Candidate {
  double weight;
  RouterId neighbor;
  RouterId member;
};

// True if a should be chosen over b.
bool stronger(const Candidate& a, const Candidate& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.neighbor != b.neighbor) return a.neighbor < b.neighbor;
  return a.member < b.member;
}

// std heap helpers keep the "largest" element first; invert for stronger().
struct HeapOrder {
  bool operator()(const Candidate& a, const Candidate& b) const {
    return stronger(b, a);
  }
};

// Reusable scratch for chain walks over one graph.
class ChainWalker {
 public:
  explicit ChainWalker(const WeightedGraph& weighted)
      : weighted_(weighted),
        graph_(weighted.graph()),
        stamp_(graph_.router_count(), 0) {}

  // Walks from target; known(r) must return the AS of r if r is known.
  template <typename KnownFn>
  std::optional<AsNumber> walk(RouterId target, KnownFn&& known,
                               std::vector<RouterId>& chain,
                               std::optional<RouterId>* anchor,
                               std::vector<RouterId>* touched) {
    ++current_;
    heap_.clear();
    chain.clear();
    add_member(target, chain, touched);
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), HeapOrder{});
      const Candidate top = heap_.back();
      heap_.pop_back();
      if (stamp_[top.neighbor] == current_) continue;
      if (auto as = known(top.neighbor)) {
        if (anchor) *anchor = top.neighbor;
        return as;
      }
      add_member(top.neighbor, chain, touched);
    }
    return std::nullopt;
  }

  std::size_t peak_heap() const { return peak_heap_; }
  std::size_t pushes() const { return pushes_; }
  std::size_t stamp_bytes() const { return stamp_.size() * sizeof(std::uint32_t); }

 private:
  void add_member(RouterId r, std::vector<RouterId>& chain,
                  std::vector<RouterId>* touched) {
    stamp_[r] = current_;
    chain.push_back(r);
    if (touched) touched->push_back(r);
    const auto nbrs = graph_.neighbors(r);
    const auto eids = graph_.incident_edges(r);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (stamp_[nbrs[i]] == current_) continue;
      if (touched) touched->push_back(nbrs[i]);
      heap_.push_back({weighted_.fused(eids[i]), nbrs[i], r});
      std::push_heap(heap_.begin(), heap_.end(), HeapOrder{});
      ++pushes_;
    }
    peak_heap_ = std::max(peak_heap_, heap_.size());
  }

  const WeightedGraph& weighted_;
  const RouterGraph& graph_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t current_ = 0;
  std::vector<Candidate> heap_;
  std::size_t peak_heap_ = 0;
  std::size_t pushes_ = 0;
};

void check_order(const RouterGraph& graph, const SeedSet& seeds,
                 std::span<const RouterId> order) {
  if (seeds.as_of.size() != graph.router_count()) {
    throw ValidationError("seed set does not match the graph");
  }
  std::vector<std::uint8_t> seen(graph.router_count(), 0);
  for (RouterId r : order) {
    if (r >= graph.router_count()) throw ValidationError("order entry out of range");
    if (seeds.contains(r)) {
      throw ValidationError("order contains seed router " + std::to_string(r));
    }
    if (seen[r]++) throw ValidationError("order repeats router " + std::to_string(r));
  }
  if (order.size() + seeds.count != graph.router_count()) {
    throw ValidationError("order must cover every non-seed router");
  }
}

// Runs one chain for `target` and records its outcome over the chain.
template <typename KnownFn>
void settle(ChainWalker& walker, RouterId target, KnownFn&& known,
            std::vector<RouterId>& chain, Assignment& out,
            std::vector<std::uint8_t>& done, AssignStats* stats) {
  auto as = walker.walk(target, known, chain, nullptr, nullptr);
  for (RouterId r : chain) {
    if (as) {
      out.set(r, *as, Provenance::kChained);
    } else {
      out.set_unassigned(r);
    }
    done[r] = 1;
  }
  if (stats) {
    ++stats->chains;
    stats->longest_chain = std::max(stats->longest_chain, chain.size());
  }
}

}  // namespace

SeedSet seed_set(const RouterGraph& graph) {
  SeedSet seeds;
  seeds.as_of.resize(graph.router_count());
  for (const Router& r : graph.routers()) {
    if (r.as_freq.size() == 1) {
      seeds.as_of[r.id] = r.as_freq.front().as;
      ++seeds.count;
    }
  }
  if (seeds.count == 0) {
    throw ValidationError("no seed router: no router has all ports in one AS");
  }
  return seeds;
}

Assignment seed_assignment(const SeedSet& seeds) {
  Assignment out(seeds.as_of.size());
  for (RouterId r = 0; r < seeds.as_of.size(); ++r) {
    if (seeds.as_of[r]) out.set(r, *seeds.as_of[r], Provenance::kSeed);
  }
  return out;
}

std::optional<ExternalEdge> strongest_external_edge(
    const WeightedGraph& weighted, std::span<const RouterId> cluster) {
  const RouterGraph& graph = weighted.graph();
  std::vector<RouterId> members(cluster.begin(), cluster.end());
  std::sort(members.begin(), members.end());
  std::optional<Candidate> best;
  for (RouterId m : members) {
    const auto nbrs = graph.neighbors(m);
    const auto eids = graph.incident_edges(m);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (std::binary_search(members.begin(), members.end(), nbrs[i])) continue;
      const Candidate c{weighted.fused(eids[i]), nbrs[i], m};
      if (!best || stronger(c, *best)) best = c;
    }
  }
  if (!best) return std::nullopt;
  return ExternalEdge{best->member, best->neighbor};
}

ChainResult assign_router(const WeightedGraph& weighted, const Assignment& known,
                          RouterId target, std::vector<RouterId>* touched) {
  if (known.size() != weighted.graph().router_count()) {
    throw ValidationError("assignment does not match the graph");
  }
  if (target >= known.size()) throw ValidationError("target out of range");
  if (known.known(target)) {
    throw ValidationError("target router already has an AS");
  }
  ChainWalker walker(weighted);
  ChainResult result;
  result.as = walker.walk(
      target, [&](RouterId r) { return known[r].as; }, result.chain,
      &result.anchor, touched);
  return result;
}

Assignment assign_all(const WeightedGraph& weighted, const SeedSet& seeds,
                      std::span<const RouterId> order, AssignStats* stats) {
  const RouterGraph& graph = weighted.graph();
  check_order(graph, seeds, order);
  Assignment out = seed_assignment(seeds);
  std::vector<std::uint8_t> done(graph.router_count(), 0);
  ChainWalker walker(weighted);
  std::vector<RouterId> chain;
  std::size_t peak_chain = 0;
  auto known = [&](RouterId r) { return out[r].as; };
  for (RouterId target : order) {
    if (done[target]) continue;
    settle(walker, target, known, chain, out, done, stats);
    peak_chain = std::max(peak_chain, chain.size());
  }
  if (stats) {
    for (const AssignmentEntry& e : out.entries()) {
      if (e.provenance == Provenance::kChained) ++stats->chained_routers;
      if (e.provenance == Provenance::kUnassigned) ++stats->unassigned_routers;
    }
    stats->heap_pushes = walker.pushes();
    stats->peak_aux_bytes = walker.stamp_bytes() +
                            walker.peak_heap() * sizeof(Candidate) +
                            peak_chain * sizeof(RouterId) + done.size();
  }
  return out;
}

Assignment assign_all_parallel(const WeightedGraph& weighted,
                               const SeedSet& seeds,
                               std::span<const RouterId> order) {
  const RouterGraph& graph = weighted.graph();
  check_order(graph, seeds, order);
  const std::vector<std::uint32_t> component = graph.connected_components();
  std::uint32_t components = 0;
  for (std::uint32_t c : component) components = std::max(components, c + 1);

  // Bucket the order by component, stable within each bucket.
  std::vector<std::size_t> start(components + 1, 0);
  for (RouterId r : order) ++start[component[r] + 1];
  for (std::uint32_t c = 0; c < components; ++c) start[c + 1] += start[c];
  std::vector<RouterId> bucketed(order.size());
  {
    std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
    for (RouterId r : order) bucketed[cursor[component[r]]++] = r;
  }

  Assignment out = seed_assignment(seeds);
  std::vector<std::uint8_t> done(graph.router_count(), 0);
  const std::int64_t n_components = components;
#pragma omp parallel
  {
    ChainWalker walker(weighted);
    std::vector<RouterId> chain;
    auto known = [&](RouterId r) { return out[r].as; };
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t c = 0; c < n_components; ++c) {
      for (std::size_t i = start[c]; i < start[c + 1]; ++i) {
        const RouterId target = bucketed[i];
        if (done[target]) continue;
        settle(walker, target, known, chain, out, done, nullptr);
      }
    }
  }
  return out;
}

std::vector<RouterId> default_order(const SeedSet& seeds) {
  std::vector<RouterId> order;
  order.reserve(seeds.as_of.size() - seeds.count);
  for (RouterId r = 0; r < seeds.as_of.size(); ++r) {
    if (!seeds.contains(r)) order.push_back(r);
  }
  return order;
}

std::vector<RouterId> shuffled_order(const SeedSet& seeds,
                                     std::uint64_t rng_seed) {
  std::vector<RouterId> order = default_order(seeds);
  std::mt19937_64 rng(rng_seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace rtas
