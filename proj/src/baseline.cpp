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

#include "rtas/baseline.hpp"

#include <algorithm>

namespace rtas {

void AsGraph::add_node(AsNumber a) { adjacency_[a]; }

void AsGraph::add_edge(AsNumber a, AsNumber b) {
  if (a == b) return;
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

void AsGraph::finalize() {
  for (auto& [as, nbrs] : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

std::size_t AsGraph::degree(AsNumber a) const {
  auto it = adjacency_.find(a);
  return it == adjacency_.end() ? 0 : it->second.size();
}

const std::vector<AsNumber>& AsGraph::neighbors(AsNumber a) const {
  static const std::vector<AsNumber> kEmpty;
  auto it = adjacency_.find(a);
  return it == adjacency_.end() ? kEmpty : it->second;
}

std::size_t AsGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [as, nbrs] : adjacency_) twice += nbrs.size();
  return twice / 2;
}

std::optional<AsNumber> election(const Router& router) {
  std::optional<AsNumber> best;
  std::uint32_t top = 0;
  bool tied = false;
  for (const AsCount& c : router.as_freq) {
    if (c.count > top) {
      top = c.count;
      best = c.as;
      tied = false;
    } else if (c.count == top) {
      tied = true;
    }
  }
  if (tied) return std::nullopt;
  return best;
}

AsGraph build_as_graph(const RouterGraph& graph) {
  AsGraph as_graph;
  for (const Router& r : graph.routers()) {
    for (std::size_t i = 0; i < r.as_freq.size(); ++i) {
      as_graph.add_node(r.as_freq[i].as);
      for (std::size_t j = i + 1; j < r.as_freq.size(); ++j) {
        as_graph.add_edge(r.as_freq[i].as, r.as_freq[j].as);
      }
    }
  }
  as_graph.finalize();
  return as_graph;
}

AsNumber degree_fallback(const Router& router, const AsGraph& as_graph) {
  if (router.as_freq.empty()) {
    throw ValidationError("router " + router.token + " has no annotated port");
  }
  // as_freq is ascending by ASN, so strict < keeps the smaller ASN on ties.
  AsNumber best = router.as_freq.front().as;
  std::size_t best_degree = as_graph.degree(best);
  for (const AsCount& c : router.as_freq) {
    const std::size_t d = as_graph.degree(c.as);
    if (d < best_degree) {
      best = c.as;
      best_degree = d;
    }
  }
  return best;
}

Assignment election_degree(const RouterGraph& graph) {
  const AsGraph as_graph = build_as_graph(graph);
  Assignment out(graph.router_count());
  for (const Router& r : graph.routers()) {
    if (r.as_freq.empty()) continue;
    if (auto as = election(r)) {
      out.set(r.id, *as, Provenance::kElection);
    } else {
      out.set(r.id, degree_fallback(r, as_graph), Provenance::kDegree);
    }
  }
  return out;
}

}  // namespace rtas
