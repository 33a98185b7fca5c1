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

// Port-only baseline: majority vote over a router's origin ASes (election),
// falling back on ties to the candidate AS with the smallest degree in an AS
// graph that fully meshes the ASes seen on each router.

#ifndef RTAS_BASELINE_HPP_
#define RTAS_BASELINE_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rtas/model.hpp"

namespace rtas {

class AsGraph {
 public:
  void add_edge(AsNumber a, AsNumber b);
  void add_node(AsNumber a);
  // Sorts and deduplicates neighbor lists; call once after the last add.
  void finalize();

  bool contains(AsNumber a) const { return adjacency_.count(a) != 0; }
  std::size_t degree(AsNumber a) const;
  const std::vector<AsNumber>& neighbors(AsNumber a) const;
  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;

 private:
  std::unordered_map<AsNumber, std::vector<AsNumber>> adjacency_;
};

// Strict-majority AS over annotated ports; empty on a tie for the top count
// or when the router has no annotated port.
std::optional<AsNumber> election(const Router& router);

// Union over routers of the full mesh among each router's distinct ASes.
AsGraph build_as_graph(const RouterGraph& graph);

// Candidate AS (any AS on the router's ports) with minimal AS-graph degree,
// ties to the smaller ASN. Throws ValidationError without annotated ports.
AsNumber degree_fallback(const Router& router, const AsGraph& as_graph);

// Election, then degree fallback on ties. Uses ports only: no edge weights,
// no seeds.
Assignment election_degree(const RouterGraph& graph);

}  // namespace rtas

#endif  // RTAS_BASELINE_HPP_
