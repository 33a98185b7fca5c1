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

// Ordinary (global) hierarchical clustering used as a small-instance oracle:
// single-linkage agglomeration over the whole weighted graph, a dendrogram
// cut at maximum modularity, and per-community majority AS assignment.
// Quadratic memory; guarded by a router-count cap.

#ifndef RTAS_ORACLE_HPP_
#define RTAS_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rtas/cluster.hpp"
#include "rtas/model.hpp"
#include "rtas/weights.hpp"

namespace rtas {

inline constexpr std::size_t kDefaultOracleCap = 5000;

struct Partition {
  std::vector<std::uint32_t> community;  // dense 0..count-1
  std::uint32_t count = 0;

  bool operator==(const Partition&) const = default;
};

// Repeatedly merges the pair of clusters joined by the heaviest edge (single
// linkage) until no edge crosses clusters, so a graph with C components
// yields N - C merges. Ties go to the pair with the smallest
// (min member id, other min member id). Throws ValidationError above `cap`.
Dendrogram full_dendrogram(const WeightedGraph& weighted,
                           std::size_t cap = kDefaultOracleCap);

// Newman-Girvan Q on the unweighted adjacency.
double modularity(const RouterGraph& graph, const Partition& partition);
// Same with fused edge weights as edge multiplicities.
double weighted_modularity(const WeightedGraph& weighted,
                           const Partition& partition);

// Partition after the first `merges` merges. Communities are numbered in
// order of their smallest member.
Partition partition_at_level(const Dendrogram& dendrogram, std::size_t merges);

enum class ModularityKind : std::uint8_t { kUnweighted, kWeighted };

struct Cut {
  Partition partition;
  std::size_t merges = 0;
  double modularity = 0.0;
};

// The dendrogram level with maximal Q; on ties the coarser level wins.
Cut best_cut(const Dendrogram& dendrogram, const WeightedGraph& weighted,
             ModularityKind kind = ModularityKind::kUnweighted);

// Non-seed members take the majority seed AS of their community (ties to the
// smaller ASN) with provenance Chained; seeds keep their own AS; seedless
// communities stay Unassigned.
Assignment oracle_assign(const Partition& partition, const SeedSet& seeds);

}  // namespace rtas

#endif  // RTAS_ORACLE_HPP_
