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

// Fast hierarchy clustering: every router whose annotated ports agree on one
// AS is a seed; every other router grows a single-linkage chain along the
// strongest edge leaving the chain until it reaches a router whose AS is
// known, and the whole chain inherits that AS.

#ifndef RTAS_CLUSTER_HPP_
#define RTAS_CLUSTER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rtas/model.hpp"
#include "rtas/weights.hpp"

namespace rtas {

struct SeedSet {
  std::vector<std::optional<AsNumber>> as_of;  // indexed by RouterId
  std::size_t count = 0;

  bool contains(RouterId r) const { return as_of[r].has_value(); }
};

// Routers with exactly one distinct origin AS over their annotated ports.
// Throws ValidationError when no router qualifies.
SeedSet seed_set(const RouterGraph& graph);

Assignment seed_assignment(const SeedSet& seeds);

struct ExternalEdge {
  RouterId member = 0;
  RouterId neighbor = 0;

  bool operator==(const ExternalEdge&) const = default;
};

// Maximum fused-weight edge from `cluster` to a non-member. Ties go to the
// smaller neighbor id, then the smaller member id.
std::optional<ExternalEdge> strongest_external_edge(
    const WeightedGraph& weighted, std::span<const RouterId> cluster);

struct ChainResult {
  std::optional<AsNumber> as;      // empty: frontier exhausted
  std::vector<RouterId> chain;     // target first, in merge order
  std::optional<RouterId> anchor;  // known router that supplied the AS
};

// Grows the chain from `target`, which must not have a known AS in `known`.
// Unassigned routers in `known` are treated as unknown. If `touched` is
// given, every router whose state the walk reads is appended to it.
ChainResult assign_router(const WeightedGraph& weighted, const Assignment& known,
                          RouterId target,
                          std::vector<RouterId>* touched = nullptr);

struct AssignStats {
  std::size_t chains = 0;
  std::size_t chained_routers = 0;
  std::size_t unassigned_routers = 0;
  std::size_t longest_chain = 0;
  std::size_t heap_pushes = 0;
  // High-water mark of the auxiliary state (visit stamps, frontier heap,
  // chain buffer, processed flags), in bytes.
  std::size_t peak_aux_bytes = 0;
};

// Seeds keep provenance Seed; the routers in `order` (exactly the non-seeds)
// are processed in turn, later chains seeing earlier results.
Assignment assign_all(const WeightedGraph& weighted, const SeedSet& seeds,
                      std::span<const RouterId> order,
                      AssignStats* stats = nullptr);

// Same result as assign_all: each connected component is processed on its
// own thread, keeping the relative order of `order` inside the component.
Assignment assign_all_parallel(const WeightedGraph& weighted,
                               const SeedSet& seeds,
                               std::span<const RouterId> order);

// Non-seed routers ascending.
std::vector<RouterId> default_order(const SeedSet& seeds);
// Non-seed routers in a uniformly shuffled order determined by `rng_seed`.
std::vector<RouterId> shuffled_order(const SeedSet& seeds,
                                     std::uint64_t rng_seed);

}  // namespace rtas

#endif  // RTAS_CLUSTER_HPP_
