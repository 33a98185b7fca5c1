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

// Core domain types: routers, their AS-annotated interfaces, the router-level
// graph in CSR form, per-router AS assignments and merge dendrograms.

#ifndef RTAS_MODEL_HPP_
#define RTAS_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rtas {

// Input could not be read or parsed. CLI maps this to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input was readable but violates a precondition. CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RouterId = std::uint32_t;
using EdgeId = std::uint32_t;

struct AsNumber {
  std::uint32_t value = 0;

  constexpr AsNumber() = default;
  constexpr explicit AsNumber(std::uint32_t v) : value(v) {}
  auto operator<=>(const AsNumber&) const = default;
};

struct Ipv4 {
  std::uint32_t value = 0;

  constexpr Ipv4() = default;
  constexpr explicit Ipv4(std::uint32_t v) : value(v) {}
  auto operator<=>(const Ipv4&) const = default;
};

// Dotted-quad parsing; rejects anything that is not exactly four octets.
std::optional<Ipv4> parse_ipv4(std::string_view text);
std::string format_ipv4(Ipv4 addr);

struct Interface {
  Ipv4 addr;
  std::optional<AsNumber> origin_as;

  bool operator==(const Interface&) const = default;
};

struct AsCount {
  AsNumber as;
  std::uint32_t count = 0;

  bool operator==(const AsCount&) const = default;
};

struct Router {
  RouterId id = 0;
  std::string token;
  std::vector<Interface> interfaces;
  // Sorted by AS number; only interfaces with a known origin AS contribute.
  std::vector<AsCount> as_freq;

  Router() = default;
  Router(RouterId id, std::string token, std::vector<Interface> interfaces);

  // Recomputes as_freq from interfaces.
  void refresh_as_freq();
  std::uint32_t annotated_ports() const;
  std::uint32_t frequency(AsNumber as) const;

  bool operator==(const Router&) const = default;
};

// Share of the router's annotated ports whose origin AS is `as`.
// Throws ValidationError if the router has no annotated port.
double router_as_fraction(const Router& router, AsNumber as);

struct Edge {
  RouterId u = 0;  // u < v
  RouterId v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Undirected simple graph over routers, stored as CSR with sorted neighbor
// lists. Immutable after construction.
class RouterGraph {
 public:
  RouterGraph() = default;

  // Router ids are rewritten to their position in `routers`. Self-loops and
  // duplicate edges are dropped; endpoints must be < routers.size().
  static RouterGraph build(std::vector<Router> routers,
                           std::vector<Edge> edges);

  std::size_t router_count() const { return routers_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return routers_.empty(); }

  const Router& router(RouterId id) const { return routers_[id]; }
  std::span<const Router> routers() const { return routers_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::uint32_t degree(RouterId id) const {
    return offsets_[id + 1] - offsets_[id];
  }
  std::span<const RouterId> neighbors(RouterId id) const {
    return {neighbors_.data() + offsets_[id], degree(id)};
  }
  // Edge ids parallel to neighbors(id).
  std::span<const EdgeId> incident_edges(RouterId id) const {
    return {incident_.data() + offsets_[id], degree(id)};
  }

  std::optional<EdgeId> find_edge(RouterId a, RouterId b) const;
  bool adjacent(RouterId a, RouterId b) const {
    return find_edge(a, b).has_value();
  }

  // Component label per router, labels dense in order of smallest member.
  std::vector<std::uint32_t> connected_components() const;

  // Full scan of the structural invariants (symmetry, simplicity, sorted
  // lists, dense ids). Returns a description of the first violation.
  std::optional<std::string> check_invariants(bool require_min_degree) const;

  bool operator==(const RouterGraph&) const = default;

 private:
  std::vector<Router> routers_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<RouterId> neighbors_;
  std::vector<EdgeId> incident_;
};

// Keeps routers matching `keep` and edges between them; ids are re-indexed
// preserving relative order.
RouterGraph induced_subgraph(const RouterGraph& graph,
                             const std::function<bool(RouterId)>& keep,
                             std::vector<RouterId>* old_to_new = nullptr);

// Drops degree-0 routers.
RouterGraph drop_isolated(const RouterGraph& graph,
                          std::vector<RouterId>* old_to_new = nullptr);

enum class Provenance : std::uint8_t { kSeed, kChained, kElection, kDegree, kUnassigned };

std::string_view provenance_name(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view name);

struct AssignmentEntry {
  std::optional<AsNumber> as;
  Provenance provenance = Provenance::kUnassigned;

  bool operator==(const AssignmentEntry&) const = default;
};

// One entry per router. provenance == kUnassigned iff `as` is empty.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t router_count)
      : entries_(router_count) {}

  std::size_t size() const { return entries_.size(); }
  const AssignmentEntry& operator[](RouterId id) const { return entries_[id]; }
  std::span<const AssignmentEntry> entries() const { return entries_; }

  void set(RouterId id, AsNumber as, Provenance provenance) {
    entries_[id] = {as, provenance};
  }
  void set_unassigned(RouterId id) {
    entries_[id] = {std::nullopt, Provenance::kUnassigned};
  }
  bool known(RouterId id) const { return entries_[id].as.has_value(); }
  std::size_t unassigned_count() const;

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<AssignmentEntry> entries_;
};

// Binary merge tree. Leaves are clusters 0..N-1; merge k creates cluster N+k.
struct Merge {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double weight = 0.0;

  bool operator==(const Merge&) const = default;
};

struct Dendrogram {
  std::size_t leaf_count = 0;
  std::vector<Merge> merges;
};

}  // namespace rtas

template <>
struct std::hash<rtas::AsNumber> {
  std::size_t operator()(rtas::AsNumber as) const noexcept {
    return std::hash<std::uint32_t>{}(as.value);
  }
};

template <>
struct std::hash<rtas::Ipv4> {
  std::size_t operator()(rtas::Ipv4 ip) const noexcept {
    return std::hash<std::uint32_t>{}(ip.value);
  }
};

#endif  // RTAS_MODEL_HPP_
