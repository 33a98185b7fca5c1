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

#include "rtas/model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace rtas {

std::optional<Ipv4> parse_ipv4(std::string_view text) {
  std::uint32_t value = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int octet = 0; octet < 4; ++octet) {
    if (octet > 0) {
      if (p == end || *p != '.') return std::nullopt;
      ++p;
    }
    unsigned part = 0;
    auto [next, ec] = std::from_chars(p, end, part);
    if (ec != std::errc() || next == p || next - p > 3 || part > 255) {
      return std::nullopt;
    }
    value = (value << 8) | part;
    p = next;
  }
  if (p != end) return std::nullopt;
  return Ipv4(value);
}

std::string format_ipv4(Ipv4 addr) {
  std::string out;
  for (int shift = 24; shift >= 0; shift -= 8) {
    out += std::to_string((addr.value >> shift) & 0xFFu);
    if (shift > 0) out += '.';
  }
  return out;
}

Router::Router(RouterId id, std::string token, std::vector<Interface> interfaces)
    : id(id), token(std::move(token)), interfaces(std::move(interfaces)) {
  refresh_as_freq();
}

void Router::refresh_as_freq() {
  as_freq.clear();
  std::vector<AsNumber> seen;
  seen.reserve(interfaces.size());
  for (const Interface& itf : interfaces) {
    if (itf.origin_as) seen.push_back(*itf.origin_as);
  }
  std::sort(seen.begin(), seen.end());
  for (AsNumber as : seen) {
    if (!as_freq.empty() && as_freq.back().as == as) {
      ++as_freq.back().count;
    } else {
      as_freq.push_back({as, 1});
    }
  }
}

std::uint32_t Router::annotated_ports() const {
  std::uint32_t total = 0;
  for (const AsCount& c : as_freq) total += c.count;
  return total;
}

std::uint32_t Router::frequency(AsNumber as) const {
  auto it = std::lower_bound(
      as_freq.begin(), as_freq.end(), as,
      [](const AsCount& c, AsNumber a) { return c.as < a; });
  return (it != as_freq.end() && it->as == as) ? it->count : 0;
}

double router_as_fraction(const Router& router, AsNumber as) {
  const std::uint32_t total = router.annotated_ports();
  if (total == 0) {
    throw ValidationError("router " + router.token +
                          " has no AS-annotated interface");
  }
  return static_cast<double>(router.frequency(as)) / total;
}

RouterGraph RouterGraph::build(std::vector<Router> routers,
                               std::vector<Edge> edges) {
  RouterGraph g;
  const std::size_t n = routers.size();
  for (std::size_t i = 0; i < n; ++i) routers[i].id = static_cast<RouterId>(i);

  std::vector<Edge> clean;
  clean.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (e.u == e.v) continue;
    if (e.u > e.v) std::swap(e.u, e.v);
    clean.push_back(e);
  }
  std::sort(clean.begin(), clean.end());
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : clean) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(2 * clean.size());
  g.incident_.resize(2 * clean.size());
  std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order yields sorted
  // neighbor lists for both endpoints.
  for (EdgeId id = 0; id < clean.size(); ++id) {
    const Edge& e = clean[id];
    g.neighbors_[cursor[e.v]] = e.u;
    g.incident_[cursor[e.v]++] = id;
  }
  for (EdgeId id = 0; id < clean.size(); ++id) {
    const Edge& e = clean[id];
    g.neighbors_[cursor[e.u]] = e.v;
    g.incident_[cursor[e.u]++] = id;
  }
  // The first pass wrote each router's lower neighbors (as v), the second its
  // higher ones (as u), so every list is already ascending.
  g.routers_ = std::move(routers);
  g.edges_ = std::move(clean);
  return g;
}

std::optional<EdgeId> RouterGraph::find_edge(RouterId a, RouterId b) const {
  if (a >= routers_.size() || b >= routers_.size() || a == b) {
    return std::nullopt;
  }
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

std::vector<std::uint32_t> RouterGraph::connected_components() const {
  constexpr std::uint32_t kNone = ~0u;
  std::vector<std::uint32_t> label(routers_.size(), kNone);
  std::vector<RouterId> stack;
  std::uint32_t next = 0;
  for (RouterId start = 0; start < routers_.size(); ++start) {
    if (label[start] != kNone) continue;
    label[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      RouterId r = stack.back();
      stack.pop_back();
      for (RouterId nb : neighbors(r)) {
        if (label[nb] == kNone) {
          label[nb] = next;
          stack.push_back(nb);
        }
      }
    }
    ++next;
  }
  return label;
}

std::optional<std::string> RouterGraph::check_invariants(
    bool require_min_degree) const {
  const std::size_t n = routers_.size();
  if (offsets_.size() != n + 1) return "offset table size mismatch";
  for (RouterId r = 0; r < n; ++r) {
    if (routers_[r].id != r) return "router ids are not dense";
    if (require_min_degree && degree(r) == 0) {
      return "router " + std::to_string(r) + " has degree 0";
    }
    auto nb = neighbors(r);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == r) return "self-loop at " + std::to_string(r);
      if (i > 0 && nb[i - 1] >= nb[i]) {
        return "neighbor list of " + std::to_string(r) +
               " is unsorted or has duplicates";
      }
      auto back = neighbors(nb[i]);
      if (!std::binary_search(back.begin(), back.end(), r)) {
        return "asymmetric adjacency " + std::to_string(r) + "-" +
               std::to_string(nb[i]);
      }
      const Edge& e = edges_[incident_edges(r)[i]];
      if (!((e.u == r && e.v == nb[i]) || (e.v == r && e.u == nb[i]))) {
        return "incident edge id mismatch at " + std::to_string(r);
      }
    }
  }
  if (neighbors_.size() != 2 * edges_.size()) return "edge count mismatch";
  return std::nullopt;
}

RouterGraph induced_subgraph(const RouterGraph& graph,
                             const std::function<bool(RouterId)>& keep,
                             std::vector<RouterId>* old_to_new) {
  constexpr RouterId kDropped = ~0u;
  std::vector<RouterId> remap(graph.router_count(), kDropped);
  std::vector<Router> routers;
  for (RouterId r = 0; r < graph.router_count(); ++r) {
    if (!keep(r)) continue;
    remap[r] = static_cast<RouterId>(routers.size());
    routers.push_back(graph.router(r));
  }
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (remap[e.u] != kDropped && remap[e.v] != kDropped) {
      edges.push_back({remap[e.u], remap[e.v]});
    }
  }
  if (old_to_new) *old_to_new = remap;
  return RouterGraph::build(std::move(routers), std::move(edges));
}

RouterGraph drop_isolated(const RouterGraph& graph,
                          std::vector<RouterId>* old_to_new) {
  return induced_subgraph(
      graph, [&](RouterId r) { return graph.degree(r) > 0; }, old_to_new);
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kSeed: return "seed";
    case Provenance::kChained: return "chained";
    case Provenance::kElection: return "election";
    case Provenance::kDegree: return "degree";
    case Provenance::kUnassigned: return "unassigned";
  }
  return "unassigned";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
  for (Provenance p : {Provenance::kSeed, Provenance::kChained,
                       Provenance::kElection, Provenance::kDegree,
                       Provenance::kUnassigned}) {
    if (provenance_name(p) == name) return p;
  }
  return std::nullopt;
}

std::size_t Assignment::unassigned_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [](const AssignmentEntry& e) { return !e.as; }));
}

}  // namespace rtas
