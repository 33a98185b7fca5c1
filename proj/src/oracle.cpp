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

#include "rtas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace rtas {
namespace {

constexpr double kNoEdge = -std::numeric_limits<double>::infinity();
constexpr double kTieTolerance = 1e-12;

// Dense cluster-to-cluster single-linkage matrix over slots. A slot is named
// by the smallest leaf it contains, which is also its tie-break key.
class LinkageMatrix {
 public:
  explicit LinkageMatrix(std::size_t n)
      : n_(n), w_(n * n, kNoEdge), best_(n, kNone), active_(n, 1) {}

  double& at(std::size_t i, std::size_t j) { return w_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }

  void refresh_row(std::size_t i) {
    best_[i] = kNone;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i || !active_[j] || at(i, j) == kNoEdge) continue;
      if (best_[i] == kNone || at(i, j) > at(i, best_[i])) best_[i] = j;
    }
  }

  // Heaviest active pair, ties to the smallest (lo, hi) slot pair.
  bool pick(std::size_t& lo, std::size_t& hi) const {
    bool found = false;
    double w = kNoEdge;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!active_[i] || best_[i] == kNone) continue;
      const std::size_t a = std::min(i, best_[i]);
      const std::size_t b = std::max(i, best_[i]);
      const double wi = at(i, best_[i]);
      if (!found || wi > w || (wi == w && std::pair(a, b) < std::pair(lo, hi))) {
        found = true;
        w = wi;
        lo = a;
        hi = b;
      }
    }
    return found;
  }

  // Folds slot `gone` into slot `keep`.
  void merge(std::size_t keep, std::size_t gone) {
    active_[gone] = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (!active_[k] || k == keep) continue;
      const double w = std::max(at(keep, k), at(gone, k));
      at(keep, k) = w;
      at(k, keep) = w;
    }
    refresh_row(keep);
    for (std::size_t k = 0; k < n_; ++k) {
      if (!active_[k] || k == keep) continue;
      if (best_[k] == gone || best_[k] == keep) {
        refresh_row(k);
      } else if (at(k, keep) != kNoEdge &&
                 (best_[k] == kNone || at(k, keep) > at(k, best_[k]) ||
                  (at(k, keep) == at(k, best_[k]) && keep < best_[k]))) {
        best_[k] = keep;
      }
    }
  }

 private:
  static constexpr std::size_t kNone = ~std::size_t{0};

  std::size_t n_;
  std::vector<double> w_;
  std::vector<std::size_t> best_;
  std::vector<std::uint8_t> active_;
};

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

// Per-router degree (or strength) and the total edge mass m.
std::vector<double> node_mass(const WeightedGraph& weighted, ModularityKind kind,
                              double& total) {
  const RouterGraph& g = weighted.graph();
  std::vector<double> d(g.router_count(), 0.0);
  total = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double w = kind == ModularityKind::kWeighted ? weighted.fused(e) : 1.0;
    d[g.edge(e).u] += w;
    d[g.edge(e).v] += w;
    total += w;
  }
  return d;
}

double q_of(const RouterGraph& g, const Partition& p,
            const std::vector<double>& edge_w) {
  if (p.community.size() != g.router_count()) {
    throw ValidationError("partition does not cover the graph");
  }
  double m = 0.0;
  std::vector<double> intra(p.count, 0.0);
  std::vector<double> deg(p.count, 0.0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const double w = edge_w.empty() ? 1.0 : edge_w[e];
    m += w;
    deg[p.community[edge.u]] += w;
    deg[p.community[edge.v]] += w;
    if (p.community[edge.u] == p.community[edge.v]) intra[p.community[edge.u]] += w;
  }
  if (m == 0.0) return 0.0;
  double q = 0.0;
  for (std::uint32_t c = 0; c < p.count; ++c) {
    const double share = deg[c] / (2.0 * m);
    q += intra[c] / m - share * share;
  }
  return q;
}

}  // namespace

Dendrogram full_dendrogram(const WeightedGraph& weighted, std::size_t cap) {
  const RouterGraph& g = weighted.graph();
  const std::size_t n = g.router_count();
  if (n > cap) {
    throw ValidationError("oracle clustering is limited to " +
                          std::to_string(cap) + " routers, graph has " +
                          std::to_string(n));
  }
  LinkageMatrix matrix(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const double w = weighted.fused(e);
    matrix.at(edge.u, edge.v) = std::max(matrix.at(edge.u, edge.v), w);
    matrix.at(edge.v, edge.u) = matrix.at(edge.u, edge.v);
  }
  for (std::size_t i = 0; i < n; ++i) matrix.refresh_row(i);

  Dendrogram dend;
  dend.leaf_count = n;
  std::vector<std::uint32_t> cluster_id(n);
  for (std::size_t i = 0; i < n; ++i) cluster_id[i] = static_cast<std::uint32_t>(i);
  std::size_t lo = 0;
  std::size_t hi = 0;
  while (matrix.pick(lo, hi)) {
    dend.merges.push_back({cluster_id[lo], cluster_id[hi], matrix.at(lo, hi)});
    matrix.merge(lo, hi);
    cluster_id[lo] = static_cast<std::uint32_t>(n + dend.merges.size() - 1);
  }
  return dend;
}

double modularity(const RouterGraph& graph, const Partition& partition) {
  return q_of(graph, partition, {});
}

double weighted_modularity(const WeightedGraph& weighted,
                           const Partition& partition) {
  std::vector<double> w(weighted.graph().edge_count());
  for (EdgeId e = 0; e < w.size(); ++e) w[e] = weighted.fused(e);
  return q_of(weighted.graph(), partition, w);
}

Partition partition_at_level(const Dendrogram& dendrogram, std::size_t merges) {
  const std::size_t n = dendrogram.leaf_count;
  if (merges > dendrogram.merges.size()) {
    throw ValidationError("dendrogram level out of range");
  }
  // Union-find over leaves and internal nodes.
  UnionFind uf(n + dendrogram.merges.size());
  for (std::size_t k = 0; k < merges; ++k) {
    const Merge& m = dendrogram.merges[k];
    const auto id = static_cast<std::uint32_t>(n + k);
    uf.parent[uf.find(m.left)] = id;
    uf.parent[uf.find(m.right)] = id;
  }
  Partition p;
  p.community.resize(n);
  std::map<std::uint32_t, std::uint32_t> dense;
  for (std::size_t r = 0; r < n; ++r) {
    auto [it, inserted] = dense.emplace(uf.find(static_cast<std::uint32_t>(r)), p.count);
    if (inserted) ++p.count;
    p.community[r] = it->second;
  }
  return p;
}

Cut best_cut(const Dendrogram& dendrogram, const WeightedGraph& weighted,
             ModularityKind kind) {
  const RouterGraph& g = weighted.graph();
  const std::size_t n = g.router_count();
  if (dendrogram.leaf_count != n) {
    throw ValidationError("dendrogram was not built from this graph");
  }
  double m = 0.0;
  const std::vector<double> mass = node_mass(weighted, kind, m);

  // Incremental Q: merging A and B adds e_AB/m - 2 d_A d_B / (2m)^2.
  const std::size_t total = n + dendrogram.merges.size();
  std::vector<std::vector<RouterId>> members(total);
  std::vector<double> cluster_mass(total, 0.0);
  std::vector<std::uint32_t> label(n);
  double q = 0.0;
  for (RouterId r = 0; r < n; ++r) {
    members[r] = {r};
    cluster_mass[r] = mass[r];
    label[r] = r;
    if (m > 0.0) q -= (mass[r] / (2.0 * m)) * (mass[r] / (2.0 * m));
  }
  std::size_t best_level = 0;
  double best_q = m > 0.0 ? q : 0.0;
  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    const Merge& mg = dendrogram.merges[k];
    std::uint32_t small = mg.left;
    std::uint32_t large = mg.right;
    if (members[small].size() > members[large].size()) std::swap(small, large);
    double between = 0.0;
    for (RouterId r : members[small]) {
      const auto nbrs = g.neighbors(r);
      const auto eids = g.incident_edges(r);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (label[nbrs[i]] != large) continue;
        between += kind == ModularityKind::kWeighted ? weighted.fused(eids[i]) : 1.0;
      }
    }
    if (m > 0.0) {
      q += between / m -
           2.0 * cluster_mass[small] * cluster_mass[large] / (4.0 * m * m);
    }
    const auto id = static_cast<std::uint32_t>(n + k);
    members[id] = std::move(members[large]);
    members[id].insert(members[id].end(), members[small].begin(),
                       members[small].end());
    members[small].clear();
    members[small].shrink_to_fit();
    for (RouterId r : members[id]) label[r] = id;
    cluster_mass[id] = cluster_mass[small] + cluster_mass[large];
    if (q > best_q + kTieTolerance || std::abs(q - best_q) <= kTieTolerance) {
      best_q = std::max(q, best_q);
      best_level = k + 1;
    }
  }
  Cut cut;
  cut.merges = best_level;
  cut.partition = partition_at_level(dendrogram, best_level);
  cut.modularity = best_q;
  return cut;
}

Assignment oracle_assign(const Partition& partition, const SeedSet& seeds) {
  const std::size_t n = partition.community.size();
  if (seeds.as_of.size() != n) {
    throw ValidationError("seed set does not match the partition");
  }
  std::vector<std::map<AsNumber, std::size_t>> votes(partition.count);
  for (RouterId r = 0; r < n; ++r) {
    if (seeds.as_of[r]) ++votes[partition.community[r]][*seeds.as_of[r]];
  }
  std::vector<std::optional<AsNumber>> winner(partition.count);
  for (std::uint32_t c = 0; c < partition.count; ++c) {
    std::size_t top = 0;
    for (const auto& [as, count] : votes[c]) {  // ascending ASN
      if (count > top) {
        top = count;
        winner[c] = as;
      }
    }
  }
  Assignment out(n);
  for (RouterId r = 0; r < n; ++r) {
    if (seeds.as_of[r]) {
      out.set(r, *seeds.as_of[r], Provenance::kSeed);
    } else if (const auto& as = winner[partition.community[r]]) {
      out.set(r, *as, Provenance::kChained);
    }
  }
  return out;
}

}  // namespace rtas
