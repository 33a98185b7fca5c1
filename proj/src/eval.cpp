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

#include "rtas/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include <omp.h>

namespace rtas {

std::optional<AsNumber> GroundTruth::truth_of(RouterId r) const {
  auto it = std::lower_bound(
      resolved.begin(), resolved.end(), r,
      [](const std::pair<RouterId, AsNumber>& p, RouterId id) { return p.first < id; });
  if (it == resolved.end() || it->first != r) return std::nullopt;
  return it->second;
}

GroundTruth resolve_ground_truth(const RouterGraph& graph,
                                 const std::unordered_map<Ipv4, AsNumber>& ip_as) {
  GroundTruth truth;
  truth.ip_to_as = ip_as;
  TruthCounters& c = truth.counters;
  c.truth_ips = ip_as.size();

  std::unordered_map<Ipv4, RouterId> owner;
  for (const Router& r : graph.routers()) {
    for (const Interface& itf : r.interfaces) owner.emplace(itf.addr, r.id);
  }

  // Step 1: routers owning a truth IP, with every truth AS they collect.
  std::map<RouterId, std::vector<AsNumber>> claims;
  for (const auto& [ip, as] : ip_as) {
    auto it = owner.find(ip);
    if (it == owner.end()) {
      ++c.unmatched_ips;
      continue;
    }
    claims[it->second].push_back(as);
  }
  c.candidates = claims.size();

  for (auto& [router, ases] : claims) {
    if (graph.degree(router) == 0) {  // step 2
      ++c.solo;
      continue;
    }
    std::sort(ases.begin(), ases.end());
    if (ases.front() != ases.back()) {
      ++c.conflicting;
      continue;
    }
    if (graph.router(router).frequency(ases.front()) == 0) {  // step 3
      ++c.missing_port_as;
      continue;
    }
    truth.resolved.emplace_back(router, ases.front());
  }
  if (truth.resolved.empty()) {
    throw ValidationError("no ground-truth router survives resolution");
  }
  return truth;
}

AccuracyResult accuracy(const Assignment& assignment, const GroundTruth& truth) {
  AccuracyResult res;
  res.total = truth.resolved.size();
  for (const auto& [router, as] : truth.resolved) {
    if (router >= assignment.size()) {
      throw ValidationError("ground truth references unknown router");
    }
    const AssignmentEntry& e = assignment[router];
    if (!e.as) {
      ++res.unassigned;
      continue;
    }
    ++res.assigned;
    if (*e.as == as) ++res.correct;
  }
  res.accuracy = res.total == 0 ? 0.0
                                : static_cast<double>(res.correct) / res.total;
  return res;
}

namespace {

// Shifted by the first value so identical inputs give an exact mean.
double shifted_mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double offset = 0.0;
  for (double v : values) offset += v - values.front();
  return values.front() + offset / static_cast<double>(values.size());
}

}  // namespace

double standard_error(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const double mean = shifted_mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(n - 1)) /
         std::sqrt(static_cast<double>(n));
}

EvalReport robustness(const WeightedGraph& weighted, const SeedSet& seeds,
                      const GroundTruth& truth, std::size_t n_shuffles,
                      std::uint64_t rng_seed) {
  if (n_shuffles < 2) throw ValidationError("robustness needs >= 2 shuffles");
  EvalReport report;
  report.result = accuracy(assign_all(weighted, seeds, default_order(seeds)), truth);

  std::mt19937_64 master(rng_seed);
  std::vector<std::uint64_t> run_seeds(n_shuffles);
  for (auto& s : run_seeds) s = master();
  report.shuffle_accuracies.assign(n_shuffles, 0.0);
  const auto runs = static_cast<std::int64_t>(n_shuffles);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < runs; ++i) {
    const auto order = shuffled_order(seeds, run_seeds[i]);
    report.shuffle_accuracies[i] =
        accuracy(assign_all(weighted, seeds, order), truth).accuracy;
  }
  report.mean = shifted_mean(report.shuffle_accuracies);
  report.std_error = standard_error(report.shuffle_accuracies);
  return report;
}

}  // namespace rtas
