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

// Ground-truth resolution, accuracy scoring and the shuffle-robustness
// protocol.

#ifndef RTAS_EVAL_HPP_
#define RTAS_EVAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rtas/cluster.hpp"
#include "rtas/model.hpp"
#include "rtas/weights.hpp"

namespace rtas {

struct TruthCounters {
  std::size_t truth_ips = 0;
  std::size_t unmatched_ips = 0;   // step 1: IP on no router interface
  std::size_t candidates = 0;      // routers owning at least one truth IP
  std::size_t solo = 0;            // step 2: degree-0 routers
  std::size_t conflicting = 0;     // truth IPs disagree on the router's AS
  std::size_t missing_port_as = 0; // step 3: truth AS not among port ASes
};

struct GroundTruth {
  std::unordered_map<Ipv4, AsNumber> ip_to_as;
  // Ascending by router id.
  std::vector<std::pair<RouterId, AsNumber>> resolved;
  TruthCounters counters;

  std::optional<AsNumber> truth_of(RouterId r) const;
};

// candidates == solo + conflicting + missing_port_as + resolved.size().
// Throws ValidationError when no router survives.
GroundTruth resolve_ground_truth(const RouterGraph& graph,
                                 const std::unordered_map<Ipv4, AsNumber>& ip_as);

struct AccuracyResult {
  std::size_t total = 0;       // resolved ground-truth routers
  std::size_t correct = 0;
  std::size_t assigned = 0;    // truth routers with some AS
  std::size_t unassigned = 0;
  double accuracy = 0.0;       // correct / total; Unassigned is incorrect
};

AccuracyResult accuracy(const Assignment& assignment, const GroundTruth& truth);

// Sample standard deviation divided by sqrt(n).
double standard_error(std::span<const double> values);

struct EvalReport {
  std::string method;
  AccuracyResult result;  // default (ascending) processing order
  std::vector<double> shuffle_accuracies;
  double mean = 0.0;
  double std_error = 0.0;
};

// Runs assign_all on the default order and on `n_shuffles` orders drawn from
// `rng_seed`. Shuffle runs execute in parallel; results are order-stable.
EvalReport robustness(const WeightedGraph& weighted, const SeedSet& seeds,
                      const GroundTruth& truth, std::size_t n_shuffles,
                      std::uint64_t rng_seed);

}  // namespace rtas

#endif  // RTAS_EVAL_HPP_
