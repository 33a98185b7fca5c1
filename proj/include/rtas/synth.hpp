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

// Planted-partition router topologies with known home ASes, standing in for
// measured topology plus validation data.

#ifndef RTAS_SYNTH_HPP_
#define RTAS_SYNTH_HPP_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rtas/eval.hpp"
#include "rtas/model.hpp"

namespace rtas {

struct SynthConfig {
  std::uint32_t n_as = 100;
  std::uint32_t routers_per_as = 20;
  // Mean ports per router; each router gets 2 + Poisson(mean - 2) ports.
  double ports_per_router = 3.0;
  double p_in = 0.1;
  // Only between ASes adjacent in the backbone (ring plus n_as/2 chords).
  double p_out = 0.005;
  // Chance that a port carries a backbone neighbor's AS instead of home.
  double label_noise = 0.3;
  std::uint64_t rng_seed = 1;
};

// Throws ValidationError for invalid configs.
void validate(const SynthConfig& config);

struct SynthData {
  RouterGraph graph;         // degree-0 routers removed
  GroundTruth truth;         // home AS of every router
  std::vector<AsNumber> home;
};

// Port addresses are drawn from a /20 per AS (16.0.0.0 + a * 4096), the AS
// whose number the port carries. Deterministic in the config.
SynthData synth_generate(const SynthConfig& config);

// Writes nodes.txt, links.txt, ip2as.txt and truth.txt into `dir`: text
// inputs that `build` + `eval` turn back into the same graph and truth.
void write_synth_files(const SynthData& data, std::uint32_t n_as,
                       const std::filesystem::path& dir);

}  // namespace rtas

#endif  // RTAS_SYNTH_HPP_
