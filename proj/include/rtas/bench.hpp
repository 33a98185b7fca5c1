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

// Scaling sweep over synthetic graphs: times the serial and OpenMP weight
// kernels and the chained assignment, and fits the growth rates.

#ifndef RTAS_BENCH_HPP_
#define RTAS_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rtas/synth.hpp"

namespace rtas {

struct BenchPoint {
  std::size_t target_edges = 0;
  std::size_t routers = 0;
  std::size_t edges = 0;
  double weights_serial_s = 0.0;
  double weights_parallel_s = 0.0;
  double assign_s = 0.0;  // best of the repetitions
  std::size_t peak_aux_bytes = 0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// Ordinary least squares y = slope * x + intercept.
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

struct BenchReport {
  std::vector<BenchPoint> points;
  LinearFit time_loglog;     // log(assign_s) against log(edges)
  LinearFit memory_linear;   // peak_aux_bytes against routers + edges
  long max_rss_kb = 0;
};

// Synthetic config (50 routers per AS, ~211 edges per AS) sized to land near
// `target_edges` edges.
SynthConfig bench_config(std::size_t target_edges, std::uint64_t seed);

// Needs at least three sizes; throws ValidationError otherwise.
BenchReport run_bench(std::span<const std::size_t> target_edges,
                      std::uint64_t seed, int repetitions = 3);

}  // namespace rtas

#endif  // RTAS_BENCH_HPP_
