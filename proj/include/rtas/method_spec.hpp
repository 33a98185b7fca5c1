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

// Method names for the command line:
//
//   fhc:<metric>:<plain|gen>:<plus|times|max|min>:<port|sim|fused>
//   election-degree

#ifndef RTAS_METHOD_SPEC_HPP_
#define RTAS_METHOD_SPEC_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "rtas/model.hpp"
#include "rtas/weights.hpp"

namespace rtas {

struct MethodSpec {
  enum class Kind : std::uint8_t { kFastHierarchy, kElectionDegree };

  Kind kind = Kind::kFastHierarchy;
  WeightConfig weights;  // meaningful for kFastHierarchy only

  bool operator==(const MethodSpec&) const = default;
};

// Throws ValidationError naming the offending token.
MethodSpec parse_method(std::string_view text);
std::string format_method(const MethodSpec& spec);

// One line per closed set, for --help.
std::string method_grammar_help();

// Assignment for one method over the graph. `shuffle_seed` selects a
// shuffled processing order instead of ascending ids (fhc only).
Assignment run_method(const std::shared_ptr<const RouterGraph>& graph,
                      const MethodSpec& spec,
                      std::optional<std::uint64_t> shuffle_seed = std::nullopt);

}  // namespace rtas

#endif  // RTAS_METHOD_SPEC_HPP_
