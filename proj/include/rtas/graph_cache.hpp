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

// Binary router-graph snapshot. All integers little-endian.
//
//   magic    8 bytes  "RTASGRPH"
//   version  u32      kGraphCacheVersion
//   routers  u64      N
//   N times: token_len u32, token bytes, port_count u32,
//            port_count times: addr u32, origin_asn u32 (0 = unknown)
//   edges    u64      E
//   E times: u u32, v u32 (u < v, ascending)

#ifndef RTAS_GRAPH_CACHE_HPP_
#define RTAS_GRAPH_CACHE_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>

#include "rtas/model.hpp"

namespace rtas {

inline constexpr std::uint32_t kGraphCacheVersion = 1;

void write_graph(std::ostream& out, const RouterGraph& graph);
RouterGraph read_graph(std::istream& in);

void save_graph(const std::filesystem::path& path, const RouterGraph& graph);
RouterGraph load_graph(const std::filesystem::path& path);

}  // namespace rtas

#endif  // RTAS_GRAPH_CACHE_HPP_
