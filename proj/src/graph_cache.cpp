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

#include "rtas/graph_cache.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace rtas {
namespace {

constexpr std::array<char, 8> kMagic = {'R', 'T', 'A', 'S', 'G', 'R', 'P', 'H'};

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFu);
  out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    throw IoError("graph cache truncated");
  }
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& in) {
  const std::uint64_t lo = get_u32(in);
  const std::uint64_t hi = get_u32(in);
  return lo | (hi << 32);
}

}  // namespace

void write_graph(std::ostream& out, const RouterGraph& graph) {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kGraphCacheVersion);
  put_u64(out, graph.router_count());
  for (const Router& r : graph.routers()) {
    put_u32(out, static_cast<std::uint32_t>(r.token.size()));
    out.write(r.token.data(), static_cast<std::streamsize>(r.token.size()));
    put_u32(out, static_cast<std::uint32_t>(r.interfaces.size()));
    for (const Interface& itf : r.interfaces) {
      put_u32(out, itf.addr.value);
      put_u32(out, itf.origin_as ? itf.origin_as->value : 0u);
    }
  }
  put_u64(out, graph.edge_count());
  for (const Edge& e : graph.edges()) {
    put_u32(out, e.u);
    put_u32(out, e.v);
  }
  if (!out) throw IoError("failed writing graph cache");
}

RouterGraph read_graph(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw IoError("not a router graph cache (bad magic)");
  }
  const std::uint32_t version = get_u32(in);
  if (version != kGraphCacheVersion) {
    throw IoError("unsupported graph cache version " + std::to_string(version));
  }
  const std::uint64_t n = get_u64(in);
  if (n > 0xFFFFFFFFull) throw IoError("graph cache router count too large");
  std::vector<Router> routers;
  routers.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint32_t len = get_u32(in);
    std::string token(len, '\0');
    if (len > 0 && !in.read(token.data(), len)) {
      throw IoError("graph cache truncated");
    }
    const std::uint32_t ports = get_u32(in);
    std::vector<Interface> itfs(ports);
    for (Interface& itf : itfs) {
      itf.addr = Ipv4(get_u32(in));
      const std::uint32_t asn = get_u32(in);
      if (asn != 0) itf.origin_as = AsNumber(asn);
    }
    routers.emplace_back(static_cast<RouterId>(i), std::move(token),
                         std::move(itfs));
  }
  const std::uint64_t m = get_u64(in);
  std::vector<Edge> edges(m);
  for (Edge& e : edges) {
    e.u = get_u32(in);
    e.v = get_u32(in);
    if (e.u >= n || e.v >= n) throw IoError("graph cache edge out of range");
  }
  return RouterGraph::build(std::move(routers), std::move(edges));
}

void save_graph(const std::filesystem::path& path, const RouterGraph& graph) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_graph(out, graph);
}

RouterGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_graph(in);
}

}  // namespace rtas
