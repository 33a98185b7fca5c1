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

#include "rtas/tsv_io.hpp"

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace rtas {
namespace {

template <typename T>
bool parse_uint(std::string_view s, T& value) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

void write_assignment_tsv(std::ostream& out, const Assignment& assignment) {
  for (RouterId r = 0; r < assignment.size(); ++r) {
    const AssignmentEntry& e = assignment[r];
    out << r << '\t';
    if (e.as) {
      out << e.as->value;
    } else {
      out << '-';
    }
    out << '\t' << provenance_name(e.provenance) << '\n';
  }
}

Assignment read_assignment_tsv(std::istream& in, std::size_t router_count) {
  Assignment out(router_count);
  std::vector<std::uint8_t> seen(router_count, 0);
  std::string line;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view v(line);
    const auto t1 = v.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : v.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw IoError("assignment line " + std::to_string(line_no) + " is malformed");
    }
    RouterId id = 0;
    std::uint32_t asn = 0;
    const auto as_text = v.substr(t1 + 1, t2 - t1 - 1);
    const auto prov = parse_provenance(v.substr(t2 + 1));
    const bool absent = as_text == "-";
    if (!parse_uint(v.substr(0, t1), id) || id >= router_count || seen[id] ||
        !prov || (!absent && (!parse_uint(as_text, asn) || asn == 0)) ||
        (absent != (*prov == Provenance::kUnassigned))) {
      throw IoError("assignment line " + std::to_string(line_no) + " is invalid");
    }
    seen[id] = 1;
    ++rows;
    if (!absent) out.set(id, AsNumber(asn), *prov);
  }
  if (rows != router_count) {
    throw IoError("assignment covers " + std::to_string(rows) + " of " +
                  std::to_string(router_count) + " routers");
  }
  return out;
}

void write_weights_tsv(std::ostream& out, const WeightedGraph& weighted) {
  const RouterGraph& g = weighted.graph();
  char buf[128];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const EdgeWeights& w = weighted.weights(e);
    std::snprintf(buf, sizeof(buf), "%u\t%u\t%.12g\t%.12g\t%.12g\n", edge.u,
                  edge.v, w.port, w.sim, w.fused);
    out << buf;
  }
}

}  // namespace rtas
