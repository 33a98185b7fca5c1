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

// Readers for ITDK-style topology files and IP/prefix -> AS tables, and the
// construction of the filtered router graph.
//
//   nodes:  node <token>: <ip> [<ip> ...]
//   links:  link <token>: <node>[:<ip>] <node>[:<ip>] [...]
//   ip2as:  <cidr-or-ip> <asn>
//   truth:  <ip> <asn>
//
// Blank lines and lines starting with '#' are ignored; CRLF is accepted.

#ifndef RTAS_INGEST_HPP_
#define RTAS_INGEST_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rtas/model.hpp"
#include "rtas/prefix_table.hpp"

namespace rtas {

struct NodeRecord {
  std::string token;
  std::vector<Ipv4> addrs;

  bool operator==(const NodeRecord&) const = default;
};

struct NodesFile {
  std::vector<NodeRecord> records;
  std::size_t malformed = 0;
};

struct LinkMember {
  std::string node;
  std::optional<Ipv4> addr;

  bool operator==(const LinkMember&) const = default;
};

struct LinkRecord {
  std::string token;
  std::vector<LinkMember> members;  // >= 2 distinct nodes
};

struct LinksFile {
  std::vector<LinkRecord> records;
  std::size_t malformed = 0;
  std::size_t degenerate = 0;  // fewer than two distinct member nodes
};

struct Ip2AsFile {
  PrefixTable table;
  std::size_t malformed = 0;
};

struct TruthFile {
  std::unordered_map<Ipv4, AsNumber> ip_to_as;
  std::size_t malformed = 0;
  std::size_t conflicts = 0;  // same IP listed with different ASNs; first wins
};

// Throws IoError when no valid record is found.
NodesFile parse_nodes(std::istream& in);
LinksFile parse_links(std::istream& in);
Ip2AsFile parse_ip2as(std::istream& in);
TruthFile parse_truth(std::istream& in);

// Orders tokens like N2 < N10: alphabetic prefix first, then the numeric
// suffix, then the raw string.
bool token_less(const std::string& a, const std::string& b);

struct BuildStats {
  std::size_t input_nodes = 0;
  std::size_t duplicate_tokens = 0;
  std::size_t duplicate_addrs = 0;
  std::size_t dropped_few_ports = 0;
  std::size_t dropped_isolated = 0;
  std::size_t link_members_unresolved = 0;
  std::size_t unannotated_ports = 0;
};

struct BuildResult {
  RouterGraph graph;
  BuildStats stats;
};

// Annotates interfaces by longest-prefix match, removes routers with fewer
// than `min_ports` interfaces, expands every link into a clique over its
// surviving members, drops degree-0 routers and re-indexes routers by
// ascending token. Throws ValidationError if the graph ends up empty.
BuildResult build_graph(const NodesFile& nodes, const LinksFile& links,
                        const PrefixTable& table, int min_ports = 2);

}  // namespace rtas

#endif  // RTAS_INGEST_HPP_
