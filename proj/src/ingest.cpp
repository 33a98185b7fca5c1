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

#include "rtas/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string_view>
#include <unordered_set>

namespace rtas {
namespace {

// Calls `fn` with each non-blank, non-comment line, CR stripped.
template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    view.remove_prefix(first);
    if (view.front() == '#') continue;
    fn(view);
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Splits "<keyword> <token>: rest..." into token and remaining fields.
bool split_header(std::string_view line, std::string_view keyword,
                  std::string_view& token,
                  std::vector<std::string_view>& rest) {
  auto fields = split_ws(line);
  if (fields.size() < 2 || fields[0] != keyword) return false;
  std::size_t next = 2;
  token = fields[1];
  if (token.size() > 1 && token.back() == ':') {
    token.remove_suffix(1);
  } else if (fields.size() > 2 && fields[2] == ":") {
    next = 3;
  } else {
    return false;
  }
  if (token.empty() || token.find(':') != std::string_view::npos) return false;
  rest.assign(fields.begin() + static_cast<std::ptrdiff_t>(next), fields.end());
  return true;
}

std::optional<AsNumber> parse_asn(std::string_view text) {
  // Multi-origin sets such as "64500_64501" keep their first member.
  const auto cut = text.find_first_of("_,");
  if (cut != std::string_view::npos) text = text.substr(0, cut);
  std::uint32_t value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || p != text.data() + text.size() || value == 0) {
    return std::nullopt;
  }
  return AsNumber(value);
}

std::pair<std::string_view, std::uint64_t> token_key(std::string_view t) {
  std::size_t digits = t.size();
  while (digits > 0 && t[digits - 1] >= '0' && t[digits - 1] <= '9') --digits;
  std::uint64_t number = 0;
  if (digits < t.size() && t.size() - digits <= 18) {
    std::from_chars(t.data() + digits, t.data() + t.size(), number);
  }
  return {t.substr(0, digits), number};
}

}  // namespace

bool token_less(const std::string& a, const std::string& b) {
  auto ka = token_key(a);
  auto kb = token_key(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

NodesFile parse_nodes(std::istream& in) {
  NodesFile out;
  for_each_line(in, [&](std::string_view line) {
    std::string_view token;
    std::vector<std::string_view> rest;
    if (!split_header(line, "node", token, rest) || rest.empty()) {
      ++out.malformed;
      return;
    }
    NodeRecord rec{std::string(token), {}};
    for (std::string_view f : rest) {
      auto ip = parse_ipv4(f);
      if (!ip) {
        ++out.malformed;
        return;
      }
      rec.addrs.push_back(*ip);
    }
    out.records.push_back(std::move(rec));
  });
  if (out.records.empty()) {
    throw IoError("nodes input contains no valid 'node' record");
  }
  return out;
}

LinksFile parse_links(std::istream& in) {
  LinksFile out;
  for_each_line(in, [&](std::string_view line) {
    std::string_view token;
    std::vector<std::string_view> rest;
    if (!split_header(line, "link", token, rest)) {
      ++out.malformed;
      return;
    }
    LinkRecord rec{std::string(token), {}};
    for (std::string_view f : rest) {
      LinkMember m;
      const auto colon = f.find(':');
      if (colon == std::string_view::npos) {
        m.node = std::string(f);
      } else {
        m.node = std::string(f.substr(0, colon));
        m.addr = parse_ipv4(f.substr(colon + 1));
        if (!m.addr || m.node.empty()) {
          ++out.malformed;
          return;
        }
      }
      const bool repeated = std::any_of(
          rec.members.begin(), rec.members.end(),
          [&](const LinkMember& x) { return x.node == m.node; });
      if (!repeated) rec.members.push_back(std::move(m));
    }
    if (rec.members.size() < 2) {
      ++out.degenerate;
      return;
    }
    out.records.push_back(std::move(rec));
  });
  return out;
}

Ip2AsFile parse_ip2as(std::istream& in) {
  Ip2AsFile out;
  for_each_line(in, [&](std::string_view line) {
    auto fields = split_ws(line);
    if (fields.size() != 2) {
      ++out.malformed;
      return;
    }
    std::string_view pfx = fields[0];
    int length = 32;
    const auto slash = pfx.find('/');
    if (slash != std::string_view::npos) {
      auto len_text = pfx.substr(slash + 1);
      auto [p, ec] = std::from_chars(len_text.data(),
                                     len_text.data() + len_text.size(), length);
      if (ec != std::errc() || p != len_text.data() + len_text.size() ||
          length < 0 || length > 32) {
        ++out.malformed;
        return;
      }
      pfx = pfx.substr(0, slash);
    }
    auto ip = parse_ipv4(pfx);
    auto as = parse_asn(fields[1]);
    if (!ip || !as) {
      ++out.malformed;
      return;
    }
    out.table.insert(*ip, length, *as);
  });
  return out;
}

TruthFile parse_truth(std::istream& in) {
  TruthFile out;
  for_each_line(in, [&](std::string_view line) {
    auto fields = split_ws(line);
    if (fields.size() != 2) {
      ++out.malformed;
      return;
    }
    auto ip = parse_ipv4(fields[0]);
    auto as = parse_asn(fields[1]);
    if (!ip || !as) {
      ++out.malformed;
      return;
    }
    auto [it, inserted] = out.ip_to_as.emplace(*ip, *as);
    if (!inserted && it->second != *as) ++out.conflicts;
  });
  return out;
}

BuildResult build_graph(const NodesFile& nodes, const LinksFile& links,
                        const PrefixTable& table, int min_ports) {
  if (min_ports < 1) throw ValidationError("min_ports must be >= 1");
  BuildResult result;
  BuildStats& stats = result.stats;
  stats.input_nodes = nodes.records.size();

  // Deterministic order: ascending token. Duplicate tokens keep the first
  // record in file order; duplicate addresses keep their first owner.
  std::vector<std::size_t> order(nodes.records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return token_less(nodes.records[a].token, nodes.records[b].token);
  });

  std::vector<Router> candidates;
  std::unordered_set<Ipv4> seen_addrs;
  seen_addrs.reserve(nodes.records.size() * 2);
  std::string previous;
  bool have_previous = false;
  for (std::size_t idx : order) {
    const NodeRecord& rec = nodes.records[idx];
    if (have_previous && rec.token == previous) {
      ++stats.duplicate_tokens;
      continue;
    }
    previous = rec.token;
    have_previous = true;
    std::vector<Interface> itfs;
    itfs.reserve(rec.addrs.size());
    for (Ipv4 addr : rec.addrs) {
      if (!seen_addrs.insert(addr).second) {
        ++stats.duplicate_addrs;
        continue;
      }
      itfs.push_back({addr, table.lookup(addr)});
    }
    if (itfs.size() < static_cast<std::size_t>(min_ports)) {
      ++stats.dropped_few_ports;
      continue;
    }
    candidates.emplace_back(0, rec.token, std::move(itfs));
  }

  std::unordered_map<std::string, RouterId> index;
  index.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    index.emplace(candidates[i].token, static_cast<RouterId>(i));
  }

  std::vector<Edge> edges;
  std::vector<RouterId> members;
  for (const LinkRecord& link : links.records) {
    members.clear();
    for (const LinkMember& m : link.members) {
      auto it = index.find(m.node);
      if (it == index.end()) {
        ++stats.link_members_unresolved;
        continue;
      }
      members.push_back(it->second);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        edges.push_back({std::min(members[i], members[j]),
                         std::max(members[i], members[j])});
      }
    }
  }

  RouterGraph full = RouterGraph::build(std::move(candidates), std::move(edges));
  RouterGraph graph = drop_isolated(full);
  stats.dropped_isolated = full.router_count() - graph.router_count();
  if (graph.empty()) {
    throw ValidationError("router graph is empty after filtering");
  }
  for (const Router& r : graph.routers()) {
    for (const Interface& itf : r.interfaces) {
      if (!itf.origin_as) ++stats.unannotated_ports;
    }
  }
  result.graph = std::move(graph);
  return result;
}

}  // namespace rtas
