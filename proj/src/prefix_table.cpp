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

#include "rtas/prefix_table.hpp"

namespace rtas {

PrefixTable::PrefixTable() : nodes_(1) {}

void PrefixTable::insert(Ipv4 prefix, int length, AsNumber as) {
  if (length < 0 || length > 32) {
    throw ValidationError("prefix length out of range");
  }
  if (as.value == 0) throw ValidationError("AS number must be >= 1");
  std::uint32_t node = 0;
  for (int bit = 0; bit < length; ++bit) {
    const unsigned dir = (prefix.value >> (31 - bit)) & 1u;
    if (nodes_[node].child[dir] == 0) {
      nodes_[node].child[dir] = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    node = nodes_[node].child[dir];
  }
  Node& n = nodes_[node];
  if (n.as == 0) {
    n.as = as.value;
    ++entries_;
  } else if (n.as == as.value) {
    ++duplicates_;
  } else {
    ++conflicts_;
  }
}

std::optional<AsNumber> PrefixTable::lookup(Ipv4 addr) const {
  std::uint32_t node = 0;
  std::uint32_t best = nodes_[0].as;
  for (int bit = 0; bit < 32; ++bit) {
    const unsigned dir = (addr.value >> (31 - bit)) & 1u;
    node = nodes_[node].child[dir];
    if (node == 0) break;
    if (nodes_[node].as != 0) best = nodes_[node].as;
  }
  if (best == 0) return std::nullopt;
  return AsNumber(best);
}

}  // namespace rtas
