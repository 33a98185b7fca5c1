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

#ifndef RTAS_PREFIX_TABLE_HPP_
#define RTAS_PREFIX_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rtas/model.hpp"

namespace rtas {

// IPv4 prefix -> origin AS table with longest-prefix match, backed by a
// binary trie. The first ASN inserted for a prefix wins; later conflicting
// inserts only bump conflicts().
class PrefixTable {
 public:
  PrefixTable();

  // Host bits beyond `length` are ignored.
  void insert(Ipv4 prefix, int length, AsNumber as);
  std::optional<AsNumber> lookup(Ipv4 addr) const;

  std::size_t size() const { return entries_; }
  std::size_t duplicates() const { return duplicates_; }
  std::size_t conflicts() const { return conflicts_; }

 private:
  struct Node {
    std::uint32_t child[2] = {0, 0};  // 0 = none; the root is never a child
    std::uint32_t as = 0;             // 0 = no prefix ends here
  };

  std::vector<Node> nodes_;
  std::size_t entries_ = 0;
  std::size_t duplicates_ = 0;
  std::size_t conflicts_ = 0;
};

// Convenience for callers that only hold the table.
inline std::optional<AsNumber> lpm_lookup(const PrefixTable& table,
                                          Ipv4 addr) {
  return table.lookup(addr);
}

}  // namespace rtas

#endif  // RTAS_PREFIX_TABLE_HPP_
