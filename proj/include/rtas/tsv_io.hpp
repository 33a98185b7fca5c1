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

// Tab-separated outputs:
//
//   assignment: router_id \t asn \t provenance    ("-" for an absent AS)
//   weights:    src_id \t dst_id \t w_port \t w_sim \t w_fused   (%.12g)

#ifndef RTAS_TSV_IO_HPP_
#define RTAS_TSV_IO_HPP_

#include <istream>
#include <ostream>

#include "rtas/model.hpp"
#include "rtas/weights.hpp"

namespace rtas {

void write_assignment_tsv(std::ostream& out, const Assignment& assignment);
// Throws IoError on malformed rows or a row count other than router_count.
Assignment read_assignment_tsv(std::istream& in, std::size_t router_count);

// One row per edge, src_id < dst_id, ascending.
void write_weights_tsv(std::ostream& out, const WeightedGraph& weighted);

}  // namespace rtas

#endif  // RTAS_TSV_IO_HPP_
