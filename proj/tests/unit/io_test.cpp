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

#include <gtest/gtest.h>

#include <sstream>

#include "rtas/method_spec.hpp"
#include "rtas/tsv_io.hpp"
#include "support.hpp"

namespace rtas {
namespace {

TEST(MethodSpec, ParseFormatRoundTrip) {
  for (MetricFamily f : kAllMetricFamilies) {
    for (NeighborMode m : {NeighborMode::kPlain, NeighborMode::kGeneralized}) {
      for (FusionOp op : kAllFusionOps) {
        for (WeightMode w : kAllWeightModes) {
          MethodSpec s;
          s.weights.metric = {f, m};
          s.weights.fusion = op;
          s.weights.mode = w;
          EXPECT_EQ(parse_method(format_method(s)), s);
        }
      }
    }
  }
  EXPECT_EQ(parse_method("election-degree").kind, MethodSpec::Kind::kElectionDegree);
  EXPECT_EQ(format_method(parse_method("fhc:ra:gen:plus:fused")), "fhc:ra:gen:plus:fused");
}

TEST(MethodSpec, UnknownTokensAreValidationErrors) {
  for (const char* bad : {"", "fhc", "fhc:ra:gen:plus", "fhc:katz:gen:plus:fused",
                          "fhc:ra:both:plus:fused", "fhc:ra:gen:avg:fused",
                          "fhc:ra:gen:plus:all", "xyz:ra:gen:plus:fused",
                          "fhc:ra:gen:plus:fused:extra"}) {
    EXPECT_THROW(parse_method(bad), ValidationError) << bad;
  }
}

TEST(MethodSpec, GrammarHelpListsClosedSets) {
  const std::string help = method_grammar_help();
  for (MetricFamily f : kAllMetricFamilies) {
    EXPECT_NE(help.find(metric_name(f)), std::string::npos);
  }
  for (FusionOp op : kAllFusionOps) EXPECT_NE(help.find(fusion_name(op)), std::string::npos);
  for (WeightMode w : kAllWeightModes) {
    EXPECT_NE(help.find(weight_mode_name(w)), std::string::npos);
  }
}

TEST(AssignmentTsv, RoundTrip) {
  Assignment a(4);
  a.set(0, AsNumber(10), Provenance::kSeed);
  a.set(1, AsNumber(20), Provenance::kChained);
  a.set(2, AsNumber(30), Provenance::kDegree);
  std::stringstream buf;
  write_assignment_tsv(buf, a);
  EXPECT_EQ(buf.str(), "0\t10\tseed\n1\t20\tchained\n2\t30\tdegree\n3\t-\tunassigned\n");
  EXPECT_EQ(read_assignment_tsv(buf, 4), a);
}

TEST(AssignmentTsv, RejectsBadRows) {
  for (const char* bad : {"0\t10\tseed\n", "0\t10\tseed\n1\t-\tchained\n",
                          "0\t10\tseed\n0\t10\tseed\n", "0\t10\tbogus\n1\t1\tseed\n",
                          "0\tx\tseed\n1\t1\tseed\n", "0\t10\tseed\n5\t1\tseed\n"}) {
    std::stringstream in(bad);
    EXPECT_THROW(read_assignment_tsv(in, 2), IoError) << bad;
  }
}

TEST(WeightsTsv, RowsPerEdge) {
  WeightConfig c;
  c.mode = WeightMode::kPortOnly;
  auto w = build_weighted_graph(testing::two_router_fixture(), c);
  std::stringstream buf;
  write_weights_tsv(buf, w);
  EXPECT_EQ(buf.str(), "0\t1\t0.25\t0\t0.25\n");
}

TEST(RunMethod, BaselineAndFhc) {
  auto g = testing::two_triangle_fixture();
  auto base = run_method(g, parse_method("election-degree"));
  EXPECT_EQ(base[0].provenance, Provenance::kElection);
  auto fhc = run_method(g, parse_method("fhc:ra:gen:plus:fused"));
  EXPECT_EQ(fhc.size(), 6u);
  EXPECT_EQ(fhc.unassigned_count(), 0u);
}

}  // namespace
}  // namespace rtas
