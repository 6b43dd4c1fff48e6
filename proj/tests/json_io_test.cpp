// Copyright 2026 The Authors.
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

#include "matroid/json_io.hpp"

#include <string>

#include "gtest/gtest.h"
#include "matroid/generate.hpp"
#include "test_util.hpp"

namespace matroid::json_io {
namespace {

using ::matroid::testing::Mask;

TEST(JsonIoTest, SpecsRoundTrip) {
  generate::Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    auto [a, b] = generate::RandomPair(rng, 6);
    const Json encoded = SpecToJson(*a);
    const FamilySpec decoded = SpecFromJson(Json::parse(encoded.dump()));
    EXPECT_EQ(SpecToJson(decoded), encoded);
    const Matroid original = Build(*a);
    const Matroid rebuilt = Build(decoded);
    ASSERT_EQ(rebuilt.ground(), original.ground());
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << original.size()); ++s) {
      ASSERT_EQ(rebuilt.IsIndependent(Mask(original.size(), s)),
                original.IsIndependent(Mask(original.size(), s)));
    }
  }
}

TEST(JsonIoTest, ParsesDocumentedEncodings) {
  const Matroid u = Build(SpecFromJson(Json::parse(R"({"type":"uniform","n":4,"k":2})")));
  EXPECT_EQ(u.FullRank(), 2);
  const Matroid minor = Build(SpecFromJson(Json::parse(R"({
      "type": "minor",
      "of": {"type": "graphic",
             "graph": {"vertices": ["a", "b", "c"], "edges": [["ab", "a", "b"], ["bc", "b", "c"]]}},
      "contract": [], "delete": ["bc"]})")));
  EXPECT_EQ(minor.ground().labels(), std::vector<std::string>({"ab"}));
  const Matroid sum = Build(SpecFromJson(Json::parse(R"({"type":"sum","parts":[
      {"type":"binary","matrix":[[1,1]],"labels":["p","q"]},
      {"type":"dual","of":{"type":"partition","blocks":[["r"]],"caps":[1]}}]})")));
  EXPECT_EQ(sum.ground().labels(), std::vector<std::string>({"p", "q", "r"}));
  EXPECT_EQ(sum.FullRank(), 1);
}

TEST(JsonIoTest, MalformedInputNamesTheLocation) {
  auto message = [](const char* text) {
    try {
      SpecFromJson(Json::parse(text));
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(message(R"({"type":"uniform","n":4})"), "matroid: missing field \"k\"");
  EXPECT_EQ(message(R"({"type":"cube"})"), "matroid: unknown matroid type \"cube\"");
  EXPECT_EQ(message(R"({"type":"partition","blocks":[["a",1]],"caps":[1]})"),
            "matroid.blocks[0][1]: expected a string");
  EXPECT_EQ(message(R"({"type":"graphic","graph":{"vertices":["a"],"edges":[["e","a","z"]]}})"),
            "matroid.graph.edges[0]: edge 'e' has a dangling endpoint");
}

TEST(JsonIoTest, CertificatesRoundTrip) {
  const GroundSet g({"a", "b", "c"});
  const IntersectionCertificate c{g.Parse(std::vector<std::string>{"a", "c"}),
                                  g.Parse(std::vector<std::string>{"c"}),
                                  g.Parse(std::vector<std::string>{"a"})};
  const Json j = CertificateToJson(g, c);
  EXPECT_EQ(j.dump(), R"({"I":["a","c"],"J1":["c"],"J2":["a"],"size":2})");
  const IntersectionCertificate back = CertificateFromJson(g, j);
  EXPECT_EQ(back.common, c.common);
  EXPECT_EQ(back.j1, c.j1);

  const MengerInstance inst = MakeInstance(testing::Path3(), {0}, {2});
  const MengerCertificate m{{{0, 1, 2}}, {1}};
  const Json mj = MengerToJson(inst.graph, m);
  EXPECT_EQ(mj.dump(), R"({"count":1,"paths":[["a","b","c"]],"separator":["b"]})");
  EXPECT_EQ(MengerFromJson(inst.graph, mj), m);
  const MengerInstance again = InstanceFromJson(InstanceToJson(inst));
  EXPECT_EQ(again.s, inst.s);
  EXPECT_EQ(again.graph.vertex_labels(), inst.graph.vertex_labels());
}

}  // namespace
}  // namespace matroid::json_io
