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

#include "matroid/menger.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "matroid/circuits.hpp"
#include "matroid/generate.hpp"
#include "matroid/reference_oracles.hpp"
#include "test_util.hpp"

namespace matroid {
namespace {

using ::matroid::testing::Set;

MengerInstance Path3Instance() { return MakeInstance(testing::Path3(), {0}, {2}); }

MengerInstance K22Instance() { return MakeInstance(testing::K22(), {0, 1}, {2, 3}); }

TEST(MengerReduceTest, PathGivesFreeMatroids) {
  const Reduction red = Reduce(Path3Instance());
  EXPECT_EQ(red.m_s.ground().labels(), std::vector<std::string>({"ab", "bc"}));
  EXPECT_TRUE(red.m_s.IsIndependent(red.m_s.ground().All()));
  EXPECT_TRUE(red.m_t.IsIndependent(red.m_t.ground().All()));
  EXPECT_TRUE(red.inside_s.empty());
}

TEST(MengerReduceTest, MergedSideCreatesParallelPairs) {
  const Reduction red = Reduce(K22Instance());
  EXPECT_EQ(red.m_s.size(), 4);
  const auto circuits = Circuits(red.m_s);
  ASSERT_EQ(circuits.size(), 2u);
  EXPECT_EQ(circuits[0], Set(red.m_s, {"e1", "e3"}));
  EXPECT_EQ(circuits[1], Set(red.m_s, {"e2", "e4"}));
  EXPECT_EQ(Circuits(red.m_t)[0], Set(red.m_t, {"e1", "e2"}));
}

TEST(MengerReduceTest, InternalEdgesLeaveTheGround) {
  const Multigraph g = testing::Graph(
      {"s1", "s2", "m", "t"}, {{"ss", "s1", "s2"}, {"a", "s1", "m"}, {"b", "s2", "m"}, {"c", "m", "t"}});
  const Reduction red = Reduce(MakeInstance(g, {0, 1}, {3}));
  EXPECT_EQ(red.m_s.ground().labels(), std::vector<std::string>({"a", "b", "c"}));
  EXPECT_EQ(red.inside_s, Set(g.edge_ground(), {"ss"}));
  EXPECT_FALSE(red.m_s.IsIndependent(Set(red.m_s, {"a", "b"})));
  EXPECT_TRUE(red.m_t.IsIndependent(Set(red.m_t, {"a", "b"})));
}

TEST(MengerReduceTest, RejectsEmptySides) {
  EXPECT_THROW(MakeInstance(testing::Path3(), {}, {2}), InputError);
  EXPECT_THROW(MakeInstance(testing::Path3(), {0}, {}), InputError);
}

TEST(ForestStructureTest, PathComponent) {
  const MengerInstance inst = Path3Instance();
  const Reduction red = Reduce(inst);
  const IntersectionCertificate cert = Certify(red.m_s, red.m_t);
  const int ne = inst.graph.edge_count();
  const ForestPartition fp = ForestStructure(inst, red.ToEdges(cert.common, ne),
                                             red.ToEdges(cert.j1, ne), red.ToEdges(cert.j2, ne));
  ASSERT_EQ(fp.components.size(), 1u);
  const ForestComponent& c = fp.components[0];
  EXPECT_EQ(c.path, std::vector<int>({0, 1, 2}));
  // The pivot ends the initial run of the path that avoids J_T; on this
  // graph edge i joins path[i] and path[i + 1].
  int expected = c.path[0];
  for (int i = 0; i + 1 < static_cast<int>(c.path.size()); ++i) {
    if (fp.j_t.contains(i)) break;
    expected = c.path[i + 1];
  }
  EXPECT_EQ(c.pivot, expected);
  EXPECT_EQ(fp.k_s | fp.k_t, fp.common);
  EXPECT_FALSE(fp.k_s.Intersects(fp.k_t));

  const MengerCertificate result = SeparatorFromPartition(inst, fp);
  EXPECT_EQ(result.paths, std::vector<std::vector<int>>({{0, 1, 2}}));
  EXPECT_EQ(result.separator, std::vector<int>({c.pivot}));
}

TEST(ForestStructureTest, ComponentMeetingOnlySGoesToKs) {
  const Multigraph g = testing::Graph({"s", "a", "t"}, {{"sa", "s", "a"}, {"st", "s", "t"}});
  const MengerInstance inst = MakeInstance(g, {0}, {2});
  const ElementSet sa = Set(g.edge_ground(), {"sa"});
  const ForestPartition fp = ForestStructure(inst, sa, sa, ElementSet(2));
  EXPECT_EQ(fp.k_s, sa);
  EXPECT_TRUE(fp.k_t.empty());
}

TEST(ForestStructureTest, RejectsCycles) {
  const Multigraph t = testing::Triangle();
  const MengerInstance inst = MakeInstance(t, {0}, {1});
  const ElementSet all = t.edge_ground().All();
  EXPECT_THROW(ForestStructure(inst, all, all, ElementSet(3)), ConsistencyError);
}

TEST(MengerSolveTest, Examples) {
  const MengerCertificate path = SolveMenger(Path3Instance());
  EXPECT_EQ(path.paths.size(), 1u);
  EXPECT_EQ(path.separator.size(), 1u);

  const MengerCertificate k22 = SolveMenger(K22Instance());
  EXPECT_EQ(k22.paths.size(), 2u);
  EXPECT_EQ(k22.separator.size(), 2u);

  const MengerCertificate same = SolveMenger(MakeInstance(testing::Triangle(), {0}, {0}));
  EXPECT_EQ(same.paths, std::vector<std::vector<int>>({{0}}));
  EXPECT_EQ(same.separator, std::vector<int>({0}));

  const Multigraph g = testing::Graph({"v", "a", "b"}, {{"va", "v", "a"}});
  const MengerCertificate peeled = SolveMenger(MakeInstance(g, {0, 2}, {0}));
  EXPECT_EQ(peeled.paths, std::vector<std::vector<int>>({{0}}));
  EXPECT_EQ(peeled.separator, std::vector<int>({0}));

  const Multigraph apart = testing::Graph({"s", "t"}, {});
  EXPECT_TRUE(SolveMenger(MakeInstance(apart, {0}, {1})).paths.empty());
}

TEST(MengerVerifyTest, TamperedCertificatesFail) {
  const MengerInstance inst = K22Instance();
  const MengerCertificate good = SolveMenger(inst);
  ASSERT_TRUE(VerifyMenger(inst, good).ok);

  MengerCertificate dropped = good;
  dropped.separator.pop_back();
  EXPECT_EQ(VerifyMenger(inst, dropped).reason, "not separating");

  MengerCertificate duplicated = good;
  duplicated.paths.push_back(good.paths[0]);
  EXPECT_EQ(VerifyMenger(inst, duplicated).reason, "paths not disjoint");

  MengerCertificate off_path = good;
  off_path.paths.pop_back();
  EXPECT_FALSE(VerifyMenger(inst, off_path).ok);

  MengerCertificate broken = good;
  broken.paths[0] = {0, 1};
  EXPECT_FALSE(VerifyMenger(inst, broken).ok);
}

TEST(MengerSolveTest, RandomInstancesMatchFlow) {
  generate::Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const MengerInstance inst = generate::RandomMengerInstance(rng);
    const MengerCertificate cert = SolveMenger(inst);
    const int flow = reference::BruteMaxDisjointPaths(inst.graph, inst.s, inst.t);
    ASSERT_EQ(static_cast<int>(cert.paths.size()), flow);
    ASSERT_EQ(cert.separator.size(), cert.paths.size());
    ASSERT_EQ(reference::BruteMinSeparatorSize(inst.graph, inst.s, inst.t), flow);
    ASSERT_TRUE(VerifyMenger(inst, cert).ok);
    ASSERT_EQ(SolveMenger(inst), cert);
  }
}

}  // namespace
}  // namespace matroid
