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

#include "matroid/reference_oracles.hpp"

#include <chrono>
#include <vector>

#include "gtest/gtest.h"
#include "matroid/generate.hpp"
#include "matroid/zoo.hpp"
#include "test_util.hpp"

namespace matroid::reference {
namespace {

using ::matroid::testing::Set;

TEST(ReferenceOraclesTest, MaxCommonIndependentExamples) {
  const Matroid m1 = testing::CrossingFirst();
  const MaxCommonResult crossing = BruteMaxCommonIndependent(m1, testing::CrossingSecond());
  EXPECT_EQ(crossing.size, 2);
  EXPECT_EQ(crossing.witness, Set(m1, {"a", "d"}));

  const MaxCommonResult none = BruteMaxCommonIndependent(m1, RankZero(4, {"a", "b", "c", "d"}));
  EXPECT_EQ(none.size, 0);
  EXPECT_TRUE(none.witness.empty());

  const Matroid u12 = Uniform(2, 1, {"a", "b"});
  const MaxCommonResult single = BruteMaxCommonIndependent(u12, u12);
  EXPECT_EQ(single.size, 1);
  EXPECT_EQ(single.witness, Set(u12, {"a"}));
}

TEST(ReferenceOraclesTest, MinRankFormulaExamples) {
  EXPECT_EQ(BruteMinRankFormula(testing::CrossingFirst(), testing::CrossingSecond()).value, 2);

  const Matroid k4 = Graphic(testing::K4());
  const MinRankResult same = BruteMinRankFormula(k4, k4);
  EXPECT_EQ(same.value, 3);
  EXPECT_TRUE(same.minimizer.empty());

  const MinRankResult zero = BruteMinRankFormula(RankZero(6, k4.ground().labels()), k4);
  EXPECT_EQ(zero.value, 0);
  EXPECT_EQ(zero.minimizer, k4.ground().All());
}

TEST(ReferenceOraclesTest, UnionMaxExamples) {
  const Matroid k4 = Graphic(testing::K4());
  EXPECT_EQ(BruteUnionMax(k4, k4), 6);
  const Matroid u12 = Uniform(2, 1);
  EXPECT_EQ(BruteUnionMax(u12, u12), 2);
  const Matroid triangle = Graphic(testing::Triangle());
  EXPECT_EQ(BruteUnionMax(triangle, RankZero(3, {"e1", "e2", "e3"})), 2);
}

TEST(ReferenceOraclesTest, DisjointPathExamples) {
  EXPECT_EQ(BruteMaxDisjointPaths(testing::Path3(), {0}, {2}), 1);
  EXPECT_EQ(BruteMaxDisjointPaths(testing::K22(), {0, 1}, {2, 3}), 2);
  const Multigraph apart = testing::Graph({"s", "m", "t"}, {{"sm", "s", "m"}});
  EXPECT_EQ(BruteMaxDisjointPaths(apart, {0}, {2}), 0);
  EXPECT_EQ(BruteMaxDisjointPaths(apart, {0, 2}, {2}), 1);
}

TEST(ReferenceOraclesTest, FlowAgreesWithExhaustiveSeparator) {
  generate::Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const MengerInstance inst = generate::RandomMengerInstance(rng);
    ASSERT_EQ(BruteMaxDisjointPaths(inst.graph, inst.s, inst.t),
              BruteMinSeparatorSize(inst.graph, inst.s, inst.t));
  }
}

TEST(ReferenceOraclesTest, BudgetsAreEnforced) {
  const Matroid big = FreeMatroid(11);
  EXPECT_THROW(BruteMaxCommonIndependent(big, big), CapacityError);
  EXPECT_THROW(BruteUnionMax(big, big), CapacityError);
  EXPECT_THROW(BruteMinRankFormula(big, big), CapacityError);
  EXPECT_THROW(BruteMaxCommonIndependent(FreeMatroid(2), FreeMatroid(3)), InputError);

  OracleBudget tight;
  tight.max_vertices = 2;
  EXPECT_THROW(BruteMaxDisjointPaths(testing::Path3(), {0}, {2}, tight), CapacityError);

  OracleBudget instant;
  instant.time_cap = std::chrono::milliseconds(-1);
  const Matroid k4 = Graphic(testing::K4());
  EXPECT_THROW(BruteMaxCommonIndependent(k4, k4, instant), CapacityError);
}

}  // namespace
}  // namespace matroid::reference
