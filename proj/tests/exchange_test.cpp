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

#include "matroid/exchange.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "matroid/generate.hpp"
#include "matroid/reference_oracles.hpp"
#include "matroid/zoo.hpp"
#include "test_util.hpp"

namespace matroid {
namespace {

using ::matroid::testing::Set;

Matroid U12() { return Uniform(2, 1, {"a", "b"}); }

TEST(ExchangeTest, SingleLinkChain) {
  const Matroid m = U12();
  const PairState state{Set(m, {"a"}), Set(m, {})};
  const auto chain = FindChain(m, m, state, 1);
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->elements, std::vector<int>({1, 0}));
  EXPECT_EQ(chain->parity, Parity::kEven);
  ASSERT_EQ(chain->circuits.size(), 1u);
  EXPECT_EQ(chain->circuits[0], m.ground().All());
  EXPECT_EQ(chain->StepSide(1), Side::kSecond);
  EXPECT_TRUE(ValidateChain(m, m, state, *chain).ok);

  const PairState next = ApplyChain(m, m, state, *chain);
  EXPECT_EQ(next.first, Set(m, {"b"}));
  EXPECT_EQ(next.second, Set(m, {"a"}));
  EXPECT_EQ(next.Union(), m.ground().All());
}

TEST(ExchangeTest, DirectAdditionIsLengthZero) {
  const Matroid m = Uniform(3, 2);
  const PairState empty{m.ground().None(), m.ground().None()};
  const auto chain = FindChain(m, m, empty, 2);
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->length(), 0);
  EXPECT_EQ(chain->parity, Parity::kEven);
  EXPECT_EQ(ApplyChain(m, m, empty, *chain).first, ElementSet(3, {2}));
}

TEST(ExchangeTest, FallsBackToOddChain) {
  const Matroid loops = RankZero(2, {"a", "b"});
  const Matroid free = FreeMatroid(2, {"a", "b"});
  const PairState empty{loops.ground().None(), loops.ground().None()};
  const auto chain = FindChain(loops, free, empty, 0);
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->parity, Parity::kOdd);
  EXPECT_EQ(ApplyChain(loops, free, empty, *chain).second, Set(free, {"a"}));
}

TEST(ExchangeTest, LoopInBothHasNoChain) {
  const Matroid m = RankZero(1, {"a"});
  EXPECT_FALSE(FindChain(m, m, PairState{m.ground().None(), m.ground().None()}, 0).has_value());
}

TEST(ExchangeTest, RejectsStartInsideUnion) {
  const Matroid m = U12();
  EXPECT_THROW(FindChain(m, m, PairState{Set(m, {"a"}), Set(m, {})}, 0), InputError);
}

TEST(ExchangeTest, ReplayingAChainIsAConsistencyError) {
  const Matroid m = U12();
  const PairState state{Set(m, {"a"}), Set(m, {})};
  const auto chain = FindChain(m, m, state, 1);
  ASSERT_TRUE(chain.has_value());
  const PairState next = ApplyChain(m, m, state, *chain);
  EXPECT_THROW(ApplyChain(m, m, next, *chain), ConsistencyError);
}

TEST(ExchangeTest, TamperedWitnessIsRejected) {
  const Matroid m = Graphic(testing::Triangle());
  const PairState state{Set(m, {"e1", "e2"}), m.ground().None()};
  const Matroid free = FreeMatroid(3, {"e1", "e2", "e3"});
  const auto chain = FindChain(m, free, state, 2);
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->elements, std::vector<int>({2, 0}));
  ExchangeChain tampered = *chain;
  tampered.circuits[0] = Set(m, {"e1", "e3"});
  EXPECT_FALSE(ValidateChain(m, free, state, tampered).ok);
  EXPECT_THROW(ApplyChain(m, free, state, tampered), ConsistencyError);
}

TEST(ExchangeTest, TwoSpanningTreesOfK4) {
  const Matroid k4 = Graphic(testing::K4());
  const PairState bases = MaximizeUnion(k4, k4);
  EXPECT_EQ(bases.Union().size(), 6);
  EXPECT_EQ(bases.first.size(), 3);
  EXPECT_EQ(bases.second.size(), 3);
  EXPECT_EQ(reference::BruteUnionMax(k4, k4), 6);
}

TEST(ExchangeTest, RankZeroPartnerGivesBaseOfFirst) {
  const Matroid triangle = Graphic(testing::Triangle());
  const PairState bases = MaximizeUnion(triangle, RankZero(3, {"e1", "e2", "e3"}));
  EXPECT_EQ(bases.Union(), Set(triangle, {"e1", "e2"}));
  EXPECT_TRUE(bases.second.empty());
}

TEST(ExchangeTest, UnionIsMaximumAndEveryStepGrowsByOne) {
  generate::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto [a, b] = generate::RandomPair(rng, 7);
    const Matroid m1 = Build(*a);
    const Matroid m2 = AlignTo(Build(*b), m1.ground());
    int steps = 0;
    const PairState result = MaximizeUnion(m1, m2, [&](const Augmentation& aug) {
      ++steps;
      EXPECT_EQ(aug.after.Union().size(), aug.before.Union().size() + 1);
      EXPECT_TRUE(m1.IsIndependent(aug.after.first));
      EXPECT_TRUE(m2.IsIndependent(aug.after.second));
      for (int k = 0; k <= aug.chain.length(); ++k) {
        for (int l = k; l <= aug.chain.length(); ++l) {
          EXPECT_TRUE(ValidateChain(m1, m2, aug.before, aug.chain.Sub(k, l)).ok);
        }
      }
    });
    EXPECT_EQ(result.Union().size(), steps);
    EXPECT_EQ(result.Union().size(), reference::BruteUnionMax(m1, m2));
    EXPECT_EQ(result.first.size(), m1.FullRank());
    EXPECT_EQ(result.second.size(), m2.FullRank());
    EXPECT_EQ(MaximizeUnion(m1, m2), result);
  }
}

}  // namespace
}  // namespace matroid
