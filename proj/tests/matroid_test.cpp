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

#include "matroid/matroid.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "matroid/zoo.hpp"
#include "test_util.hpp"

namespace matroid {
namespace {

using ::matroid::testing::BruteRank;
using ::matroid::testing::Mask;
using ::matroid::testing::Set;

Matroid U24() { return Uniform(4, 2, {"a", "b", "c", "d"}); }

std::vector<Matroid> SmallHandles() {
  const Matroid triangle = Graphic(testing::Triangle());
  const Matroid k4 = Graphic(testing::K4());
  return {U24(),
          triangle,
          k4,
          Dual(k4),
          Partition({{"a", "b", "c"}, {"d"}, {"e", "f"}}, {2, 0, 1}),
          Minor(k4, Set(k4, {"pq"}), Set(k4, {"rs"})),
          Dual(Minor(Uniform(6, 3), ElementSet(6, {5}), ElementSet(6, {0}))),
          Binary({{1, 0, 1, 1, 0}, {0, 1, 1, 0, 1}}, {"a", "b", "c", "d", "e"})};
}

TEST(MatroidTest, IndependenceExamples) {
  const Matroid u = U24();
  EXPECT_TRUE(u.IsIndependent(Set(u, {"a", "b"})));
  EXPECT_FALSE(u.IsIndependent(Set(u, {"a", "b", "c"})));
  const Matroid triangle = Graphic(testing::Triangle());
  EXPECT_FALSE(triangle.IsIndependent(triangle.ground().All()));
}

TEST(MatroidTest, RankExamples) {
  const Matroid triangle = Graphic(testing::Triangle());
  EXPECT_EQ(triangle.Rank(triangle.ground().All()), 2);
  EXPECT_EQ(U24().Rank(Set(U24(), {"a"})), 1);
  for (const auto& m : SmallHandles()) EXPECT_EQ(m.Rank(m.ground().None()), 0);
}

TEST(MatroidTest, RejectsForeignSets) {
  EXPECT_THROW(U24().IsIndependent(ElementSet(5)), InputError);
  EXPECT_THROW(U24().ground().Parse(std::vector<std::string>{"z"}), InputError);
}

TEST(MatroidTest, ClosureExamples) {
  const Matroid triangle = Graphic(testing::Triangle());
  EXPECT_EQ(Closure(triangle, Set(triangle, {"e1", "e2"})), triangle.ground().All());
  EXPECT_EQ(Closure(U24(), Set(U24(), {"a"})), Set(U24(), {"a"}));
  const Matroid loops = Partition({{"a", "b"}, {"c"}}, {1, 0});
  EXPECT_EQ(Closure(loops, loops.ground().None()), Set(loops, {"c"}));
}

TEST(MatroidTest, ClosureIsIdempotentAndMonotone) {
  for (const auto& m : SmallHandles()) {
    const std::uint64_t full = std::uint64_t{1} << m.size();
    for (std::uint64_t a = 0; a < full; ++a) {
      const ElementSet x = Mask(m.size(), a);
      const ElementSet cl = Closure(m, x);
      ASSERT_TRUE(x.IsSubsetOf(cl));
      ASSERT_EQ(Closure(m, cl), cl);
      ASSERT_EQ(m.Rank(cl), m.Rank(x));
      const ElementSet bigger = x.with(static_cast<int>(a % m.size()));
      ASSERT_TRUE(cl.IsSubsetOf(Closure(m, bigger)));
    }
  }
}

TEST(MatroidTest, FundamentalCircuitExamples) {
  const Matroid triangle = Graphic(testing::Triangle());
  EXPECT_EQ(FundamentalCircuit(triangle, Set(triangle, {"e1", "e2"}), triangle.ground().IndexOf("e3")),
            triangle.ground().All());
  const Matroid u23 = Uniform(3, 2, {"a", "b", "c"});
  EXPECT_EQ(FundamentalCircuit(u23, Set(u23, {"a", "b"}), 2), u23.ground().All());
  const Matroid block = Partition({{"a", "b"}}, {1});
  EXPECT_EQ(FundamentalCircuit(block, Set(block, {"a"}), 1), block.ground().All());
  EXPECT_THROW(FundamentalCircuit(U24(), Set(U24(), {"a"}), 1), NoCircuitError);
}

TEST(MatroidTest, FundamentalCircuitsAreMinimallyDependent) {
  for (const auto& m : SmallHandles()) {
    const ElementSet base = MaximalExtension(m, m.ground().None(), m.ground().All());
    for (int x : base.Complement()) {
      const ElementSet c = FundamentalCircuit(m, base, x);
      ASSERT_TRUE(c.contains(x));
      ASSERT_FALSE(m.IsIndependent(c));
      for (int e : c) ASSERT_TRUE(m.IsIndependent(c.without(e)));
    }
  }
}

TEST(MatroidTest, MaximalExtensionExamples) {
  const Matroid triangle = Graphic(testing::Triangle());
  EXPECT_EQ(MaximalExtension(triangle, triangle.ground().None(), triangle.ground().All()),
            Set(triangle, {"e1", "e2"}));
  const Matroid u13 = Uniform(3, 1, {"a", "b", "c"});
  EXPECT_EQ(MaximalExtension(u13, u13.ground().None(), u13.ground().All()), Set(u13, {"a"}));
  EXPECT_EQ(MaximalExtension(u13, Set(u13, {"c"}), u13.ground().All()), Set(u13, {"c"}));
  EXPECT_THROW(MaximalExtension(u13, Set(u13, {"a", "b"}), u13.ground().All()), InputError);
}

TEST(MatroidTest, DualExamples) {
  const Matroid d = Dual(Uniform(3, 1));
  const Matroid u23 = Uniform(3, 2);
  for (std::uint64_t a = 0; a < 8; ++a) {
    EXPECT_EQ(d.IsIndependent(Mask(3, a)), u23.IsIndependent(Mask(3, a)));
  }
  const Matroid dual_free = Dual(FreeMatroid(3));
  for (std::uint64_t a = 1; a < 8; ++a) EXPECT_FALSE(dual_free.IsIndependent(Mask(3, a)));
}

TEST(MatroidTest, MinorExamples) {
  const Matroid m = Minor(U24(), Set(U24(), {"a"}), U24().ground().None());
  EXPECT_EQ(m.ground().labels(), std::vector<std::string>({"b", "c", "d"}));
  EXPECT_EQ(m.FullRank(), 1);
  EXPECT_FALSE(m.IsIndependent(Set(m, {"b", "c"})));

  const Matroid path = Graphic(testing::Path3());
  const Matroid deleted = Minor(path, path.ground().None(), Set(path, {"bc"}));
  EXPECT_EQ(deleted.ground().labels(), std::vector<std::string>({"ab"}));
  EXPECT_TRUE(deleted.IsIndependent(deleted.ground().All()));

  EXPECT_THROW(Minor(U24(), Set(U24(), {"a"}), Set(U24(), {"a"})), InputError);
}

TEST(MatroidTest, RankAxiomsAndDualityHoldExhaustively) {
  for (const auto& m : SmallHandles()) {
    SCOPED_TRACE(m.provenance());
    const Matroid d = Dual(m);
    const Matroid dd = Dual(d);
    EXPECT_EQ(m.FullRank() + d.FullRank(), m.size());
    const std::uint64_t full = std::uint64_t{1} << m.size();
    for (std::uint64_t a = 0; a < full; ++a) {
      const ElementSet x = Mask(m.size(), a);
      const int r = m.Rank(x);
      ASSERT_EQ(r, BruteRank(m, x));
      ASSERT_LE(r, x.size());
      ASSERT_EQ(dd.IsIndependent(x), m.IsIndependent(x));
      for (std::uint64_t b = a; b < full; b += 3) {
        const ElementSet y = Mask(m.size(), b);
        ASSERT_LE(m.Rank(x | y) + m.Rank(x & y), r + m.Rank(y));
        if ((a & ~b) == 0) {
          ASSERT_LE(r, m.Rank(y));
        }
      }
    }
  }
}

TEST(MatroidTest, MinorRankIdentityHoldsExhaustively) {
  const Matroid k4 = Graphic(testing::K4());
  for (std::uint64_t c = 0; c < 64; c += 5) {
    for (std::uint64_t r = 0; r < 64; r += 7) {
      if (c & r) continue;
      const ElementSet contract = Mask(6, c);
      const ElementSet remove = Mask(6, r);
      const Matroid minor = Minor(k4, contract, remove);
      const std::uint64_t full = std::uint64_t{1} << minor.size();
      for (std::uint64_t a = 0; a < full; ++a) {
        const ElementSet x = Mask(minor.size(), a);
        ElementSet lifted = contract;
        for (int e : x) lifted.insert(k4.ground().IndexOf(minor.ground().label(e)));
        ASSERT_EQ(minor.Rank(x), k4.Rank(lifted) - k4.Rank(contract));
      }
    }
  }
}

TEST(MatroidTest, AlignToReordersGround) {
  const Matroid m = Partition({{"a", "c"}, {"b", "d"}}, {1, 1});
  const Matroid aligned = AlignTo(m, GroundSet({"a", "b", "c", "d"}));
  EXPECT_EQ(aligned.ground().labels(), std::vector<std::string>({"a", "b", "c", "d"}));
  EXPECT_FALSE(aligned.IsIndependent(Set(aligned, {"a", "c"})));
  EXPECT_TRUE(aligned.IsIndependent(Set(aligned, {"a", "b"})));
  EXPECT_THROW(AlignTo(m, GroundSet({"a", "b", "c", "z"})), InputError);
}

}  // namespace
}  // namespace matroid
