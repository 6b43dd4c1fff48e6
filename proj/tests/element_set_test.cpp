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

#include "matroid/element_set.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "matroid/error.hpp"

namespace matroid {
namespace {

TEST(ElementSetTest, InsertEraseAndMembership) {
  ElementSet s(5);
  EXPECT_TRUE(s.empty());
  s.insert(3);
  s.insert(1);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
  s.erase(1);
  EXPECT_EQ(s.ToVector(), std::vector<int>({3}));
}

TEST(ElementSetTest, IteratesInIncreasingOrder) {
  ElementSet s(70, {65, 2, 40, 0});
  EXPECT_EQ(s.ToVector(), std::vector<int>({0, 2, 40, 65}));
  EXPECT_EQ(s.First(), 0);
  EXPECT_EQ(ElementSet(70).First(), -1);
}

TEST(ElementSetTest, AlgebraMatchesMasks) {
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const ElementSet x = ElementSet::FromMask(4, a);
      const ElementSet y = ElementSet::FromMask(4, b);
      EXPECT_EQ((x | y).ToMask(), a | b);
      EXPECT_EQ((x & y).ToMask(), a & b);
      EXPECT_EQ((x - y).ToMask(), a & ~b);
      EXPECT_EQ(x.IsSubsetOf(y), (a & ~b) == 0);
      EXPECT_EQ(x.Intersects(y), (a & b) != 0);
      EXPECT_EQ(x.Complement().ToMask(), ~a & 15);
    }
  }
}

TEST(ElementSetTest, RejectsOutOfRangeAndMixedUniverses) {
  ElementSet s(3);
  EXPECT_THROW(s.insert(3), InputError);
  EXPECT_THROW(s.insert(-1), InputError);
  EXPECT_THROW(ElementSet::FromMask(3, 8), InputError);
  EXPECT_THROW(s |= ElementSet(4), InputError);
}

TEST(ElementSetTest, CanonicalOrderIsSizeThenLex) {
  const ElementSet ab(4, {0, 1});
  const ElementSet ad(4, {0, 3});
  const ElementSet c(4, {2});
  EXPECT_TRUE(CanonicalLess(c, ab));
  EXPECT_TRUE(CanonicalLess(ab, ad));
  EXPECT_FALSE(CanonicalLess(ad, ab));
  EXPECT_TRUE(LexLess(ab, c));
  EXPECT_TRUE(LexLess(ElementSet(4, {0}), ab));
}

}  // namespace
}  // namespace matroid
