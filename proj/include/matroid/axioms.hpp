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

// Exhaustive evaluation of the independence axioms on explicit set systems.
//
//   (I1)  the empty set is independent;
//   (I2)  independent sets are closed under taking subsets;
//   (I3)  if |I| < |I'| then I + x is independent for some x in I' - I;
//   (I3m) if I is not maximal and I' is maximal, I + x is independent for
//         some x in I' - I (the form that also axiomatizes infinite matroids);
//   (IM)  for I ⊆ X with I independent, the independent sets between I and
//         X have a maximal element.
//
// On finite systems satisfying (I1) and (I2), (I3) and (I3m) agree and (IM)
// always holds; all of them are still evaluated literally.

#ifndef MATROID_AXIOMS_HPP_
#define MATROID_AXIOMS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matroid/element_set.hpp"
#include "matroid/error.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

inline constexpr int kAxiomCheckBound = 10;

class ExplicitSystem {
 public:
  ExplicitSystem() = default;
  ExplicitSystem(GroundSet ground, std::vector<ElementSet> members)
      : ground_(std::move(ground)), members_(std::move(members)) {
    for (const auto& s : members_) {
      if (s.universe() != ground_.size()) throw InputError("member over a different ground set");
    }
    std::sort(members_.begin(), members_.end(), CanonicalLess);
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw InputError("duplicate member in set system");
    }
  }

  const GroundSet& ground() const { return ground_; }
  // Canonically sorted (size, then lexicographic).
  const std::vector<ElementSet>& members() const { return members_; }
  bool Contains(const ElementSet& s) const {
    return std::binary_search(members_.begin(), members_.end(), s, CanonicalLess);
  }

 private:
  GroundSet ground_;
  std::vector<ElementSet> members_;
};

using SetPair = std::pair<ElementSet, ElementSet>;

struct AxiomReport {
  bool i1_ok = true;
  bool i2_ok = true;
  bool i3_ok = true;
  bool i3_maximal_ok = true;
  bool im_ok = true;

  std::optional<ElementSet> i1_witness;  // the missing empty set
  std::optional<SetPair> i2_witness;     // (member, missing subset)
  std::optional<SetPair> i3_witness;     // (I, I') with |I| < |I'| and no augmentation
  std::optional<SetPair> i3_maximal_witness;  // (non-maximal I, maximal I')
  std::optional<SetPair> im_witness;     // (I, X) without a maximal element between

  bool ok() const { return i1_ok && i2_ok && i3_ok && i3_maximal_ok && im_ok; }
};

// All independent subsets of m.
inline ExplicitSystem Materialize(const Matroid& m, int bound = kAxiomCheckBound) {
  if (m.size() > bound) throw CapacityError("ground set too large to materialize");
  const int n = m.size();
  std::vector<ElementSet> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet s = ElementSet::FromMask(n, mask);
    if (m.IsIndependent(s)) members.push_back(std::move(s));
  }
  return ExplicitSystem(m.ground(), std::move(members));
}

inline AxiomReport CheckAxioms(const ExplicitSystem& system) {
  const int n = system.ground().size();
  if (n > kAxiomCheckBound) {
    throw CapacityError("axiom check is exhaustive and limited to " +
                        std::to_string(kAxiomCheckBound) + " elements");
  }
  using Mask = std::uint32_t;
  std::vector<Mask> members;
  for (const auto& s : system.members()) members.push_back(static_cast<Mask>(s.ToMask()));
  std::unordered_set<Mask> lookup(members.begin(), members.end());
  auto has = [&](Mask s) { return lookup.count(s) > 0; };
  auto as_set = [n](Mask s) { return ElementSet::FromMask(n, s); };
  auto subset = [](Mask a, Mask b) { return (a & ~b) == 0; };

  AxiomReport report;

  if (!has(0)) {
    report.i1_ok = false;
    report.i1_witness = ElementSet(n);
  }

  // Witness: the first member with a missing subset, paired with its
  // largest missing subset (lexicographically least among those).
  for (Mask a : members) {
    std::optional<ElementSet> best;
    for (Mask b = a;; b = (b - 1) & a) {
      if (!has(b)) {
        ElementSet candidate = as_set(b);
        if (!best || candidate.size() > best->size() ||
            (candidate.size() == best->size() && LexLess(candidate, *best))) {
          best = std::move(candidate);
        }
      }
      if (b == 0) break;
    }
    if (best) {
      report.i2_ok = false;
      report.i2_witness = SetPair(as_set(a), *best);
      break;
    }
  }

  auto augmentable = [&](Mask i, Mask j) {
    for (Mask rest = j & ~i; rest != 0; rest &= rest - 1) {
      if (has(i | (rest & (~rest + 1)))) return true;
    }
    return false;
  };

  for (Mask i : members) {
    for (Mask j : members) {
      if (std::popcount(i) < std::popcount(j) && !augmentable(i, j)) {
        report.i3_ok = false;
        report.i3_witness = SetPair(as_set(i), as_set(j));
        break;
      }
    }
    if (!report.i3_ok) break;
  }

  std::vector<bool> maximal(members.size(), true);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (Mask b : members) {
      if (b != members[a] && subset(members[a], b)) {
        maximal[a] = false;
        break;
      }
    }
  }
  for (std::size_t a = 0; a < members.size() && report.i3_maximal_ok; ++a) {
    if (maximal[a]) continue;
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (maximal[b] && !augmentable(members[a], members[b])) {
        report.i3_maximal_ok = false;
        report.i3_maximal_witness = SetPair(as_set(members[a]), as_set(members[b]));
        break;
      }
    }
  }

  // Members are sorted by size, so scanning inside X from the largest down
  // finds a maximal element above I whenever one exists.
  for (Mask x = 0; x < (Mask{1} << n) && report.im_ok; ++x) {
    std::vector<Mask> inside;
    for (Mask s : members) {
      if (subset(s, x)) inside.push_back(s);
    }
    for (Mask i : inside) {
      bool found = false;
      for (auto it = inside.rbegin(); it != inside.rend(); ++it) {
        if (!subset(i, *it)) continue;
        bool dominated = false;
        for (Mask other : inside) {
          if (other != *it && subset(*it, other)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) {
          found = true;
          break;
        }
      }
      if (!found) {
        report.im_ok = false;
        report.im_witness = SetPair(as_set(i), as_set(x));
        break;
      }
    }
  }

  return report;
}

}  // namespace matroid

#endif  // MATROID_AXIOMS_HPP_
