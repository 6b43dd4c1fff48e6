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

#ifndef MATROID_CIRCUITS_HPP_
#define MATROID_CIRCUITS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/element_set.hpp"
#include "matroid/error.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

inline void CheckEnumerationBound(int ground_size, int bound) {
  if (bound > 30) throw InputError("enumeration bound above 30 is not supported");
  if (ground_size > bound) {
    throw CapacityError("ground set of " + std::to_string(ground_size) +
                        " elements exceeds the enumeration bound " + std::to_string(bound));
  }
}

// All minimal dependent sets, sorted by size and then lexicographically.
inline std::vector<ElementSet> Circuits(const Matroid& m,
                                        int bound = kDefaultEnumerationBound) {
  CheckEnumerationBound(m.size(), bound);
  const int n = m.size();
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet c = ElementSet::FromMask(n, mask);
    if (m.IsIndependent(c)) continue;
    bool minimal = true;
    for (int e : c) {
      if (!m.IsIndependent(c.without(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

struct OrthogonalityReport {
  bool ok = true;
  // A circuit and a cocircuit meeting in exactly one element.
  std::optional<std::pair<ElementSet, ElementSet>> counterexample;
};

// Checks |C ∩ D| != 1 for every circuit C of m and every circuit D of its dual.
inline OrthogonalityReport CheckOrthogonality(const Matroid& m,
                                              int bound = kDefaultEnumerationBound) {
  const auto circuits = Circuits(m, bound);
  const auto cocircuits = Circuits(Dual(m), bound);
  OrthogonalityReport report;
  for (const auto& c : circuits) {
    for (const auto& d : cocircuits) {
      if ((c & d).size() == 1) {
        report.ok = false;
        report.counterexample = std::make_pair(c, d);
        return report;
      }
    }
  }
  return report;
}

}  // namespace matroid

#endif  // MATROID_CIRCUITS_HPP_
