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

// Exchange chains between two independent sets and the augmenting
// algorithm for the union of two matroids.
//
// For I1 independent in M1 and I2 independent in M2, a chain (y0, ..., yn)
// has, for every link i, a circuit C_i ⊆ I_p + y_i of M_p containing y_i and
// y_{i+1}, where the side p alternates between the two matroids. An even
// chain takes its first link in M1, an odd chain in M2. Swapping along a
// shortest chain and placing yn into the part of the next side adds y0 to
// I1 ∪ I2.

#ifndef MATROID_EXCHANGE_HPP_
#define MATROID_EXCHANGE_HPP_

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/element_set.hpp"
#include "matroid/error.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

enum class Side { kFirst = 0, kSecond = 1 };

inline Side Other(Side s) { return s == Side::kFirst ? Side::kSecond : Side::kFirst; }

struct PairState {
  ElementSet first;   // independent in M1
  ElementSet second;  // independent in M2

  ElementSet Union() const { return first | second; }
  const ElementSet& part(Side s) const { return s == Side::kFirst ? first : second; }
  ElementSet& part(Side s) { return s == Side::kFirst ? first : second; }
  friend bool operator==(const PairState&, const PairState&) = default;
};

enum class Parity { kEven, kOdd };

struct ExchangeChain {
  std::vector<int> elements;
  Parity parity = Parity::kEven;
  // circuits[i] certifies the link (elements[i], elements[i+1]).
  std::vector<ElementSet> circuits;

  int length() const { return static_cast<int>(elements.size()) - 1; }
  Side StepSide(int i) const {
    bool first = (i % 2 == 0) == (parity == Parity::kEven);
    return first ? Side::kFirst : Side::kSecond;
  }
  // The subchain (y_k, ..., y_l).
  ExchangeChain Sub(int k, int l) const {
    if (k < 0 || l < k || l > length()) throw InputError("subchain bounds out of range");
    ExchangeChain out;
    out.elements.assign(elements.begin() + k, elements.begin() + l + 1);
    out.circuits.assign(circuits.begin() + k, circuits.begin() + l);
    out.parity = StepSide(k) == Side::kFirst ? Parity::kEven : Parity::kOdd;
    return out;
  }
  friend bool operator==(const ExchangeChain&, const ExchangeChain&) = default;
};

struct ChainCheck {
  bool ok = true;
  std::string reason;
};

namespace internal {

inline const Matroid& Pick(const Matroid& m1, const Matroid& m2, Side s) {
  return s == Side::kFirst ? m1 : m2;
}

inline void CheckPair(const Matroid& m1, const Matroid& m2) {
  if (!(m1.ground() == m2.ground())) throw InputError("matroids have different ground sets");
}

}  // namespace internal

// Checks every link of `chain` against `state`: y_i lies outside the part of
// its side and y_{i+1} lies on the unique circuit in that part plus y_i. The
// stored witness circuits must match.
inline ChainCheck ValidateChain(const Matroid& m1, const Matroid& m2, const PairState& state,
                                const ExchangeChain& chain) {
  internal::CheckPair(m1, m2);
  if (chain.elements.empty()) return {false, "empty chain"};
  if (static_cast<int>(chain.circuits.size()) != chain.length()) {
    return {false, "one witness circuit per link required"};
  }
  for (int e : chain.elements) {
    if (e < 0 || e >= m1.size()) return {false, "element out of range"};
  }
  for (int i = 0; i < chain.length(); ++i) {
    const Side side = chain.StepSide(i);
    const Matroid& m = internal::Pick(m1, m2, side);
    const ElementSet& part = state.part(side);
    const int from = chain.elements[i];
    const int to = chain.elements[i + 1];
    if (part.contains(from)) return {false, "link " + std::to_string(i) + " starts inside its part"};
    ElementSet circuit;
    try {
      circuit = FundamentalCircuit(m, part, from);
    } catch (const NoCircuitError&) {
      return {false, "link " + std::to_string(i) + " has no circuit"};
    }
    if (!circuit.contains(to) || to == from) {
      return {false, "link " + std::to_string(i) + " target not on the circuit"};
    }
    if (!(circuit == chain.circuits[i])) {
      return {false, "link " + std::to_string(i) + " witness circuit is stale"};
    }
  }
  return {};
}

// Shortest chain from y to an element that can be placed outright: either it
// already lies in the part of its next side, or adding it there keeps that
// part independent. Breadth-first with neighbors by increasing id; even
// chains (first link in M1) are searched first, odd chains only if no even
// chain exists.
inline std::optional<ExchangeChain> FindChain(const Matroid& m1, const Matroid& m2,
                                              const PairState& state, int y) {
  internal::CheckPair(m1, m2);
  m1.Check(state.first);
  m2.Check(state.second);
  if (y < 0 || y >= m1.size()) throw InputError("element out of ground-set range");
  if (state.Union().contains(y)) throw InputError("chain start already in the union");

  const int n = m1.size();
  auto index = [n](int e, Side s) { return static_cast<int>(s) * n + e; };
  for (Side start : {Side::kFirst, Side::kSecond}) {
    std::vector<int> parent(2 * n, -2);  // -2 unvisited, -1 root
    std::vector<std::optional<ElementSet>> circuit(2 * n);
    std::deque<std::pair<int, Side>> queue;
    parent[index(y, start)] = -1;
    queue.emplace_back(y, start);

    while (!queue.empty()) {
      auto [e, side] = queue.front();
      queue.pop_front();
      const Matroid& m = internal::Pick(m1, m2, side);
      const ElementSet& part = state.part(side);
      bool terminal = part.contains(e) || m.IsIndependent(part.with(e));
      if (terminal) {
        ExchangeChain chain;
        for (int node = index(e, side); node != -1; node = parent[node]) {
          chain.elements.push_back(node % n);
          if (circuit[node]) chain.circuits.push_back(*circuit[node]);
        }
        std::reverse(chain.elements.begin(), chain.elements.end());
        std::reverse(chain.circuits.begin(), chain.circuits.end());
        chain.parity = start == Side::kFirst ? Parity::kEven : Parity::kOdd;
        return chain;
      }
      ElementSet c = FundamentalCircuit(m, part, e);
      circuit[index(e, side)] = c;
      for (int f : c) {
        if (f == e) continue;
        int next = index(f, Other(side));
        if (parent[next] != -2) continue;
        parent[next] = index(e, side);
        queue.emplace_back(f, Other(side));
      }
    }
  }
  return std::nullopt;
}

// Swaps along `chain`: each part p receives y_i and gives up y_{i+1} at its
// links, and the last element lands in the part of the side after the last
// link. Re-verifies the chain first and both parts afterwards.
inline PairState ApplyChain(const Matroid& m1, const Matroid& m2, const PairState& state,
                            const ExchangeChain& chain) {
  internal::CheckPair(m1, m2);
  if (chain.elements.empty()) throw ConsistencyError("empty chain");
  const ElementSet before = state.Union();
  if (before.contains(chain.elements.front())) {
    throw ConsistencyError("stale chain: start element already in the union");
  }
  ChainCheck check = ValidateChain(m1, m2, state, chain);
  if (!check.ok) throw ConsistencyError("stale chain: " + check.reason);

  PairState next = state;
  for (int i = 0; i < chain.length(); ++i) {
    ElementSet& part = next.part(chain.StepSide(i));
    part.insert(chain.elements[i]);
    part.erase(chain.elements[i + 1]);
  }
  next.part(chain.StepSide(chain.length())).insert(chain.elements.back());

  if (!m1.IsIndependent(next.first) || !m2.IsIndependent(next.second)) {
    throw ConsistencyError("chain application broke independence");
  }
  if (!(next.Union() == before.with(chain.elements.front()))) {
    throw ConsistencyError("chain application did not add exactly its start element");
  }
  return next;
}

struct Augmentation {
  const PairState& before;
  const ExchangeChain& chain;
  const PairState& after;
};

using AugmentationObserver = std::function<void(const Augmentation&)>;

// A maximal member of the union of the two independence systems, returned
// as a pair of bases (B1 of M1, B2 of M2) whose union it is. Augments from
// the empty pair, scanning candidates in increasing id until a full pass
// adds nothing, then extends each part greedily inside the union. A
// candidate that fits directly into the first part, or else the second, is
// placed there before any longer chain is searched.
inline PairState MaximizeUnion(const Matroid& m1, const Matroid& m2,
                               const AugmentationObserver& observer = {}) {
  internal::CheckPair(m1, m2);
  PairState state{ElementSet(m1.size()), ElementSet(m2.size())};
  for (bool grew = true; grew;) {
    grew = false;
    for (int y = 0; y < m1.size(); ++y) {
      if (state.Union().contains(y)) continue;
      std::optional<ExchangeChain> chain;
      if (m1.IsIndependent(state.first.with(y))) {
        chain = ExchangeChain{{y}, Parity::kEven, {}};
      } else if (m2.IsIndependent(state.second.with(y))) {
        chain = ExchangeChain{{y}, Parity::kOdd, {}};
      } else {
        chain = FindChain(m1, m2, state, y);
      }
      if (!chain) continue;
      PairState next = ApplyChain(m1, m2, state, *chain);
      if (observer) observer(Augmentation{state, *chain, next});
      state = std::move(next);
      grew = true;
    }
  }
  const ElementSet all = m1.ground().All();
  const ElementSet covered = state.Union();
  state.first = MaximalExtension(m1, state.first, all);
  state.second = MaximalExtension(m2, state.second, all);
  if (!(state.Union() == covered)) {
    throw ConsistencyError("base extension left the maximal union");
  }
  return state;
}

}  // namespace matroid

#endif  // MATROID_EXCHANGE_HPP_
