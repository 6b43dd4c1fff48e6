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

// Deliberately naive reference implementations used only by tests. They
// touch matroids solely through the independence predicate and share no
// code with the algorithms they check.

#ifndef MATROID_REFERENCE_ORACLES_HPP_
#define MATROID_REFERENCE_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "matroid/element_set.hpp"
#include "matroid/error.hpp"
#include "matroid/matroid.hpp"
#include "matroid/multigraph.hpp"

namespace matroid::reference {

struct OracleBudget {
  int max_ground = 10;
  int max_vertices = 10;
  std::chrono::milliseconds time_cap{30000};
};

namespace detail {

using Mask = std::uint32_t;

class Deadline {
 public:
  explicit Deadline(const OracleBudget& budget)
      : end_(std::chrono::steady_clock::now() + budget.time_cap) {}
  void Check() const {
    if (std::chrono::steady_clock::now() > end_) throw CapacityError("oracle time cap exceeded");
  }

 private:
  std::chrono::steady_clock::time_point end_;
};

inline void CheckGround(const Matroid& m1, const Matroid& m2, const OracleBudget& budget) {
  if (!(m1.ground() == m2.ground())) throw InputError("matroids have different ground sets");
  if (m1.size() > budget.max_ground || m1.size() > 20) {
    throw CapacityError("ground set exceeds the oracle budget");
  }
}

inline std::vector<bool> IndependenceTable(const Matroid& m, const Deadline& deadline) {
  const int n = m.size();
  std::vector<bool> table(std::size_t{1} << n);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if ((s & 0xff) == 0) deadline.Check();
    table[s] = m.IsIndependent(ElementSet::FromMask(n, s));
  }
  return table;
}

// rank[s] = largest independent subset of s, by dynamic programming over
// subsets (no greedy step involved).
inline std::vector<int> RankTable(const std::vector<bool>& independent, int n) {
  std::vector<int> rank(independent.size(), 0);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (independent[s]) {
      rank[s] = std::popcount(s);
      continue;
    }
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      Mask bit = rest & (~rest + 1);
      rank[s] = std::max(rank[s], rank[s & ~bit]);
    }
  }
  return rank;
}

// Canonical order on masks: by size, then lexicographic on increasing ids.
inline bool MaskLess(Mask a, Mask b, int n) {
  return CanonicalLess(ElementSet::FromMask(n, a), ElementSet::FromMask(n, b));
}

}  // namespace detail

struct MaxCommonResult {
  int size = 0;
  ElementSet witness;  // lexicographically least among the maximum sets
};

inline MaxCommonResult BruteMaxCommonIndependent(const Matroid& m1, const Matroid& m2,
                                                 const OracleBudget& budget = {}) {
  detail::CheckGround(m1, m2, budget);
  detail::Deadline deadline(budget);
  const int n = m1.size();
  const auto ind1 = detail::IndependenceTable(m1, deadline);
  const auto ind2 = detail::IndependenceTable(m2, deadline);
  MaxCommonResult best{0, ElementSet(n)};
  for (detail::Mask s = 0; s < (detail::Mask{1} << n); ++s) {
    if (!ind1[s] || !ind2[s]) continue;
    ElementSet set = ElementSet::FromMask(n, s);
    if (set.size() > best.size || (set.size() == best.size && LexLess(set, best.witness))) {
      best = {set.size(), set};
    }
  }
  return best;
}

struct MinRankResult {
  int value = 0;
  ElementSet minimizer;  // least in (size, lexicographic) order
};

inline MinRankResult BruteMinRankFormula(const Matroid& m1, const Matroid& m2,
                                         const OracleBudget& budget = {}) {
  detail::CheckGround(m1, m2, budget);
  detail::Deadline deadline(budget);
  const int n = m1.size();
  const detail::Mask full = (detail::Mask{1} << n) - 1;
  const auto r1 = detail::RankTable(detail::IndependenceTable(m1, deadline), n);
  const auto r2 = detail::RankTable(detail::IndependenceTable(m2, deadline), n);
  int best = -1;
  detail::Mask arg = 0;
  for (detail::Mask x = 0; x <= full; ++x) {
    int value = r1[x] + r2[full & ~x];
    if (best < 0 || value < best || (value == best && detail::MaskLess(x, arg, n))) {
      best = value;
      arg = x;
    }
  }
  return {best, ElementSet::FromMask(n, arg)};
}

// max |I1 ∪ I2| over independent I1 of m1 and I2 of m2.
inline int BruteUnionMax(const Matroid& m1, const Matroid& m2, const OracleBudget& budget = {}) {
  detail::CheckGround(m1, m2, budget);
  detail::Deadline deadline(budget);
  const int n = m1.size();
  const auto ind1 = detail::IndependenceTable(m1, deadline);
  const auto ind2 = detail::IndependenceTable(m2, deadline);
  std::vector<detail::Mask> list1, list2;
  for (detail::Mask s = 0; s < (detail::Mask{1} << n); ++s) {
    if (ind1[s]) list1.push_back(s);
    if (ind2[s]) list2.push_back(s);
  }
  int best = 0;
  for (detail::Mask a : list1) {
    deadline.Check();
    for (detail::Mask b : list2) best = std::max(best, std::popcount(a | b));
  }
  return best;
}

// Maximum number of vertex-disjoint S-T paths: unit vertex capacities via
// vertex splitting, augmenting paths found by breadth-first search.
inline int BruteMaxDisjointPaths(const Multigraph& g, const std::vector<int>& s,
                                 const std::vector<int>& t, const OracleBudget& budget = {}) {
  const int nv = g.vertex_count();
  if (nv > budget.max_vertices) throw CapacityError("graph exceeds the oracle budget");
  detail::Deadline deadline(budget);
  // Nodes: 2v = v_in, 2v+1 = v_out, 2nv = source, 2nv+1 = sink.
  const int source = 2 * nv, sink = 2 * nv + 1, nodes = 2 * nv + 2;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (int v = 0; v < nv; ++v) cap[2 * v][2 * v + 1] = 1;
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    cap[2 * e.u + 1][2 * e.v] = nv;
    cap[2 * e.v + 1][2 * e.u] = nv;
  }
  for (int v : s) cap[source][2 * v] = 1;
  for (int v : t) cap[2 * v + 1][sink] = 1;

  int flow = 0;
  while (true) {
    deadline.Check();
    std::vector<int> parent(nodes, -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      int u = queue.front();
      queue.pop_front();
      for (int w = 0; w < nodes; ++w) {
        if (parent[w] < 0 && cap[u][w] > 0) {
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (parent[sink] < 0) return flow;
    for (int w = sink; w != source; w = parent[w]) {
      --cap[parent[w]][w];
      ++cap[w][parent[w]];
    }
    ++flow;
  }
}

// Size of the smallest vertex set whose removal leaves no S-T path, by
// exhaustive search over vertex subsets in increasing size.
inline int BruteMinSeparatorSize(const Multigraph& g, const std::vector<int>& s,
                                 const std::vector<int>& t, const OracleBudget& budget = {}) {
  const int nv = g.vertex_count();
  if (nv > budget.max_vertices || nv > 20) throw CapacityError("graph exceeds the oracle budget");
  detail::Deadline deadline(budget);
  std::vector<bool> in_t(nv, false);
  for (int v : t) in_t[v] = true;
  auto separates = [&](detail::Mask removed) {
    std::vector<bool> seen(nv, false);
    std::deque<int> queue;
    for (int v : s) {
      if (!(removed >> v & 1U) && !seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (in_t[v]) return false;
      for (const auto& e : g.edges()) {
        int w = e.u == v ? e.v : (e.v == v ? e.u : -1);
        if (w < 0 || seen[w] || (removed >> w & 1U)) continue;
        seen[w] = true;
        queue.push_back(w);
      }
    }
    return true;
  };
  for (int k = 0; k <= nv; ++k) {
    for (detail::Mask m = 0; m < (detail::Mask{1} << nv); ++m) {
      if (std::popcount(m) != k) continue;
      if ((m & 0xff) == 0) deadline.Check();
      if (separates(m)) return k;
    }
  }
  return nv;
}

}  // namespace matroid::reference

#endif  // MATROID_REFERENCE_ORACLES_HPP_
