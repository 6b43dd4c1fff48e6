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

// Matroid intersection with a covering-partition certificate.
//
// From bases B1 of M1 and B2* of the dual of M2 whose union is maximal in
// the union of M1 and M2*, the common independent set I = B1 ∩ B2 (with
// B2 = E - B2*) is split as I = J1 ∪ J2 with cl1(J1) ∪ cl2(J2) = E. The
// split comes from a two-coloring of the exchange digraph on E - I, which
// has an arc (x, y) whenever C1(x) ∩ C2(y) ∩ I is nonempty.

#ifndef MATROID_INTERSECTION_HPP_
#define MATROID_INTERSECTION_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/circuits.hpp"
#include "matroid/element_set.hpp"
#include "matroid/error.hpp"
#include "matroid/exchange.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

struct IntersectionState {
  ElementSet b1;      // base of M1
  ElementSet b2star;  // base of M2*
  ElementSet b2;      // E - b2star, base of M2
  ElementSet common;  // I = b1 ∩ b2
  ElementSet x;       // b1 ∩ b2star
  ElementSet y;       // b2 - I
  ElementSet z;       // b2star - x
};

struct Arc {
  int from = 0;
  int to = 0;
  int witness = 0;  // lowest element of C1(from) ∩ C2(to) ∩ I
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ExchangeDigraph {
  ElementSet nodes;  // E - I
  std::vector<Arc> arcs;  // sorted by (from, to)
  // Fundamental circuits into B1 / B2, indexed by element; empty optional
  // when the element lies in that base.
  std::vector<std::optional<ElementSet>> c1;
  std::vector<std::optional<ElementSet>> c2;
  std::vector<std::vector<int>> out;  // arc indices by tail
  std::vector<std::vector<int>> in;   // arc indices by head

  bool IsSource(int v) const { return in[v].empty(); }
  bool IsSink(int v) const { return out[v].empty(); }
};

enum class Color { kBlue, kRed };

struct DivisiveColoring {
  ElementSet blue;
  ElementSet red;
  ElementSet j1;  // (∪ C1(x) over blue x) ∩ I
  ElementSet j2;  // (∪ C2(x) over red x) ∩ I
};

struct IntersectionCertificate {
  ElementSet common;
  ElementSet j1;
  ElementSet j2;
  int size() const { return common.size(); }
};

// Thrown when a node that must be blue reaches one that must be red. For a
// maximal base pair this cannot happen; `path` lists the offending nodes.
class ForbiddenPathError : public ConsistencyError {
 public:
  ForbiddenPathError(const std::string& what, std::vector<int> path)
      : ConsistencyError(what), path_(std::move(path)) {}
  const std::vector<int>& path() const { return path_; }

 private:
  std::vector<int> path_;
};

inline IntersectionState StateFromBases(const Matroid& m1, const Matroid& m2,
                                        const ElementSet& b1, const ElementSet& b2star) {
  internal::CheckPair(m1, m2);
  m1.Check(b1);
  m2.Check(b2star);
  const ElementSet all = m1.ground().All();
  if (!(MaximalExtension(m1, b1, all) == b1)) throw InputError("B1 is not a base of M1");
  const ElementSet b2 = all - b2star;
  if (!(MaximalExtension(m2, b2, all) == b2)) throw InputError("E - B2* is not a base of M2");
  IntersectionState st;
  st.b1 = b1;
  st.b2star = b2star;
  st.b2 = b2;
  st.common = b1 & b2;
  st.x = b1 & b2star;
  st.y = b2 - st.common;
  st.z = b2star - st.x;
  return st;
}

inline IntersectionState BuildState(const Matroid& m1, const Matroid& m2,
                                    const AugmentationObserver& observer = {}) {
  internal::CheckPair(m1, m2);
  PairState bases = MaximizeUnion(m1, Dual(m2), observer);
  return StateFromBases(m1, m2, bases.first, bases.second);
}

struct SpanningReport {
  bool x_in_cl2 = true;   // X ⊆ cl_M2(I)
  bool y_in_cl1 = true;   // Y ⊆ cl_M1(I)
  bool z_covered = true;  // Z ⊆ cl_M1(I) ∪ cl_M2(I)
  bool ok() const { return x_in_cl2 && y_in_cl1 && z_covered; }
};

inline SpanningReport CheckSpanning(const Matroid& m1, const Matroid& m2,
                                    const IntersectionState& st) {
  const ElementSet cl1 = Closure(m1, st.common);
  const ElementSet cl2 = Closure(m2, st.common);
  return SpanningReport{st.x.IsSubsetOf(cl2), st.y.IsSubsetOf(cl1), st.z.IsSubsetOf(cl1 | cl2)};
}

inline ExchangeDigraph BuildDigraph(const Matroid& m1, const Matroid& m2,
                                    const IntersectionState& st) {
  const int n = m1.size();
  ExchangeDigraph dg;
  dg.nodes = st.common.Complement();
  dg.c1.resize(n);
  dg.c2.resize(n);
  dg.out.resize(n);
  dg.in.resize(n);
  for (int v : dg.nodes) {
    if (!st.b1.contains(v)) dg.c1[v] = FundamentalCircuit(m1, st.b1, v);
    if (!st.b2.contains(v)) dg.c2[v] = FundamentalCircuit(m2, st.b2, v);
  }
  for (int u : dg.nodes) {
    if (!dg.c1[u]) continue;
    const ElementSet head = *dg.c1[u] & st.common;
    for (int v : dg.nodes) {
      if (u == v || !dg.c2[v]) continue;
      const ElementSet meet = head & *dg.c2[v];
      if (meet.empty()) continue;
      dg.out[u].push_back(static_cast<int>(dg.arcs.size()));
      dg.in[v].push_back(static_cast<int>(dg.arcs.size()));
      dg.arcs.push_back(Arc{u, v, meet.First()});
    }
  }
  return dg;
}

// Nodes I does not span in M2 must be blue; nodes I does not span in M1
// must be red.
struct ForcedColors {
  ElementSet blue;
  ElementSet red;
};

inline ForcedColors ComputeForcedColors(const ExchangeDigraph& dg, const IntersectionState& st) {
  ForcedColors forced{ElementSet(dg.nodes.universe()), ElementSet(dg.nodes.universe())};
  for (int v : dg.nodes) {
    bool spanned1 = dg.c1[v] && dg.c1[v]->without(v).IsSubsetOf(st.common);
    bool spanned2 = dg.c2[v] && dg.c2[v]->without(v).IsSubsetOf(st.common);
    if (!spanned2) forced.blue.insert(v);
    if (!spanned1) forced.red.insert(v);
  }
  return forced;
}

// Shortest path (by arcs) from a forced-blue node to a forced-red node,
// ties broken by lowest ids. A single node that is forced both ways is a
// path of length zero.
inline std::optional<std::vector<int>> FindForbiddenPath(const ExchangeDigraph& dg,
                                                         const IntersectionState& st) {
  const ForcedColors forced = ComputeForcedColors(dg, st);
  const int n = dg.nodes.universe();
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  for (int v : forced.blue) {
    parent[v] = -1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (forced.red.contains(v)) {
      std::vector<int> path;
      for (int u = v; u != -1; u = parent[u]) path.push_back(u);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int a : dg.out[v]) {
      int w = dg.arcs[a].to;
      if (parent[w] != -2) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

// Blue spreads forward from the forced-blue nodes, red spreads backward from
// the forced-red nodes, everything else is blue. Verifies that the result
// is divisive: blue nodes spanned by I in M1, red ones in M2, J1 ∩ J2 = ∅.
inline DivisiveColoring ColorDigraph(const ExchangeDigraph& dg, const IntersectionState& st) {
  if (auto path = FindForbiddenPath(dg, st)) {
    throw ForbiddenPathError("blue reaches red in the exchange digraph", *path);
  }
  const ForcedColors forced = ComputeForcedColors(dg, st);
  const int n = dg.nodes.universe();

  auto spread = [&](const ElementSet& seeds, bool forward) {
    ElementSet reached = seeds;
    std::deque<int> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int a : forward ? dg.out[v] : dg.in[v]) {
        int w = forward ? dg.arcs[a].to : dg.arcs[a].from;
        if (reached.contains(w)) continue;
        reached.insert(w);
        queue.push_back(w);
      }
    }
    return reached;
  };

  DivisiveColoring coloring;
  coloring.red = spread(forced.red, false);
  coloring.blue = dg.nodes - coloring.red;
  coloring.j1 = ElementSet(n);
  coloring.j2 = ElementSet(n);
  for (int v : coloring.blue) {
    if (!dg.c1[v] || !dg.c1[v]->without(v).IsSubsetOf(st.common)) {
      throw ConsistencyError("blue node not spanned by I in M1");
    }
    coloring.j1 |= *dg.c1[v] & st.common;
  }
  for (int v : coloring.red) {
    if (!dg.c2[v] || !dg.c2[v]->without(v).IsSubsetOf(st.common)) {
      throw ConsistencyError("red node not spanned by I in M2");
    }
    coloring.j2 |= *dg.c2[v] & st.common;
  }
  if (coloring.j1.Intersects(coloring.j2)) throw ConsistencyError("J1 and J2 overlap");
  return coloring;
}

// Turns a forbidden path into an exchange chain for (B1, B2*) in M1 and the
// dual of M2 that starts outside B1 ∪ B2* and ends in B1 ∩ B2*; such a chain
// shows that B1 ∪ B2* is not maximal. Interior path nodes appear at every
// other position, joined through the arc witnesses in I.
inline ExchangeChain ReconstructChain(const Matroid& m1, const Matroid& m2,
                                      const IntersectionState& st, const ExchangeDigraph& dg,
                                      const std::vector<int>& path) {
  if (path.empty()) throw InputError("empty path");
  const Matroid m2star = Dual(m2);
  ExchangeChain chain;
  const int head = path.front();
  if (st.y.contains(head)) {
    chain.parity = Parity::kEven;
  } else {
    if (!dg.c2[head]) throw InputError("path start has no M2 circuit");
    const ElementSet entry = *dg.c2[head] & st.y;
    if (entry.empty()) throw InputError("path start is spanned by I in M2");
    chain.elements.push_back(entry.First());
    chain.parity = Parity::kOdd;
  }
  chain.elements.push_back(head);
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    const Arc* arc = nullptr;
    for (int a : dg.out[path[j]]) {
      if (dg.arcs[a].to == path[j + 1]) arc = &dg.arcs[a];
    }
    if (!arc) throw InputError("path uses a missing arc");
    chain.elements.push_back(arc->witness);
    chain.elements.push_back(path[j + 1]);
  }
  const int tail = path.back();
  if (!st.x.contains(tail)) {
    if (!dg.c1[tail]) throw InputError("path end has no M1 circuit");
    const ElementSet exit = *dg.c1[tail] & st.x;
    if (exit.empty()) throw InputError("path end is spanned by I in M1");
    chain.elements.push_back(exit.First());
  }
  for (int i = 0; i < chain.length(); ++i) {
    chain.circuits.push_back(chain.StepSide(i) == Side::kFirst
                                 ? FundamentalCircuit(m1, st.b1, chain.elements[i])
                                 : FundamentalCircuit(m2star, st.b2star, chain.elements[i]));
  }
  return chain;
}

// Diagnostic for a base pair suspected of not being maximal: a chain from
// outside B1 ∪ B2* into B1 ∩ B2*, or nothing when none is detected.
inline std::optional<ExchangeChain> DiagnoseNonMaximality(const Matroid& m1, const Matroid& m2,
                                                          const IntersectionState& st) {
  const ExchangeDigraph dg = BuildDigraph(m1, m2, st);
  auto path = FindForbiddenPath(dg, st);
  if (!path) return std::nullopt;
  return ReconstructChain(m1, m2, st, dg, *path);
}

struct CertificateCheck {
  bool ok = true;
  std::string reason;
};

inline CertificateCheck VerifyCertificate(const Matroid& m1, const Matroid& m2,
                                          const IntersectionCertificate& c) {
  if (!(m1.ground() == m2.ground())) return {false, "ground sets differ"};
  const int n = m1.size();
  if (c.common.universe() != n || c.j1.universe() != n || c.j2.universe() != n) {
    return {false, "element out of range"};
  }
  if (!m1.IsIndependent(c.common)) return {false, "I dependent in M1"};
  if (!m2.IsIndependent(c.common)) return {false, "I dependent in M2"};
  if (c.j1.Intersects(c.j2)) return {false, "parts overlap"};
  if (!((c.j1 | c.j2) == c.common)) return {false, "parts do not partition I"};
  if (!((Closure(m1, c.j1) | Closure(m2, c.j2)) == m1.ground().All())) {
    return {false, "closures do not cover E"};
  }
  return {};
}

struct IntersectionRun {
  IntersectionState state;
  ExchangeDigraph digraph;
  DivisiveColoring coloring;
  IntersectionCertificate certificate;
};

// The full pipeline, keeping every intermediate structure.
inline IntersectionRun RunIntersection(const Matroid& m1, const Matroid& m2,
                                       const AugmentationObserver& observer = {}) {
  IntersectionRun run;
  run.state = BuildState(m1, m2, observer);
  const SpanningReport spanning = CheckSpanning(m1, m2, run.state);
  if (!spanning.ok()) throw ConsistencyError("base pair violates the spanning containments");
  run.digraph = BuildDigraph(m1, m2, run.state);
  for (int v : run.state.x) {
    if (!run.digraph.IsSink(v)) throw ConsistencyError("X node with an outgoing arc");
  }
  for (int v : run.state.y) {
    if (!run.digraph.IsSource(v)) throw ConsistencyError("Y node with an incoming arc");
  }
  run.coloring = ColorDigraph(run.digraph, run.state);
  // Elements of I touched by no circuit go to J1.
  run.certificate.common = run.state.common;
  run.certificate.j2 = run.coloring.j2;
  run.certificate.j1 = run.state.common - run.coloring.j2;
  const CertificateCheck check = VerifyCertificate(m1, m2, run.certificate);
  if (!check.ok) throw ConsistencyError("certificate failed verification: " + check.reason);
  return run;
}

inline IntersectionCertificate Certify(const Matroid& m1, const Matroid& m2) {
  return RunIntersection(m1, m2).certificate;
}

// min over X ⊆ E of rank1(X) + rank2(E - X), by exhaustive sweep.
inline int MinRankValue(const Matroid& m1, const Matroid& m2,
                        int bound = kDefaultEnumerationBound) {
  internal::CheckPair(m1, m2);
  CheckEnumerationBound(m1.size(), bound);
  const int n = m1.size();
  int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet x = ElementSet::FromMask(n, mask);
    int value = m1.Rank(x) + m2.Rank(x.Complement());
    if (best < 0 || value < best) best = value;
  }
  return best;
}

}  // namespace matroid

#endif  // MATROID_INTERSECTION_HPP_
