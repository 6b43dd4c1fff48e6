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

// Vertex-disjoint S-T paths with a separator that picks exactly one vertex
// from each path, obtained from a matroid intersection certificate.
//
// With E(S) the edges inside S and M the cycle matroid, the two matroids are
// M_S = M/E(S) - E(T) and M_T = M/E(T) - E(S), with S (resp. T) merged into
// one vertex so that contracting E(S) acts as if G[S] were connected. A
// certified common independent set I = J_S ∪ J_T is a forest whose
// components carry at most one S-vertex and one T-vertex each; re-splitting
// I around a pivot on each S-T path yields K_S ∪ K_T, and the vertices
// touched from both sides form the separator.

#ifndef MATROID_MENGER_HPP_
#define MATROID_MENGER_HPP_

#include <algorithm>
#include <deque>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/element_set.hpp"
#include "matroid/error.hpp"
#include "matroid/intersection.hpp"
#include "matroid/matroid.hpp"
#include "matroid/multigraph.hpp"
#include "matroid/zoo.hpp"

namespace matroid {

struct MengerInstance {
  Multigraph graph;
  std::vector<int> s;  // vertex ids, increasing
  std::vector<int> t;
};

struct MengerCertificate {
  std::vector<std::vector<int>> paths;
  std::vector<int> separator;  // increasing
  friend bool operator==(const MengerCertificate&, const MengerCertificate&) = default;
};

struct MengerCheck {
  bool ok = true;
  std::string reason;
};

namespace internal {

inline std::vector<int> SortedUnique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<bool> Indicator(int n, const std::vector<int>& members) {
  std::vector<bool> out(n, false);
  for (int v : members) out.at(v) = true;
  return out;
}

inline void CheckInstance(const MengerInstance& inst) {
  if (inst.s.empty() || inst.t.empty()) throw InputError("S and T must be nonempty");
  for (const auto* side : {&inst.s, &inst.t}) {
    for (int v : *side) {
      if (v < 0 || v >= inst.graph.vertex_count()) throw InputError("terminal vertex out of range");
    }
  }
}

// Edges with both ends in the vertex set.
inline ElementSet InducedEdges(const Multigraph& g, const std::vector<bool>& in) {
  ElementSet out(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in[g.edge(e).u] && in[g.edge(e).v]) out.insert(e);
  }
  return out;
}

}  // namespace internal

inline MengerInstance MakeInstance(Multigraph g, std::vector<int> s, std::vector<int> t) {
  MengerInstance inst{std::move(g), internal::SortedUnique(std::move(s)),
                      internal::SortedUnique(std::move(t))};
  internal::CheckInstance(inst);
  return inst;
}

struct Reduction {
  Matroid m_s;
  Matroid m_t;
  // Matroid element id -> edge id of the instance graph.
  std::vector<int> edge_of;
  ElementSet inside_s;  // E(S)
  ElementSet inside_t;  // E(T)

  ElementSet ToEdges(const ElementSet& elements, int edge_count) const {
    ElementSet out(edge_count);
    for (int e : elements) out.insert(edge_of[e]);
    return out;
  }
};

inline Reduction Reduce(const MengerInstance& inst) {
  internal::CheckInstance(inst);
  const Multigraph& g = inst.graph;
  Reduction red;
  red.inside_s = internal::InducedEdges(g, internal::Indicator(g.vertex_count(), inst.s));
  red.inside_t = internal::InducedEdges(g, internal::Indicator(g.vertex_count(), inst.t));
  const ElementSet dropped = red.inside_s | red.inside_t;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!dropped.contains(e)) red.edge_of.push_back(e);
  }
  auto side_matroid = [&](const std::vector<int>& merge) {
    Matroid merged = Graphic(IdentifyVertices(g, merge).graph);
    return Minor(merged, ElementSet(g.edge_count()), dropped);
  };
  red.m_s = side_matroid(inst.s);
  red.m_t = side_matroid(inst.t);
  return red;
}

// Hooks into the per-component intersection runs, each with the reduction
// it belongs to.
struct MengerObserver {
  std::function<void(const Reduction&, const Augmentation&)> on_augmentation;
  std::function<void(const Reduction&, const IntersectionRun&)> on_run;
};

struct ForestComponent {
  GraphComponent component;
  int s_vertex = -1;
  int t_vertex = -1;
  std::vector<int> path;  // S-end to T-end when both exist
  int pivot = -1;         // last vertex of the initial run of P outside J_T
};

// Edge sets are over the instance graph's edge ids.
struct ForestPartition {
  ElementSet common;
  ElementSet j_s;
  ElementSet j_t;
  ElementSet k_s;
  ElementSet k_t;
  std::vector<ForestComponent> components;
};

namespace internal {

// Vertices of the unique u-v path inside a tree given by its edge set.
inline std::vector<int> TreePath(const Multigraph& g, const ElementSet& tree, int from, int to) {
  std::vector<int> parent(g.vertex_count(), -2);
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int e : tree) {
    adj[g.edge(e).u].push_back(e);
    adj[g.edge(e).v].push_back(e);
  }
  std::deque<int> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : adj[v]) {
      int w = g.edge(e).Other(v);
      if (parent[w] != -2) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (parent[to] == -2) throw ConsistencyError("no path inside the component");
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// The tree edge joining consecutive path vertices.
inline int TreeEdge(const Multigraph& g, const ElementSet& tree, int a, int b) {
  for (int e : tree) {
    if ((g.edge(e).u == a && g.edge(e).v == b) || (g.edge(e).u == b && g.edge(e).v == a)) return e;
  }
  throw ConsistencyError("path step without a tree edge");
}

}  // namespace internal

inline ForestPartition ForestStructure(const MengerInstance& inst, const ElementSet& common,
                                       const ElementSet& j_s, const ElementSet& j_t) {
  const Multigraph& g = inst.graph;
  if (j_s.Intersects(j_t) || !((j_s | j_t) == common)) {
    throw ConsistencyError("J_S and J_T do not partition I");
  }
  const auto in_s = internal::Indicator(g.vertex_count(), inst.s);
  const auto in_t = internal::Indicator(g.vertex_count(), inst.t);
  if (common.Intersects(internal::InducedEdges(g, in_s) | internal::InducedEdges(g, in_t))) {
    throw ConsistencyError("I contains an edge inside S or inside T");
  }

  ForestPartition fp{common, j_s, j_t, ElementSet(g.edge_count()), ElementSet(g.edge_count()), {}};
  for (auto& comp : GraphicComponents(g, common)) {
    ForestComponent fc;
    if (!comp.is_tree) throw ConsistencyError("a component of G[I] is not a tree");
    for (int v : comp.vertices) {
      if (in_s[v]) {
        if (fc.s_vertex >= 0) throw ConsistencyError("a component of G[I] meets S twice");
        fc.s_vertex = v;
      }
      if (in_t[v]) {
        if (fc.t_vertex >= 0) throw ConsistencyError("a component of G[I] meets T twice");
        fc.t_vertex = v;
      }
    }
    if (fc.s_vertex < 0 && fc.t_vertex < 0) {
      throw ConsistencyError("a component of G[I] avoids S and T");
    }
    if (fc.t_vertex < 0) {
      fp.k_s |= comp.edges;
    } else if (fc.s_vertex < 0) {
      fp.k_t |= comp.edges;
    } else {
      fc.path = internal::TreePath(g, comp.edges, fc.s_vertex, fc.t_vertex);
      fc.pivot = fc.path.front();
      for (std::size_t i = 0; i + 1 < fc.path.size(); ++i) {
        if (j_t.contains(internal::TreeEdge(g, comp.edges, fc.path[i], fc.path[i + 1]))) break;
        fc.pivot = fc.path[i + 1];
      }
      // Each branch at the pivot follows the side of its edge to the pivot.
      for (int e : comp.edges) {
        if (g.edge(e).u != fc.pivot && g.edge(e).v != fc.pivot) continue;
        ElementSet branch(g.edge_count());
        branch.insert(e);
        std::deque<int> queue{g.edge(e).Other(fc.pivot)};
        std::vector<bool> seen(g.vertex_count(), false);
        seen[fc.pivot] = seen[queue.front()] = true;
        while (!queue.empty()) {
          int v = queue.front();
          queue.pop_front();
          for (int f : comp.edges) {
            if (g.edge(f).u != v && g.edge(f).v != v) continue;
            int w = g.edge(f).Other(v);
            if (seen[w]) continue;
            seen[w] = true;
            branch.insert(f);
            queue.push_back(w);
          }
        }
        (j_s.contains(e) ? fp.k_s : fp.k_t) |= branch;
      }
    }
    fc.component = std::move(comp);
    fp.components.push_back(std::move(fc));
  }

  if (fp.k_s.Intersects(fp.k_t) || !((fp.k_s | fp.k_t) == common)) {
    throw ConsistencyError("K_S and K_T do not partition I");
  }
  // At most one vertex per two-sided component is touched from both sides.
  for (const auto& fc : fp.components) {
    if (fc.path.empty()) continue;
    int both = 0;
    for (int v : fc.component.vertices) {
      bool a = in_s[v], b = in_t[v];
      for (int e : fc.component.edges) {
        if (g.edge(e).u != v && g.edge(e).v != v) continue;
        a = a || fp.k_s.contains(e);
        b = b || fp.k_t.contains(e);
      }
      both += (a && b) ? 1 : 0;
    }
    if (both > 1) throw ConsistencyError("a two-sided component has several pivot candidates");
  }
  return fp;
}

// cl_MS(K_S) ∪ cl_MT(K_T) must still be the whole common ground set.
inline void CheckRepartitionCover(const Reduction& red, const ForestPartition& fp) {
  const int n = red.m_s.size();
  ElementSet k_s(n), k_t(n);
  for (int e = 0; e < n; ++e) {
    if (fp.k_s.contains(red.edge_of[e])) k_s.insert(e);
    if (fp.k_t.contains(red.edge_of[e])) k_t.insert(e);
  }
  if (!((Closure(red.m_s, k_s) | Closure(red.m_t, k_t)) == red.m_s.ground().All())) {
    throw ConsistencyError("K_S and K_T do not span the ground set");
  }
}

inline MengerCertificate SeparatorFromPartition(const MengerInstance& inst,
                                                const ForestPartition& fp) {
  const Multigraph& g = inst.graph;
  const int nv = g.vertex_count();
  std::vector<bool> vs = internal::Indicator(nv, inst.s);
  std::vector<bool> vt = internal::Indicator(nv, inst.t);
  for (int e : fp.k_s) vs[g.edge(e).u] = vs[g.edge(e).v] = true;
  for (int e : fp.k_t) vt[g.edge(e).u] = vt[g.edge(e).v] = true;

  MengerCertificate cert;
  std::vector<bool> on_path(nv, false);
  for (const auto& fc : fp.components) {
    if (fc.path.empty()) continue;
    cert.paths.push_back(fc.path);
    for (int v : fc.path) on_path[v] = true;
  }
  for (int v : inst.s) {
    if (vt[v] && std::binary_search(inst.t.begin(), inst.t.end(), v) && !on_path[v]) {
      cert.paths.push_back({v});
      on_path[v] = true;
    }
  }

  for (int v = 0; v < nv; ++v) {
    if (!vs[v] && !vt[v]) throw ConsistencyError("vertex outside V_S ∪ V_T");
    if (vs[v] && vt[v]) {
      if (!on_path[v]) throw ConsistencyError("separator vertex off the paths");
      cert.separator.push_back(v);
    }
  }
  for (const auto& e : g.edges()) {
    if (!(vs[e.u] && vs[e.v]) && !(vt[e.u] && vt[e.v])) {
      throw ConsistencyError("edge '" + e.label + "' crosses between V_S and V_T");
    }
  }
  for (const auto& p : cert.paths) {
    int hits = 0;
    for (int v : p) hits += (vs[v] && vt[v]) ? 1 : 0;
    if (hits > 1) throw ConsistencyError("a path meets the separator twice");
  }
  return cert;
}

inline MengerCheck VerifyMenger(const MengerInstance& inst, const MengerCertificate& cert) {
  const Multigraph& g = inst.graph;
  const int nv = g.vertex_count();
  const auto in_s = internal::Indicator(nv, inst.s);
  const auto in_t = internal::Indicator(nv, inst.t);
  std::vector<std::vector<bool>> adjacent(nv, std::vector<bool>(nv, false));
  for (const auto& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = true;

  std::vector<int> owner(nv, -1);
  for (std::size_t p = 0; p < cert.paths.size(); ++p) {
    const auto& path = cert.paths[p];
    if (path.empty()) return {false, "empty path"};
    for (int v : path) {
      if (v < 0 || v >= nv) return {false, "invalid path: vertex out of range"};
    }
    if (!in_s[path.front()] || !in_t[path.back()]) return {false, "invalid path: wrong endpoints"};
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0 && in_s[path[i]]) return {false, "invalid path: revisits S"};
      if (i + 1 < path.size() && in_t[path[i]]) return {false, "invalid path: revisits T"};
      if (i + 1 < path.size() && !adjacent[path[i]][path[i + 1]]) {
        return {false, "invalid path: missing edge"};
      }
    }
    for (int v : path) {
      if (owner[v] == static_cast<int>(p)) return {false, "invalid path: repeated vertex"};
      if (owner[v] >= 0) return {false, "paths not disjoint"};
      owner[v] = static_cast<int>(p);
    }
  }

  std::vector<bool> removed(nv, false);
  std::vector<int> hits(cert.paths.size(), 0);
  for (int v : cert.separator) {
    if (v < 0 || v >= nv) return {false, "separator vertex out of range"};
    if (removed[v]) return {false, "separator lists a vertex twice"};
    removed[v] = true;
    if (owner[v] < 0) return {false, "separator vertex not on a path"};
    ++hits[owner[v]];
  }

  std::vector<bool> seen(nv, false);
  std::deque<int> queue;
  for (int v : inst.s) {
    if (!removed[v]) {
      seen[v] = true;
      queue.push_back(v);
    }
  }
  const auto inc = g.Incidence();
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (in_t[v]) return {false, "not separating"};
    for (int e : inc[v]) {
      int w = g.edge(e).Other(v);
      if (removed[w] || seen[w]) continue;
      seen[w] = true;
      queue.push_back(w);
    }
  }
  for (int h : hits) {
    if (h != 1) return {false, "separator does not meet every path exactly once"};
  }
  return {};
}

namespace internal {

// Subgraph on `vertices` (increasing old ids) with the edges between them.
struct Subgraph {
  Multigraph graph;
  std::vector<int> vertex_of;  // new -> old
};

inline Subgraph InducedSubgraph(const Multigraph& g, const std::vector<int>& vertices) {
  std::vector<int> map(g.vertex_count(), -1);
  Subgraph sub;
  std::vector<std::string> labels;
  for (int v : vertices) {
    map[v] = static_cast<int>(labels.size());
    labels.push_back(g.vertex_label(v));
    sub.vertex_of.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (map[e.u] >= 0 && map[e.v] >= 0) edges.push_back(Edge{e.label, map[e.u], map[e.v]});
  }
  sub.graph = Multigraph(std::move(labels), std::move(edges));
  return sub;
}

// Connected instance with S and T disjoint and nonempty.
inline MengerCertificate SolveConnected(const MengerInstance& inst, const MengerObserver& observer) {
  const Reduction red = Reduce(inst);
  AugmentationObserver on_augmentation;
  if (observer.on_augmentation) {
    on_augmentation = [&](const Augmentation& a) { observer.on_augmentation(red, a); };
  }
  const IntersectionRun run = RunIntersection(red.m_s, red.m_t, on_augmentation);
  if (observer.on_run) observer.on_run(red, run);
  const IntersectionCertificate& cert = run.certificate;
  const int ne = inst.graph.edge_count();
  const ForestPartition fp = ForestStructure(inst, red.ToEdges(cert.common, ne),
                                             red.ToEdges(cert.j1, ne), red.ToEdges(cert.j2, ne));
  CheckRepartitionCover(red, fp);
  return SeparatorFromPartition(inst, fp);
}

}  // namespace internal

// Vertices in S ∩ T become one-vertex paths and join the separator; the
// rest of the graph is solved per connected component and merged.
inline MengerCertificate SolveMenger(const MengerInstance& inst,
                                     const MengerObserver& observer = {}) {
  internal::CheckInstance(inst);
  const Multigraph& g = inst.graph;
  const int nv = g.vertex_count();
  const auto in_s = internal::Indicator(nv, inst.s);
  const auto in_t = internal::Indicator(nv, inst.t);

  MengerCertificate result;
  std::vector<bool> peeled(nv, false);
  for (int v : inst.s) {
    if (in_t[v]) {
      result.paths.push_back({v});
      result.separator.push_back(v);
      peeled[v] = true;
    }
  }

  UnionFind uf(nv);
  for (const auto& e : g.edges()) {
    if (!peeled[e.u] && !peeled[e.v]) uf.Union(e.u, e.v);
  }
  std::vector<std::vector<int>> groups(nv);
  for (int v = 0; v < nv; ++v) {
    if (!peeled[v]) groups[uf.Find(v)].push_back(v);
  }
  std::vector<std::vector<int>> components;
  for (auto& grp : groups) {
    if (!grp.empty()) components.push_back(std::move(grp));
  }
  std::sort(components.begin(), components.end());

  for (const auto& comp : components) {
    std::vector<int> s, t;
    internal::Subgraph sub = internal::InducedSubgraph(g, comp);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      if (in_s[comp[i]]) s.push_back(i);
      if (in_t[comp[i]]) t.push_back(i);
    }
    if (s.empty() || t.empty()) continue;
    MengerCertificate part = internal::SolveConnected(MengerInstance{sub.graph, s, t}, observer);
    for (auto& p : part.paths) {
      for (int& v : p) v = sub.vertex_of[v];
      result.paths.push_back(std::move(p));
    }
    for (int v : part.separator) result.separator.push_back(sub.vertex_of[v]);
  }
  std::sort(result.separator.begin(), result.separator.end());

  const MengerCheck check = VerifyMenger(inst, result);
  if (!check.ok) throw ConsistencyError("Menger certificate failed verification: " + check.reason);
  return result;
}

}  // namespace matroid

#endif  // MATROID_MENGER_HPP_
