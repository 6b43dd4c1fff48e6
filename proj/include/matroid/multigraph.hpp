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

#ifndef MATROID_MULTIGRAPH_HPP_
#define MATROID_MULTIGRAPH_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroid/element_set.hpp"
#include "matroid/error.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False when a and b were already joined.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

struct Edge {
  std::string label;
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  int Other(int w) const { return w == u ? v : u; }
};

// Finite multigraph; loops and parallel edges allowed. Edge ids are the
// positions in `edges()` and double as element ids of the graphic matroid.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (int i = 0; i < vertex_count(); ++i) {
      if (vertices_[i].empty()) throw InputError("empty vertex label");
      if (!vertex_index_.emplace(vertices_[i], i).second) {
        throw InputError("duplicate vertex '" + vertices_[i] + "'");
      }
    }
    std::unordered_map<std::string, int> seen;
    for (const auto& e : edges_) {
      if (e.u < 0 || e.u >= vertex_count() || e.v < 0 || e.v >= vertex_count()) {
        throw InputError("edge '" + e.label + "' has a dangling endpoint");
      }
      if (!seen.emplace(e.label, 0).second) {
        throw InputError("duplicate edge '" + e.label + "'");
      }
    }
    edge_ground_ = GroundSet(EdgeLabels());
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_label(int v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const GroundSet& edge_ground() const { return edge_ground_; }

  std::optional<int> FindVertex(std::string_view label) const {
    auto it = vertex_index_.find(std::string(label));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  int VertexIndex(std::string_view label) const {
    auto v = FindVertex(label);
    if (!v) throw InputError("unknown vertex '" + std::string(label) + "'");
    return *v;
  }

  // Incident edge ids per vertex (a loop appears once).
  std::vector<std::vector<int>> Incidence() const {
    std::vector<std::vector<int>> inc(vertex_count());
    for (int e = 0; e < edge_count(); ++e) {
      inc[edges_[e].u].push_back(e);
      if (!edges_[e].is_loop()) inc[edges_[e].v].push_back(e);
    }
    return inc;
  }

 private:
  std::vector<std::string> EdgeLabels() const {
    std::vector<std::string> out;
    for (const auto& e : edges_) out.push_back(e.label);
    return out;
  }

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> vertex_index_;
  GroundSet edge_ground_;
};

struct GraphComponent {
  std::vector<int> vertices;  // increasing
  ElementSet edges;
  bool is_tree = false;
};

// Components of the subgraph formed by the edge set x; vertices not touched
// by x are omitted. Ordered by smallest vertex.
inline std::vector<GraphComponent> GraphicComponents(const Multigraph& g, const ElementSet& x) {
  if (x.universe() != g.edge_count()) throw InputError("edge set over a different graph");
  UnionFind uf(g.vertex_count());
  std::vector<bool> touched(g.vertex_count(), false);
  for (int e : x) {
    touched[g.edge(e).u] = touched[g.edge(e).v] = true;
    uf.Union(g.edge(e).u, g.edge(e).v);
  }
  std::vector<int> slot(g.vertex_count(), -1);
  std::vector<GraphComponent> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) continue;
    int root = uf.Find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.push_back(GraphComponent{{}, ElementSet(g.edge_count()), false});
    }
    out[slot[root]].vertices.push_back(v);
  }
  for (int e : x) out[slot[uf.Find(g.edge(e).u)]].edges.insert(e);
  for (auto& c : out) {
    c.is_tree = c.edges.size() + 1 == static_cast<int>(c.vertices.size());
  }
  return out;
}

struct IdentifiedGraph {
  Multigraph graph;
  // Old vertex id -> new vertex id.
  std::vector<int> vertex_map;
  int merged_vertex = 0;
};

// Merges the vertex set `group` into one vertex placed at the position of its
// smallest member. Edge ids are preserved; edges inside the group become loops.
inline IdentifiedGraph IdentifyVertices(const Multigraph& g, std::vector<int> group) {
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  if (group.empty()) throw InputError("cannot identify an empty vertex set");
  for (int v : group) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range");
  }
  std::vector<bool> in_group(g.vertex_count(), false);
  for (int v : group) in_group[v] = true;

  std::string merged_label;
  if (group.size() == 1) {
    merged_label = g.vertex_label(group.front());
  } else {
    for (int v : group) merged_label += (merged_label.empty() ? "" : "+") + g.vertex_label(v);
    merged_label = "[" + merged_label + "]";
    while (g.FindVertex(merged_label) && !in_group[*g.FindVertex(merged_label)]) {
      merged_label += "'";
    }
  }

  IdentifiedGraph out;
  out.vertex_map.assign(g.vertex_count(), -1);
  std::vector<std::string> labels;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_group[v] && v != group.front()) continue;
    out.vertex_map[v] = static_cast<int>(labels.size());
    labels.push_back(v == group.front() ? merged_label : g.vertex_label(v));
  }
  out.merged_vertex = out.vertex_map[group.front()];
  for (int v : group) out.vertex_map[v] = out.merged_vertex;

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back(Edge{e.label, out.vertex_map[e.u], out.vertex_map[e.v]});
  }
  out.graph = Multigraph(std::move(labels), std::move(edges));
  return out;
}

}  // namespace matroid

#endif  // MATROID_MULTIGRAPH_HPP_
