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

// Graphviz DOT output for Menger certificates and exchange digraphs.

#ifndef MATROID_DOT_HPP_
#define MATROID_DOT_HPP_

#include <sstream>
#include <string>
#include <vector>

#include "matroid/intersection.hpp"
#include "matroid/matroid.hpp"
#include "matroid/menger.hpp"
#include "matroid/multigraph.hpp"

namespace matroid::dot {

inline std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                           "#9467bd", "#8c564b", "#e377c2", "#17becf"};

// One color per path (vertices and path edges); separator vertices get a
// doubled border; S and T are marked by shape.
inline std::string MengerDot(const MengerInstance& inst, const MengerCertificate& cert) {
  const Multigraph& g = inst.graph;
  const int nv = g.vertex_count();
  std::vector<int> path_of(nv, -1);
  std::vector<std::vector<bool>> step(nv, std::vector<bool>(nv, false));
  for (std::size_t p = 0; p < cert.paths.size(); ++p) {
    for (std::size_t i = 0; i < cert.paths[p].size(); ++i) {
      path_of[cert.paths[p][i]] = static_cast<int>(p);
      if (i + 1 < cert.paths[p].size()) {
        step[cert.paths[p][i]][cert.paths[p][i + 1]] = true;
        step[cert.paths[p][i + 1]][cert.paths[p][i]] = true;
      }
    }
  }
  std::vector<bool> in_s(nv, false), in_t(nv, false), sep(nv, false);
  for (int v : inst.s) in_s[v] = true;
  for (int v : inst.t) in_t[v] = true;
  for (int v : cert.separator) sep[v] = true;

  std::ostringstream out;
  out << "graph menger {\n";
  for (int v = 0; v < nv; ++v) {
    out << "  " << Quote(g.vertex_label(v)) << " [shape="
        << (in_s[v] && in_t[v] ? "diamond" : in_s[v] ? "box" : in_t[v] ? "invtriangle" : "ellipse");
    if (path_of[v] >= 0) {
      out << ", style=filled, fillcolor=" << Quote(kPalette[path_of[v] % std::size(kPalette)]);
    }
    if (sep[v]) out << ", peripheries=2";
    out << "];\n";
  }
  std::vector<std::vector<bool>> used(nv, std::vector<bool>(nv, false));
  for (const auto& e : g.edges()) {
    out << "  " << Quote(g.vertex_label(e.u)) << " -- " << Quote(g.vertex_label(e.v))
        << " [label=" << Quote(e.label);
    // Highlight one edge per consecutive path pair.
    if (step[e.u][e.v] && !used[e.u][e.v] && path_of[e.u] >= 0) {
      used[e.u][e.v] = used[e.v][e.u] = true;
      out << ", penwidth=3, color=" << Quote(kPalette[path_of[e.u] % std::size(kPalette)]);
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

// Nodes are E - I. Shape encodes the part (X box, Y ellipse, Z diamond),
// fill color the divisive coloring; arcs carry their witness in I.
inline std::string ExchangeDigraphDot(const GroundSet& ground, const IntersectionRun& run) {
  std::ostringstream out;
  out << "digraph exchange {\n";
  out << "  label=" << Quote("I = " + internal::DescribeSet(ground, run.state.common)) << ";\n";
  for (int v : run.digraph.nodes) {
    const char* shape = run.state.x.contains(v) ? "box" : run.state.y.contains(v) ? "ellipse" : "diamond";
    const char* color = run.coloring.red.contains(v) ? "red" : "lightblue";
    out << "  " << Quote(ground.label(v)) << " [shape=" << shape
        << ", style=filled, fillcolor=" << color << "];\n";
  }
  for (const auto& a : run.digraph.arcs) {
    out << "  " << Quote(ground.label(a.from)) << " -> " << Quote(ground.label(a.to))
        << " [label=" << Quote(ground.label(a.witness)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace matroid::dot

#endif  // MATROID_DOT_HPP_
