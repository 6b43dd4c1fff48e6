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

// JSON encodings used by the command-line tool and the test fixtures.
//
//   {"type":"uniform","n":4,"k":2[,"labels":[...]]}
//   {"type":"partition","blocks":[["a","b"],["c","d"]],"caps":[1,1]}
//   {"type":"graphic","graph":{"vertices":["u","v"],"edges":[["e1","u","v"]]}}
//   {"type":"binary","matrix":[[1,0,1],[0,1,1]][,"labels":[...]]}
//   {"type":"explicit","ground":["a","b"],"independent":[[],["a"]]}
//   {"type":"dual","of":{...}}
//   {"type":"minor","of":{...},"contract":[...],"delete":[...]}
//   {"type":"sum","parts":[{...},{...}]}
//
// Emitted objects rely on nlohmann::json's sorted keys, and element lists
// are written in canonical (increasing id) order, so output is byte-stable.

#ifndef MATROID_JSON_IO_HPP_
#define MATROID_JSON_IO_HPP_

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "matroid/axioms.hpp"
#include "matroid/element_set.hpp"
#include "matroid/error.hpp"
#include "matroid/intersection.hpp"
#include "matroid/matroid.hpp"
#include "matroid/menger.hpp"
#include "matroid/multigraph.hpp"
#include "matroid/zoo.hpp"

namespace matroid::json_io {

using Json = nlohmann::json;

namespace detail {

inline const Json& Field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline int Int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<int>();
}

inline std::string String(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

inline std::vector<std::string> Strings(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(String(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::vector<std::string> OptionalStrings(const Json& j, const char* key,
                                                const std::string& where) {
  if (!j.contains(key)) return {};
  return Strings(j.at(key), where + "." + key);
}

}  // namespace detail

inline Json SetToJson(const GroundSet& ground, const ElementSet& s) {
  return Json(ground.Names(s));
}

inline ElementSet SetFromJson(const GroundSet& ground, const Json& j, const std::string& where) {
  return ground.Parse(detail::Strings(j, where));
}

inline Multigraph GraphFromJson(const Json& j, const std::string& where = "graph") {
  std::vector<std::string> vertices = detail::Strings(detail::Field(j, "vertices", where),
                                                      where + ".vertices");
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index.emplace(vertices[i], i);
  const Json& edges = detail::Field(j, "edges", where);
  if (!edges.is_array()) throw InputError(where + ".edges: expected an array");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = where + ".edges[" + std::to_string(i) + "]";
    auto triple = detail::Strings(edges[i], at);
    if (triple.size() != 3) throw InputError(at + ": expected [label, endpoint, endpoint]");
    auto u = index.find(triple[1]);
    auto v = index.find(triple[2]);
    if (u == index.end() || v == index.end()) {
      throw InputError(at + ": edge '" + triple[0] + "' has a dangling endpoint");
    }
    out.push_back(Edge{triple[0], u->second, v->second});
  }
  return Multigraph(std::move(vertices), std::move(out));
}

inline Json GraphToJson(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({e.label, g.vertex_label(e.u), g.vertex_label(e.v)});
  }
  return Json{{"vertices", g.vertex_labels()}, {"edges", edges}};
}

// {"ground":[...],"independent":[[...],...]}; a "type":"explicit" tag is allowed.
inline ExplicitSystem SystemFromJson(const Json& j, const std::string& where = "system") {
  GroundSet ground(detail::Strings(detail::Field(j, "ground", where), where + ".ground"));
  const Json& members = detail::Field(j, "independent", where);
  if (!members.is_array()) throw InputError(where + ".independent: expected an array");
  std::vector<ElementSet> sets;
  for (std::size_t i = 0; i < members.size(); ++i) {
    sets.push_back(SetFromJson(ground, members[i], where + ".independent[" + std::to_string(i) + "]"));
  }
  return ExplicitSystem(std::move(ground), std::move(sets));
}

inline Json SystemToJson(const ExplicitSystem& system) {
  Json members = Json::array();
  for (const auto& s : system.members()) members.push_back(SetToJson(system.ground(), s));
  return Json{{"type", "explicit"}, {"ground", system.ground().labels()}, {"independent", members}};
}

inline FamilySpec SpecFromJson(const Json& j, const std::string& where = "matroid") {
  const std::string type = detail::String(detail::Field(j, "type", where), where + ".type");
  if (type == "uniform") {
    return {UniformSpec{detail::Int(detail::Field(j, "n", where), where + ".n"),
                        detail::Int(detail::Field(j, "k", where), where + ".k"),
                        detail::OptionalStrings(j, "labels", where)}};
  }
  if (type == "partition") {
    const Json& blocks = detail::Field(j, "blocks", where);
    const Json& caps = detail::Field(j, "caps", where);
    if (!blocks.is_array() || !caps.is_array()) {
      throw InputError(where + ": blocks and caps must be arrays");
    }
    PartitionSpec spec;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      spec.blocks.push_back(detail::Strings(blocks[i], where + ".blocks[" + std::to_string(i) + "]"));
    }
    for (std::size_t i = 0; i < caps.size(); ++i) {
      spec.caps.push_back(detail::Int(caps[i], where + ".caps[" + std::to_string(i) + "]"));
    }
    return {std::move(spec)};
  }
  if (type == "graphic") {
    return {GraphicSpec{GraphFromJson(detail::Field(j, "graph", where), where + ".graph")}};
  }
  if (type == "binary") {
    const Json& matrix = detail::Field(j, "matrix", where);
    if (!matrix.is_array()) throw InputError(where + ".matrix: expected an array of rows");
    BinarySpec spec;
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      const std::string at = where + ".matrix[" + std::to_string(r) + "]";
      if (!matrix[r].is_array()) throw InputError(at + ": expected a row");
      std::vector<int> row;
      for (const auto& x : matrix[r]) row.push_back(detail::Int(x, at));
      spec.rows.push_back(std::move(row));
    }
    spec.labels = detail::OptionalStrings(j, "labels", where);
    return {std::move(spec)};
  }
  if (type == "explicit") return {ExplicitSpec{SystemFromJson(j, where)}};
  if (type == "dual") {
    return {DualSpec{std::make_shared<const FamilySpec>(
        SpecFromJson(detail::Field(j, "of", where), where + ".of"))}};
  }
  if (type == "minor") {
    return {MinorSpec{std::make_shared<const FamilySpec>(
                          SpecFromJson(detail::Field(j, "of", where), where + ".of")),
                      detail::OptionalStrings(j, "contract", where),
                      detail::OptionalStrings(j, "delete", where)}};
  }
  if (type == "sum") {
    const Json& parts = detail::Field(j, "parts", where);
    if (!parts.is_array()) throw InputError(where + ".parts: expected an array");
    SumSpec spec;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      spec.parts.push_back(std::make_shared<const FamilySpec>(
          SpecFromJson(parts[i], where + ".parts[" + std::to_string(i) + "]")));
    }
    return {std::move(spec)};
  }
  throw InputError(where + ": unknown matroid type \"" + type + "\"");
}

inline Json SpecToJson(const FamilySpec& spec) {
  struct Visitor {
    Json operator()(const UniformSpec& s) const {
      Json j{{"type", "uniform"}, {"n", s.n}, {"k", s.k}};
      if (!s.labels.empty()) j["labels"] = s.labels;
      return j;
    }
    Json operator()(const PartitionSpec& s) const {
      return Json{{"type", "partition"}, {"blocks", s.blocks}, {"caps", s.caps}};
    }
    Json operator()(const GraphicSpec& s) const {
      return Json{{"type", "graphic"}, {"graph", GraphToJson(s.graph)}};
    }
    Json operator()(const BinarySpec& s) const {
      Json j{{"type", "binary"}, {"matrix", s.rows}};
      if (!s.labels.empty()) j["labels"] = s.labels;
      return j;
    }
    Json operator()(const ExplicitSpec& s) const { return SystemToJson(s.system); }
    Json operator()(const DualSpec& s) const {
      return Json{{"type", "dual"}, {"of", SpecToJson(*s.of)}};
    }
    Json operator()(const MinorSpec& s) const {
      return Json{{"type", "minor"}, {"of", SpecToJson(*s.of)}, {"contract", s.contract},
                  {"delete", s.remove}};
    }
    Json operator()(const SumSpec& s) const {
      Json parts = Json::array();
      for (const auto& p : s.parts) parts.push_back(SpecToJson(*p));
      return Json{{"type", "sum"}, {"parts", parts}};
    }
  };
  return std::visit(Visitor{}, spec.node);
}

inline Json CertificateToJson(const GroundSet& ground, const IntersectionCertificate& c) {
  return Json{{"I", SetToJson(ground, c.common)},
              {"J1", SetToJson(ground, c.j1)},
              {"J2", SetToJson(ground, c.j2)},
              {"size", c.size()}};
}

inline IntersectionCertificate CertificateFromJson(const GroundSet& ground, const Json& j) {
  return IntersectionCertificate{SetFromJson(ground, detail::Field(j, "I", "certificate"), "certificate.I"),
                                 SetFromJson(ground, detail::Field(j, "J1", "certificate"), "certificate.J1"),
                                 SetFromJson(ground, detail::Field(j, "J2", "certificate"), "certificate.J2")};
}

inline Json MengerToJson(const Multigraph& g, const MengerCertificate& c) {
  Json paths = Json::array();
  for (const auto& p : c.paths) {
    Json path = Json::array();
    for (int v : p) path.push_back(g.vertex_label(v));
    paths.push_back(path);
  }
  Json separator = Json::array();
  for (int v : c.separator) separator.push_back(g.vertex_label(v));
  return Json{{"paths", paths}, {"separator", separator}, {"count", c.paths.size()}};
}

inline MengerCertificate MengerFromJson(const Multigraph& g, const Json& j) {
  MengerCertificate c;
  const Json& paths = detail::Field(j, "paths", "certificate");
  if (!paths.is_array()) throw InputError("certificate.paths: expected an array");
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::vector<int> path;
    for (const auto& l : detail::Strings(paths[i], "certificate.paths[" + std::to_string(i) + "]")) {
      path.push_back(g.VertexIndex(l));
    }
    c.paths.push_back(std::move(path));
  }
  for (const auto& l : detail::Strings(detail::Field(j, "separator", "certificate"), "certificate.separator")) {
    c.separator.push_back(g.VertexIndex(l));
  }
  return c;
}

inline std::vector<int> VerticesFromLabels(const Multigraph& g, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(g.VertexIndex(l));
  return out;
}

// {"graph":{...},"S":[...],"T":[...]}
inline MengerInstance InstanceFromJson(const Json& j) {
  Multigraph g = GraphFromJson(detail::Field(j, "graph", "instance"), "instance.graph");
  auto s = VerticesFromLabels(g, detail::Strings(detail::Field(j, "S", "instance"), "instance.S"));
  auto t = VerticesFromLabels(g, detail::Strings(detail::Field(j, "T", "instance"), "instance.T"));
  return MakeInstance(std::move(g), std::move(s), std::move(t));
}

inline Json InstanceToJson(const MengerInstance& inst) {
  Json s = Json::array(), t = Json::array();
  for (int v : inst.s) s.push_back(inst.graph.vertex_label(v));
  for (int v : inst.t) t.push_back(inst.graph.vertex_label(v));
  return Json{{"graph", GraphToJson(inst.graph)}, {"S", s}, {"T", t}};
}

inline Json AxiomReportToJson(const GroundSet& ground, const AxiomReport& r) {
  auto pair = [&](const SetPair& p) {
    return Json::array({SetToJson(ground, p.first), SetToJson(ground, p.second)});
  };
  Json witnesses = Json::object();
  if (r.i1_witness) witnesses["I1"] = SetToJson(ground, *r.i1_witness);
  if (r.i2_witness) witnesses["I2"] = pair(*r.i2_witness);
  if (r.i3_witness) witnesses["I3"] = pair(*r.i3_witness);
  if (r.i3_maximal_witness) witnesses["I3_maximal"] = pair(*r.i3_maximal_witness);
  if (r.im_witness) witnesses["IM"] = pair(*r.im_witness);
  return Json{{"I1", r.i1_ok},           {"I2", r.i2_ok}, {"I3", r.i3_ok},
              {"I3_maximal", r.i3_maximal_ok}, {"IM", r.im_ok}, {"ok", r.ok()},
              {"witnesses", witnesses}};
}

}  // namespace matroid::json_io

#endif  // MATROID_JSON_IO_HPP_
