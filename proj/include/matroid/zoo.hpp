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

// Concrete matroid families and the FamilySpec tree that describes them.

#ifndef MATROID_ZOO_HPP_
#define MATROID_ZOO_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "matroid/axioms.hpp"
#include "matroid/element_set.hpp"
#include "matroid/error.hpp"
#include "matroid/matroid.hpp"
#include "matroid/multigraph.hpp"

namespace matroid {

inline Matroid Uniform(int n, int k, std::vector<std::string> labels = {}) {
  if (n < 0 || k < 0) throw InputError("uniform matroid needs n >= 0 and k >= 0");
  GroundSet ground = labels.empty() ? GroundSet::Indexed(n) : GroundSet(std::move(labels));
  if (ground.size() != n) throw InputError("uniform matroid label count differs from n");
  return MakeMatroid(
      std::move(ground), [k](const ElementSet& x) { return x.size() <= k; },
      "uniform(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

inline Matroid FreeMatroid(int n, std::vector<std::string> labels = {}) {
  return Uniform(n, n, std::move(labels));
}

// Every element a loop.
inline Matroid RankZero(int n, std::vector<std::string> labels = {}) {
  return Uniform(n, 0, std::move(labels));
}

// Blocks partition the ground set (listed in block order). A capacity above
// the block size behaves like the block size; capacity 0 makes loops.
inline Matroid Partition(const std::vector<std::vector<std::string>>& blocks,
                         const std::vector<int>& caps) {
  if (blocks.size() != caps.size()) throw InputError("one capacity per block required");
  std::vector<std::string> labels;
  std::vector<int> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (caps[b] < 0) throw InputError("negative partition capacity");
    for (const auto& l : blocks[b]) {
      labels.push_back(l);
      block_of.push_back(static_cast<int>(b));
    }
  }
  GroundSet ground(std::move(labels));  // rejects elements shared by two blocks
  std::string description = "partition(";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    description += (b ? ";" : "") + std::to_string(blocks[b].size()) + ":" + std::to_string(caps[b]);
  }
  description += ")";
  return MakeMatroid(
      std::move(ground),
      [block_of, caps](const ElementSet& x) {
        std::vector<int> used(caps.size(), 0);
        for (int e : x) {
          if (++used[block_of[e]] > caps[block_of[e]]) return false;
        }
        return true;
      },
      std::move(description));
}

namespace internal {

class GraphicOracle final : public MatroidOracle {
 public:
  explicit GraphicOracle(Multigraph g) : g_(std::move(g)) {}
  bool Independent(const ElementSet& x) const override {
    UnionFind uf(g_.vertex_count());
    for (int e : x) {
      if (!uf.Union(g_.edge(e).u, g_.edge(e).v)) return false;  // loops fail here too
    }
    return true;
  }
  int Rank(const ElementSet& x) const override {
    UnionFind uf(g_.vertex_count());
    int rank = 0;
    for (int e : x) rank += uf.Union(g_.edge(e).u, g_.edge(e).v) ? 1 : 0;
    return rank;
  }
  std::string Describe() const override {
    return "graphic(V=" + std::to_string(g_.vertex_count()) +
           ",E=" + std::to_string(g_.edge_count()) + ")";
  }

 private:
  Multigraph g_;
};

// Columns as bit vectors over GF(2), one word per 64 rows.
class BinaryOracle final : public MatroidOracle {
 public:
  BinaryOracle(std::vector<std::vector<std::uint64_t>> columns, int rows, int cols)
      : columns_(std::move(columns)), rows_(rows), cols_(cols) {}
  bool Independent(const ElementSet& x) const override { return Rank(x) == x.size(); }
  int Rank(const ElementSet& x) const override {
    // Reduced basis keyed by leading bit.
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<int> pivot;
    for (int e : x) {
      std::vector<std::uint64_t> v = columns_[e];
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if ((v[pivot[i] >> 6] >> (pivot[i] & 63)) & 1U) {
          for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= basis[i][w];
        }
      }
      int lead = -1;
      for (int r = 0; r < rows_; ++r) {
        if ((v[r >> 6] >> (r & 63)) & 1U) {
          lead = r;
          break;
        }
      }
      if (lead < 0) continue;
      basis.push_back(std::move(v));
      pivot.push_back(lead);
    }
    return static_cast<int>(basis.size());
  }
  std::string Describe() const override {
    return "binary(" + std::to_string(rows_) + "x" + std::to_string(cols_) + ")";
  }

 private:
  std::vector<std::vector<std::uint64_t>> columns_;
  int rows_;
  int cols_;
};

class SumOracle final : public MatroidOracle {
 public:
  explicit SumOracle(std::vector<Matroid> parts) : parts_(std::move(parts)) {}
  bool Independent(const ElementSet& x) const override {
    int offset = 0;
    for (const auto& p : parts_) {
      if (!p.IsIndependent(Slice(x, offset, p.size()))) return false;
      offset += p.size();
    }
    return true;
  }
  int Rank(const ElementSet& x) const override {
    int offset = 0, rank = 0;
    for (const auto& p : parts_) {
      rank += p.Rank(Slice(x, offset, p.size()));
      offset += p.size();
    }
    return rank;
  }
  std::string Describe() const override {
    std::string out = "sum(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      out += (i ? "," : "") + parts_[i].provenance();
    }
    return out + ")";
  }

 private:
  static ElementSet Slice(const ElementSet& x, int offset, int n) {
    ElementSet out(n);
    for (int e = 0; e < n; ++e) {
      if (x.contains(offset + e)) out.insert(e);
    }
    return out;
  }

  std::vector<Matroid> parts_;
};

}  // namespace internal

// Cycle matroid: independent sets are the forests (loops are circuits of
// size 1, parallel pairs circuits of size 2).
inline Matroid Graphic(const Multigraph& g) {
  return Matroid(g.edge_ground(), std::make_shared<internal::GraphicOracle>(g));
}

// Column matroid over GF(2) of a 0/1 matrix given as rows.
inline Matroid Binary(const std::vector<std::vector<int>>& rows,
                      std::vector<std::string> labels = {}) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? static_cast<int>(labels.size()) : static_cast<int>(rows.front().size());
  const std::size_t words = r == 0 ? 1 : static_cast<std::size_t>((r + 63) / 64);
  std::vector<std::vector<std::uint64_t>> columns(c, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged binary matrix");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw InputError("binary matrix entries must be 0 or 1");
      if (rows[i][j]) columns[j][i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
  GroundSet ground = labels.empty() ? GroundSet::Indexed(c) : GroundSet(std::move(labels));
  if (ground.size() != c) throw InputError("binary matroid label count differs from column count");
  return Matroid(std::move(ground),
                 std::make_shared<internal::BinaryOracle>(std::move(columns), r, c));
}

// Independence is membership; the axioms are not checked here.
inline Matroid Explicit(const ExplicitSystem& system) {
  std::unordered_set<std::string> keys;
  auto key = [](const ElementSet& s) {
    std::string k;
    for (int e : s) k += std::to_string(e) + ",";
    return k;
  };
  for (const auto& s : system.members()) keys.insert(key(s));
  return MakeMatroid(
      system.ground(), [keys = std::move(keys), key](const ElementSet& x) { return keys.count(key(x)) > 0; },
      "explicit(" + std::to_string(system.members().size()) + " sets)");
}

// Direct sum. Labels are kept when they are distinct across parts and
// prefixed with "<part index>:" otherwise.
inline Matroid DirectSum(std::vector<Matroid> parts) {
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  bool clash = false;
  for (const auto& p : parts) {
    for (const auto& l : p.ground().labels()) clash |= !seen.insert(l).second;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& l : parts[i].ground().labels()) {
      labels.push_back(clash ? std::to_string(i) + ":" + l : l);
    }
  }
  return Matroid(GroundSet(std::move(labels)),
                 std::make_shared<internal::SumOracle>(std::move(parts)));
}

// Declarative description of a matroid; mirrors the handle's provenance tree.
struct FamilySpec;
using SpecPtr = std::shared_ptr<const FamilySpec>;

struct UniformSpec {
  int n = 0;
  int k = 0;
  std::vector<std::string> labels;
};
struct PartitionSpec {
  std::vector<std::vector<std::string>> blocks;
  std::vector<int> caps;
};
struct GraphicSpec {
  Multigraph graph;
};
struct BinarySpec {
  std::vector<std::vector<int>> rows;
  std::vector<std::string> labels;
};
struct ExplicitSpec {
  ExplicitSystem system;
};
struct DualSpec {
  SpecPtr of;
};
struct MinorSpec {
  SpecPtr of;
  std::vector<std::string> contract;
  std::vector<std::string> remove;
};
struct SumSpec {
  std::vector<SpecPtr> parts;
};

struct FamilySpec {
  std::variant<UniformSpec, PartitionSpec, GraphicSpec, BinarySpec, ExplicitSpec, DualSpec,
               MinorSpec, SumSpec>
      node;
};

template <typename T>
SpecPtr MakeSpec(T node) {
  return std::make_shared<const FamilySpec>(FamilySpec{std::move(node)});
}

inline Matroid Build(const FamilySpec& spec) {
  struct Visitor {
    Matroid operator()(const UniformSpec& s) const { return Uniform(s.n, s.k, s.labels); }
    Matroid operator()(const PartitionSpec& s) const { return Partition(s.blocks, s.caps); }
    Matroid operator()(const GraphicSpec& s) const { return Graphic(s.graph); }
    Matroid operator()(const BinarySpec& s) const { return Binary(s.rows, s.labels); }
    Matroid operator()(const ExplicitSpec& s) const { return Explicit(s.system); }
    Matroid operator()(const DualSpec& s) const {
      if (!s.of) throw InputError("dual without an operand");
      return Dual(Build(*s.of));
    }
    Matroid operator()(const MinorSpec& s) const {
      if (!s.of) throw InputError("minor without an operand");
      Matroid m = Build(*s.of);
      return Minor(m, m.ground().Parse(s.contract), m.ground().Parse(s.remove));
    }
    Matroid operator()(const SumSpec& s) const {
      std::vector<Matroid> parts;
      for (const auto& p : s.parts) {
        if (!p) throw InputError("sum with an empty part");
        parts.push_back(Build(*p));
      }
      return DirectSum(std::move(parts));
    }
  };
  return std::visit(Visitor{}, spec.node);
}

}  // namespace matroid

#endif  // MATROID_ZOO_HPP_
