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

// Independence-oracle matroids over a finite, labeled ground set, and the
// services derived from the oracle: rank, closure, fundamental circuits,
// maximal extensions, duals and minors.
//
// A Matroid is a cheap-to-copy immutable handle. Dual and minor handles are
// lazy wrappers that answer through the parent's oracle, so compositions of
// any depth cost nothing to build.

#ifndef MATROID_MATROID_HPP_
#define MATROID_MATROID_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroid/element_set.hpp"
#include "matroid/error.hpp"

namespace matroid {

// Bound on the ground-set size of exhaustive enumerations (circuits,
// orthogonality, min-rank sweeps).
inline constexpr int kDefaultEnumerationBound = 12;

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (int i = 0; i < size(); ++i) {
      if (labels_[i].empty()) throw InputError("empty element label");
      if (!index_.emplace(labels_[i], i).second) {
        throw InputError("duplicate element label '" + labels_[i] + "'");
      }
    }
  }

  // Labels "0", "1", ..., "n-1" (with an optional prefix).
  static GroundSet Indexed(int n, std::string_view prefix = "") {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
    return GroundSet(std::move(labels));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> Find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int IndexOf(std::string_view label) const {
    auto e = Find(label);
    if (!e) throw InputError("unknown element '" + std::string(label) + "'");
    return *e;
  }
  ElementSet Parse(std::span<const std::string> labels) const {
    ElementSet s(size());
    for (const auto& l : labels) s.insert(IndexOf(l));
    return s;
  }
  std::vector<std::string> Names(const ElementSet& s) const {
    std::vector<std::string> out;
    for (int e : s) out.push_back(label(e));
    return out;
  }

  ElementSet None() const { return ElementSet(size()); }
  ElementSet All() const { return ElementSet::Full(size()); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// The independence predicate behind a handle. Implementations must be pure
// and thread-safe; sets passed in are already range-checked.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual bool Independent(const ElementSet& x) const = 0;
  // Greedy sweep in canonical order; overridden where an identity is cheaper.
  virtual int Rank(const ElementSet& x) const {
    ElementSet basis(x.universe());
    for (int e : x) {
      ElementSet grown = basis.with(e);
      if (Independent(grown)) basis = std::move(grown);
    }
    return basis.size();
  }
  // Construction expression, e.g. "dual(uniform(4,2))".
  virtual std::string Describe() const = 0;
};

class Matroid {
 public:
  Matroid() = default;
  Matroid(GroundSet ground, std::shared_ptr<const MatroidOracle> oracle)
      : ground_(std::make_shared<const GroundSet>(std::move(ground))),
        oracle_(std::move(oracle)) {}

  const GroundSet& ground() const { return *ground_; }
  int size() const { return ground_->size(); }
  std::string provenance() const { return oracle_->Describe(); }

  bool IsIndependent(const ElementSet& x) const {
    Check(x);
    return oracle_->Independent(x);
  }
  int Rank(const ElementSet& x) const {
    Check(x);
    return oracle_->Rank(x);
  }
  int FullRank() const { return Rank(ground_->All()); }

  void Check(const ElementSet& x) const {
    if (x.universe() != size()) {
      throw InputError("element set over a ground set of size " +
                       std::to_string(x.universe()) + ", matroid has " +
                       std::to_string(size()));
    }
  }

 private:
  std::shared_ptr<const GroundSet> ground_ = std::make_shared<const GroundSet>();
  std::shared_ptr<const MatroidOracle> oracle_;
};

template <typename Pred>
class PredicateOracle final : public MatroidOracle {
 public:
  PredicateOracle(Pred pred, std::string description)
      : pred_(std::move(pred)), description_(std::move(description)) {}
  bool Independent(const ElementSet& x) const override { return pred_(x); }
  std::string Describe() const override { return description_; }

 private:
  Pred pred_;
  std::string description_;
};

// Wraps a pure callable `bool(const ElementSet&)` as a matroid handle.
template <typename Pred>
Matroid MakeMatroid(GroundSet ground, Pred pred, std::string description) {
  return Matroid(std::move(ground), std::make_shared<PredicateOracle<Pred>>(
                                        std::move(pred), std::move(description)));
}

inline bool IsIndependent(const Matroid& m, const ElementSet& x) {
  return m.IsIndependent(x);
}

inline int Rank(const Matroid& m, const ElementSet& x) { return m.Rank(x); }

// Greedy extension of the independent set `base` inside `within`, scanning
// in canonical order.
inline ElementSet MaximalExtension(const Matroid& m, const ElementSet& base,
                                   const ElementSet& within) {
  m.Check(base);
  m.Check(within);
  if (!base.IsSubsetOf(within)) throw InputError("extension seed not inside target set");
  if (!m.IsIndependent(base)) throw InputError("extension seed is dependent");
  ElementSet result = base;
  for (int e : within - base) {
    ElementSet grown = result.with(e);
    if (m.IsIndependent(grown)) result = std::move(grown);
  }
  return result;
}

inline ElementSet Closure(const Matroid& m, const ElementSet& x) {
  ElementSet basis = MaximalExtension(m, ElementSet(m.size()), x);
  ElementSet result = x;
  for (int e = 0; e < m.size(); ++e) {
    if (!x.contains(e) && !m.IsIndependent(basis.with(e))) result.insert(e);
  }
  return result;
}

// The unique circuit inside independent + x. Throws NoCircuitError when
// independent + x is itself independent.
inline ElementSet FundamentalCircuit(const Matroid& m, const ElementSet& independent,
                                     int x) {
  m.Check(independent);
  if (x < 0 || x >= m.size()) throw InputError("element out of ground-set range");
  if (independent.contains(x)) throw InputError("element already in the independent set");
  if (!m.IsIndependent(independent)) throw InputError("fundamental circuit of a dependent set");
  ElementSet grown = independent.with(x);
  if (m.IsIndependent(grown)) {
    throw NoCircuitError("no fundamental circuit: set stays independent");
  }
  ElementSet circuit(m.size());
  circuit.insert(x);
  for (int b : independent) {
    if (m.IsIndependent(grown.without(b))) circuit.insert(b);
  }
  return circuit;
}

namespace internal {

class DualOracle final : public MatroidOracle {
 public:
  explicit DualOracle(Matroid primal)
      : primal_(std::move(primal)), full_rank_(primal_.FullRank()) {}
  bool Independent(const ElementSet& x) const override {
    return primal_.Rank(x.Complement()) == full_rank_;
  }
  int Rank(const ElementSet& x) const override {
    return x.size() + primal_.Rank(x.Complement()) - full_rank_;
  }
  std::string Describe() const override { return "dual(" + primal_.provenance() + ")"; }

 private:
  Matroid primal_;
  int full_rank_;
};

// Elements of the child are a subsequence of the parent's, given by `lift`.
class MinorOracle final : public MatroidOracle {
 public:
  MinorOracle(Matroid parent, ElementSet contract, std::vector<int> lift,
              std::string description)
      : parent_(std::move(parent)),
        contract_(std::move(contract)),
        contract_basis_(MaximalExtension(parent_, ElementSet(parent_.size()), contract_)),
        lift_(std::move(lift)),
        description_(std::move(description)) {}
  bool Independent(const ElementSet& x) const override {
    return parent_.IsIndependent(Lift(x) | contract_basis_);
  }
  int Rank(const ElementSet& x) const override {
    return parent_.Rank(Lift(x) | contract_) - contract_basis_.size();
  }
  std::string Describe() const override { return description_; }

 private:
  ElementSet Lift(const ElementSet& x) const {
    ElementSet out(parent_.size());
    for (int e : x) out.insert(lift_[e]);
    return out;
  }

  Matroid parent_;
  ElementSet contract_;
  ElementSet contract_basis_;
  std::vector<int> lift_;
  std::string description_;
};

inline std::string DescribeSet(const GroundSet& ground, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ",";
    out += ground.label(e);
    first = false;
  }
  return out + "}";
}

}  // namespace internal

inline Matroid Dual(const Matroid& m) {
  return Matroid(m.ground(), std::make_shared<internal::DualOracle>(m));
}

// M / contract - remove. The minor's ground set keeps the surviving labels
// in their original relative order.
inline Matroid Minor(const Matroid& m, const ElementSet& contract, const ElementSet& remove) {
  m.Check(contract);
  m.Check(remove);
  if (contract.Intersects(remove)) throw InputError("contract and delete sets overlap");
  std::vector<int> lift;
  std::vector<std::string> labels;
  for (int e = 0; e < m.size(); ++e) {
    if (contract.contains(e) || remove.contains(e)) continue;
    lift.push_back(e);
    labels.push_back(m.ground().label(e));
  }
  std::string description = "minor(" + m.provenance() + ",contract=" +
                            internal::DescribeSet(m.ground(), contract) + ",delete=" +
                            internal::DescribeSet(m.ground(), remove) + ")";
  return Matroid(GroundSet(std::move(labels)),
                 std::make_shared<internal::MinorOracle>(m, contract, std::move(lift),
                                                         std::move(description)));
}

// Re-indexes `m` onto `target`, which must hold the same labels in any order.
inline Matroid AlignTo(const Matroid& m, const GroundSet& target) {
  if (m.ground() == target) return m;
  if (m.size() != target.size()) throw InputError("ground sets differ in size");
  std::vector<int> lift;
  for (const auto& l : target.labels()) {
    auto e = m.ground().Find(l);
    if (!e) throw InputError("ground sets differ: '" + l + "' missing");
    lift.push_back(*e);
  }
  return Matroid(target, std::make_shared<internal::MinorOracle>(
                             m, ElementSet(m.size()), std::move(lift), m.provenance()));
}

}  // namespace matroid

#endif  // MATROID_MATROID_HPP_
