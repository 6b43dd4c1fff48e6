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

#ifndef MATROID_ELEMENT_SET_HPP_
#define MATROID_ELEMENT_SET_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "matroid/error.hpp"

namespace matroid {

// A subset of the ground set {0, ..., universe-1}, stored as a bitset.
// Iteration visits elements in increasing id, which is the canonical
// element order used by every algorithm in this library.
class ElementSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const ElementSet* set, int pos) : set_(set), pos_(pos) {}
    int operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = set_->NextFrom(pos_ + 1);
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

   private:
    const ElementSet* set_ = nullptr;
    int pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(int universe)
      : universe_(universe), words_(WordCount(universe), 0) {
    if (universe < 0) throw InputError("negative universe size");
  }
  ElementSet(int universe, std::initializer_list<int> ids) : ElementSet(universe) {
    for (int e : ids) insert(e);
  }

  static ElementSet Full(int universe) {
    ElementSet s(universe);
    for (int e = 0; e < universe; ++e) s.insert(e);
    return s;
  }
  static ElementSet FromIds(int universe, std::span<const int> ids) {
    ElementSet s(universe);
    for (int e : ids) s.insert(e);
    return s;
  }
  // Bit i of `mask` selects element i. Requires universe <= 64.
  static ElementSet FromMask(int universe, std::uint64_t mask) {
    ElementSet s(universe);
    if (universe < 64 && (mask >> universe) != 0) {
      throw InputError("mask has bits outside the universe");
    }
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  int universe() const { return universe_; }
  int size() const {
    int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  bool contains(int e) const {
    return e >= 0 && e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U);
  }
  void insert(int e) {
    CheckRange(e);
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
  }
  void erase(int e) {
    CheckRange(e);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }
  ElementSet with(int e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }
  ElementSet without(int e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  bool IsSubsetOf(const ElementSet& other) const {
    CheckSameUniverse(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }
  bool Intersects(const ElementSet& other) const {
    CheckSameUniverse(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }
  ElementSet Complement() const {
    ElementSet s = Full(universe_);
    s -= *this;
    return s;
  }

  ElementSet& operator|=(const ElementSet& other) {
    CheckSameUniverse(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    CheckSameUniverse(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& other) {
    CheckSameUniverse(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

  // Smallest element, or -1 when empty.
  int First() const { return NextFrom(0) == universe_ ? -1 : NextFrom(0); }

  std::uint64_t ToMask() const {
    if (universe_ > 64) throw CapacityError("set too large for a 64-bit mask");
    return words_.empty() ? 0 : words_[0];
  }
  std::vector<int> ToVector() const { return std::vector<int>(begin(), end()); }

  Iterator begin() const { return Iterator(this, NextFrom(0)); }
  Iterator end() const { return Iterator(this, universe_); }

 private:
  static std::size_t WordCount(int universe) {
    return universe <= 0 ? 0 : static_cast<std::size_t>((universe + 63) / 64);
  }
  void CheckRange(int e) const {
    if (e < 0 || e >= universe_) {
      throw InputError("element " + std::to_string(e) +
                       " out of ground-set range [0, " +
                       std::to_string(universe_) + ")");
    }
  }
  void CheckSameUniverse(const ElementSet& other) const {
    if (universe_ != other.universe_) {
      throw InputError("element sets over different ground sets");
    }
  }
  int NextFrom(int pos) const {
    while (pos < universe_) {
      std::uint64_t w = words_[pos >> 6] >> (pos & 63);
      if (w != 0) return std::min(universe_, pos + std::countr_zero(w));
      pos = (pos | 63) + 1;
    }
    return universe_;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic comparison of the increasing id sequences.
inline bool LexLess(const ElementSet& a, const ElementSet& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

// Canonical order for reporting families of sets: by size, then lexicographic.
inline bool CanonicalLess(const ElementSet& a, const ElementSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return LexLess(a, b);
}

}  // namespace matroid

#endif  // MATROID_ELEMENT_SET_HPP_
