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

// Seeded random instances for the acceptance suite and the `gen` command.
// Draws use plain modular reduction of mt19937_64 output so that a seed
// yields the same instance on every standard library.

#ifndef MATROID_GENERATE_HPP_
#define MATROID_GENERATE_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matroid/menger.hpp"
#include "matroid/multigraph.hpp"
#include "matroid/zoo.hpp"

namespace matroid::generate {

using Rng = std::mt19937_64;

// Uniform-ish integer in [lo, hi].
inline int Draw(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline bool Coin(Rng& rng, int percent) { return Draw(rng, 0, 99) < percent; }

enum class Family { kUniform, kPartition, kGraphic, kBinary };

// A single base family on exactly the given labels.
inline SpecPtr RandomBase(Rng& rng, const std::vector<std::string>& labels, Family family) {
  const int n = static_cast<int>(labels.size());
  switch (family) {
    case Family::kUniform:
      return MakeSpec(UniformSpec{n, Draw(rng, 0, n), labels});
    case Family::kPartition: {
      const int blocks = Draw(rng, 1, std::max(1, n));
      PartitionSpec spec;
      spec.blocks.resize(blocks);
      for (int i = 0; i < n; ++i) {
        // The first elements seed each block so none stays empty.
        spec.blocks[i < blocks ? i : Draw(rng, 0, blocks - 1)].push_back(labels[i]);
      }
      for (const auto& b : spec.blocks) {
        spec.caps.push_back(Draw(rng, 0, static_cast<int>(b.size()) + 1));
      }
      return MakeSpec(std::move(spec));
    }
    case Family::kGraphic: {
      const int nv = Draw(rng, 1, n + 1);
      std::vector<std::string> vertices;
      for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i) {
        int u = Draw(rng, 0, nv - 1);
        int v = Coin(rng, 10) ? u : Draw(rng, 0, nv - 1);
        edges.push_back(Edge{labels[i], u, v});
      }
      return MakeSpec(GraphicSpec{Multigraph(std::move(vertices), std::move(edges))});
    }
    case Family::kBinary: {
      const int rows = Draw(rng, 1, 4);
      BinarySpec spec;
      spec.labels = labels;
      spec.rows.assign(rows, std::vector<int>(n, 0));
      for (auto& row : spec.rows) {
        for (int& x : row) x = Draw(rng, 0, 1);
      }
      return MakeSpec(std::move(spec));
    }
  }
  return nullptr;
}

// A family, dual, minor, or direct sum (composition depth <= `depth`) on
// exactly the given labels, in order.
inline SpecPtr RandomFamily(Rng& rng, const std::vector<std::string>& labels, int depth) {
  const int n = static_cast<int>(labels.size());
  const int choice = depth > 0 ? Draw(rng, 0, 6) : Draw(rng, 0, 3);
  if (choice < 4) return RandomBase(rng, labels, static_cast<Family>(choice));
  if (choice == 4) return MakeSpec(DualSpec{RandomFamily(rng, labels, depth - 1)});
  if (choice == 5) {
    // Extra elements are appended so the survivors keep their order.
    std::vector<std::string> extended = labels;
    MinorSpec spec;
    const int extra = Draw(rng, 1, 2);
    for (int i = 0, k = 0; i < extra; ++i) {
      std::string label;
      do {
        label = "x" + std::to_string(k++);
      } while (std::find(extended.begin(), extended.end(), label) != extended.end());
      extended.push_back(label);
      (Coin(rng, 50) ? spec.contract : spec.remove).push_back(label);
    }
    spec.of = RandomFamily(rng, extended, depth - 1);
    return MakeSpec(std::move(spec));
  }
  if (n < 2) return RandomBase(rng, labels, static_cast<Family>(Draw(rng, 0, 3)));
  const int cut = Draw(rng, 1, n - 1);
  SumSpec spec;
  spec.parts.push_back(RandomFamily(rng, {labels.begin(), labels.begin() + cut}, depth - 1));
  spec.parts.push_back(RandomFamily(rng, {labels.begin() + cut, labels.end()}, depth - 1));
  return MakeSpec(std::move(spec));
}

inline std::vector<std::string> Letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  }
  return out;
}

// Two families over a common ground set of min_ground..max_ground elements.
inline std::pair<SpecPtr, SpecPtr> RandomPair(Rng& rng, int max_ground = 8, int depth = 2,
                                              int min_ground = 1) {
  const auto labels = Letters(Draw(rng, std::min(min_ground, max_ground), max_ground));
  SpecPtr first = RandomFamily(rng, labels, depth);
  SpecPtr second = RandomFamily(rng, labels, depth);
  return {first, second};
}

// Connected multigraph (random spanning tree plus extra edges, parallels
// allowed) with terminal sets that sometimes overlap or coincide.
inline MengerInstance RandomMengerInstance(Rng& rng, int max_vertices = 10, int max_edges = 20) {
  const int nv = Draw(rng, 2, max_vertices);
  std::vector<std::string> vertices;
  for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<Edge> edges;
  for (int v = 1; v < nv; ++v) {
    edges.push_back(Edge{"e" + std::to_string(edges.size()), Draw(rng, 0, v - 1), v});
  }
  const int total = Draw(rng, nv - 1, std::max(nv - 1, max_edges));
  while (static_cast<int>(edges.size()) < total) {
    int u = Draw(rng, 0, nv - 1);
    int v = Draw(rng, 0, nv - 1);
    if (u == v && !Coin(rng, 10)) continue;
    edges.push_back(Edge{"e" + std::to_string(edges.size()), u, v});
  }

  auto pick = [&](int lo, int hi) {
    std::vector<int> out;
    const int k = Draw(rng, lo, hi);
    while (static_cast<int>(out.size()) < k) {
      int v = Draw(rng, 0, nv - 1);
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
  };
  std::vector<int> s = pick(1, std::max(1, nv / 2));
  std::vector<int> t;
  const int mode = Draw(rng, 0, 9);
  if (mode == 0) {
    t = s;  // S = T
  } else if (mode <= 2) {
    t = pick(1, std::max(1, nv / 2));  // may overlap S
    t.push_back(s.front());
  } else {
    std::vector<int> rest;
    for (int v = 0; v < nv; ++v) {
      if (std::find(s.begin(), s.end(), v) == s.end()) rest.push_back(v);
    }
    if (rest.empty()) {
      t = s;
    } else {
      const int k = Draw(rng, 1, std::max(1, static_cast<int>(rest.size()) / 2 + 1));
      for (int i = 0; i < k && !rest.empty(); ++i) {
        int j = Draw(rng, 0, static_cast<int>(rest.size()) - 1);
        t.push_back(rest[j]);
        rest.erase(rest.begin() + j);
      }
    }
  }
  return MakeInstance(Multigraph(std::move(vertices), std::move(edges)), std::move(s), std::move(t));
}

}  // namespace matroid::generate

#endif  // MATROID_GENERATE_HPP_
