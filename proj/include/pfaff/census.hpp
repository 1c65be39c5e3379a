// Copyright 2026 The pfaffkit Authors
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

#ifndef PFAFF_CENSUS_HPP
#define PFAFF_CENSUS_HPP

// Small graph corpora: every connected graph up to isomorphism on a given
// number of vertices, and seeded random graphs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"
#include "pfaff/isomorphism.hpp"

namespace pfaff {

/// One graph per isomorphism class on n vertices (n <= 9), grown one edge
/// at a time and deduplicated by canonical code. Ordered by edge count,
/// then by code.
inline std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 9) throw InvalidArgument("census supports 0 to 9 vertices");
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(n, std::vector<std::pair<int, int>>{})};
  while (!level.empty()) {
    for (const Graph& g : level) out.push_back(g);
    std::map<std::uint64_t, Graph> next;
    for (const Graph& g : level) {
      auto pairs = g.edge_pairs();
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (g.adjacent(a, b)) continue;
          pairs.emplace_back(a, b);
          Graph h(n, pairs);
          pairs.pop_back();
          next.try_emplace(canonical_code(h), std::move(h));
        }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return out;
}

inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

/// G(n, p) with a seeded generator.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) pairs.emplace_back(a, b);
  return Graph(n, pairs);
}

}  // namespace pfaff

#endif  // PFAFF_CENSUS_HPP
