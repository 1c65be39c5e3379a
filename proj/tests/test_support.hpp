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

#ifndef PFAFF_TESTS_TEST_SUPPORT_HPP
#define PFAFF_TESTS_TEST_SUPPORT_HPP

// Graph builders and deliberately naive oracles shared by the tests. The
// oracles avoid the library's own enumeration code paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "pfaff/pfaff.hpp"

namespace pfaff::testing {

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) { return Graph(n, edges); }

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, e);
}

/// Outer circuit 0..4, spokes i - i+5, inner pentagram.
inline Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

/// Edge index from two letter labels ("ab").
inline int letter_edge(const Graph& g, std::string_view name) {
  return g.require_edge(name[0] - 'a', name[1] - 'a');
}

/// Every perfect matching, by testing all edge subsets of size n/2.
inline std::set<std::uint64_t> brute_one_factors(const Graph& g) {
  std::set<std::uint64_t> out;
  if (g.order() % 2 != 0) return out;
  const int m = g.size();
  const int half = g.order() / 2;
  std::vector<int> pick(m, 0);
  std::fill(pick.end() - std::min(half, m), pick.end(), 1);
  if (half > m) return out;
  do {
    std::uint32_t covered = 0;
    std::uint64_t mask = 0;
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!pick[e]) continue;
      std::uint32_t ends = (1U << g.edge(e).u) | (1U << g.edge(e).v);
      ok = (covered & ends) == 0;
      covered |= ends;
      mask |= std::uint64_t{1} << e;
    }
    if (ok) out.insert(mask);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

/// Parity of the permutation taking the vertex sequence of `a` to that of
/// `b`, by counting inversions. Each factor is written as (origin,
/// terminus) pairs in edge index order.
inline bool odd_relative(const Graph& g, const Orientation& o, std::uint64_t a, std::uint64_t b) {
  auto seq = [&](std::uint64_t mask) {
    std::vector<int> s;
    for (int e = 0; e < g.size(); ++e)
      if ((mask >> e) & 1U) {
        s.push_back(o.origin(g, e));
        s.push_back(o.terminus(g, e));
      }
    return s;
  };
  std::vector<int> sa = seq(a);
  std::vector<int> sb = seq(b);
  std::vector<int> pos(g.order());
  for (std::size_t i = 0; i < sa.size(); ++i) pos[sa[i]] = static_cast<int>(i);
  std::vector<int> perm;
  for (int v : sb) perm.push_back(pos[v]);
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
  return inversions % 2 == 1;
}

/// Pfaffian by trying every one of the 2^|E| orientations (no gauge
/// fixing); only for tiny graphs.
inline bool naive_pfaffian(const Graph& g) {
  auto factors = brute_one_factors(g);
  if (factors.size() <= 1) return true;
  const std::uint64_t base = *factors.begin();
  for (std::uint64_t rev = 0; rev < (std::uint64_t{1} << g.size()); ++rev) {
    Orientation o(g, EdgeSet(rev));
    bool constant = std::all_of(factors.begin(), factors.end(),
                                [&](std::uint64_t f) { return !odd_relative(g, o, base, f); });
    if (constant) return true;
  }
  return false;
}

/// Every even circuit of g, as edge masks, by testing all edge subsets for
/// connected 2-regularity. Only for graphs with few edges.
inline std::set<std::uint64_t> brute_even_circuits(const Graph& g) {
  std::set<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.size()); ++mask) {
    const int k = std::popcount(mask);
    if (k % 2 != 0 || k < 4) continue;
    EdgeSet es(mask);
    bool regular = true;
    for (int v : g.endpoints(es)) regular = regular && (g.incident(v) & es).size() == 2;
    if (regular && edges_connected(g, es)) out.insert(mask);
  }
  return out;
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

inline Orientation random_orientation(const Graph& g, std::mt19937_64& rng) {
  std::uint64_t bits = rng();
  return Orientation(g, EdgeSet(bits));
}

}  // namespace pfaff::testing

#endif  // PFAFF_TESTS_TEST_SUPPORT_HPP
