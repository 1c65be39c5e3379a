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

#ifndef PFAFF_ISOMORPHISM_HPP
#define PFAFF_ISOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"

namespace pfaff {

namespace detail {

/// Colour refinement: repeatedly splits colour classes by the multiset of
/// neighbour colours. Colours are ranks of invariant signatures, so the
/// result commutes with relabelling.
inline std::vector<int> refine(const std::vector<std::vector<int>>& adj,
                               std::vector<int> colour) {
  const int n = static_cast<int>(adj.size());
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      for (int w : adj[v]) sig[v].push_back(colour[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<int>> keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) -
                                   keys.begin());
    const int now = static_cast<int>(keys.size());
    if (now == classes) return colour;
    classes = now;
  }
}

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g, int offset = 0) {
  std::vector<std::vector<int>> adj(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbours(v)) adj[v].push_back(w + offset);
  return adj;
}

inline std::vector<int> refine(const Graph& g, std::vector<int> colour) {
  return refine(adjacency_lists(g), std::move(colour));
}

}  // namespace detail

/// Finds a bijection map with a ~ b iff map[a] ~ map[b], searching vertices
/// of `a` in breadth-first order and candidates smallest-id-first.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return std::nullopt;
  if (degree_sequence(a) != degree_sequence(b)) return std::nullopt;

  // Joint refinement keeps colours comparable across the two graphs.
  std::vector<std::vector<int>> adj = detail::adjacency_lists(a);
  for (auto& list : detail::adjacency_lists(b, n)) adj.push_back(std::move(list));
  std::vector<int> colour(2 * n);
  for (int v = 0; v < n; ++v) {
    colour[v] = a.degree(v);
    colour[v + n] = b.degree(v);
  }
  colour = detail::refine(adj, colour);
  {
    std::vector<int> ca(colour.begin(), colour.begin() + n);
    std::vector<int> cb(colour.begin() + n, colour.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }

  std::vector<int> order;
  {
    VertexSet seen;
    for (int s = 0; s < n; ++s) {
      if (seen.contains(s)) continue;
      seen.insert(s);
      std::size_t head = order.size();
      order.push_back(s);
      while (head < order.size()) {
        int v = order[head++];
        for (int w : a.neighbours(v))
          if (!seen.contains(w)) {
            seen.insert(w);
            order.push_back(w);
          }
      }
    }
  }

  std::vector<int> map(n, -1);
  VertexSet used;
  std::function<bool(int)> place = [&](int depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    VertexSet candidates = b.vertices() - used;
    for (int u : a.neighbours(v))
      if (map[u] >= 0) candidates &= b.neighbours(map[u]);
    for (int w : candidates) {
      if (colour[w + n] != colour[v]) continue;
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        if (map[u] >= 0 && a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used.insert(w);
      if (place(depth + 1)) return true;
      map[v] = -1;
      used.erase(w);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

/// Canonical code of a graph on at most 11 vertices: the smallest upper
/// triangle adjacency word over all labellings reached by
/// individualisation-refinement. Two graphs are isomorphic iff their codes
/// (together with their orders) are equal.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw InvalidArgument("canonical_code supports at most 11 vertices");
  auto code_of = [&](const std::vector<int>& pos) {
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[pos[v]] = v;
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(at[i], at[j]) ? 1U : 0U);
    return code;
  };

  std::vector<int> start(n);
  for (int v = 0; v < n; ++v) start[v] = g.degree(v);
  std::optional<std::uint64_t> best;

  std::function<void(const std::vector<int>&)> search = [&](const std::vector<int>& colour) {
    std::vector<int> count(n, 0);
    for (int c : colour) ++count[c];
    int cell = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        cell = c;
        break;
      }
    if (cell < 0) {
      std::uint64_t code = code_of(colour);
      if (!best || code < *best) best = code;
      return;
    }
    // Twins inside the target cell are swapped by an automorphism that fixes
    // everything else, so one representative per twin class suffices.
    std::vector<int> reps;
    for (int v = 0; v < n; ++v) {
      if (colour[v] != cell) continue;
      bool twin = false;
      for (int r : reps) {
        VertexSet nv = g.neighbours(v), nr = g.neighbours(r);
        nv.erase(r);
        nr.erase(v);
        if (nv == nr) {
          twin = true;
          break;
        }
      }
      if (!twin) reps.push_back(v);
    }
    for (int v : reps) {
      std::vector<int> next(n);
      for (int u = 0; u < n; ++u) next[u] = 2 * colour[u] + (u == v ? 0 : 1);
      search(detail::refine(g, next));
    }
  };
  search(detail::refine(g, start));
  return *best;
}

}  // namespace pfaff

#endif  // PFAFF_ISOMORPHISM_HPP
