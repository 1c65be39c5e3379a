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

#ifndef PFAFF_CYCLES_HPP
#define PFAFF_CYCLES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"

namespace pfaff {

/// A circuit, identified with its edge set, plus a traversal sense given as
/// a cyclic vertex order: sense[i] is joined to sense[i+1] (wrapping).
struct EdgeCycle {
  EdgeSet edges;
  std::vector<int> sense;

  int length() const { return edges.size(); }
  bool is_even() const { return length() % 2 == 0; }

  /// Same circuit traversed the other way round, starting at the same vertex.
  EdgeCycle reversed() const {
    EdgeCycle out{edges, sense};
    if (out.sense.size() > 1) std::reverse(out.sense.begin() + 1, out.sense.end());
    return out;
  }

  bool operator==(const EdgeCycle& o) const { return edges == o.edges; }
};

/// Checks that `es` is a single circuit and returns it with a sense that
/// starts at its smallest vertex and continues to the smaller neighbour.
inline EdgeCycle make_cycle(const Graph& g, EdgeSet es) {
  if (es.size() < 3) throw InvalidArgument("a circuit needs at least three edges");
  VertexSet vs = g.endpoints(es);
  for (int v : vs)
    if ((g.incident(v) & es).size() != 2)
      throw InvalidArgument("edge set is not 2-regular at vertex " + g.label(v));
  if (!edges_connected(g, es)) throw InvalidArgument("edge set is not a single circuit");
  EdgeCycle c{es, {}};
  int start = vs.front();
  int prev = -1;
  int cur = start;
  do {
    c.sense.push_back(cur);
    EdgeSet at = g.incident(cur) & es;
    int next = -1;
    for (int e : at) {
      int w = g.edge(e).other(cur);
      if (w == prev) continue;
      if (next < 0 || (prev < 0 && w < next)) next = w;
    }
    prev = cur;
    cur = next;
  } while (cur != start);
  return c;
}

/// Builds a circuit from a cyclic vertex sequence.
inline EdgeCycle cycle_from_vertices(const Graph& g, const std::vector<int>& seq) {
  if (seq.size() < 3) throw InvalidArgument("a circuit needs at least three vertices");
  VertexSet seen;
  EdgeCycle c{{}, seq};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int a = seq[i];
    int b = seq[(i + 1) % seq.size()];
    if (a < 0 || a >= g.order()) throw InvalidArgument("unknown vertex in circuit");
    if (seen.contains(a)) throw InvalidArgument("circuit repeats vertex " + g.label(a));
    seen.insert(a);
    auto e = g.edge_index(a, b);
    if (!e) throw InvalidArgument("circuit uses missing edge " + g.label(a) + "-" + g.label(b));
    c.edges.insert(*e);
  }
  return c;
}

/// A circuit C is chordless when no edge of g joins two vertices of C
/// except the edges of C itself.
inline bool is_chordless(const Graph& g, const EdgeCycle& c) {
  VertexSet vs = g.endpoints(c.edges);
  return g.edges_within(vs) == c.edges;
}

enum class Parity { kAny, kEven, kOdd };

struct CycleFilter {
  Parity parity = Parity::kAny;
  /// only circuits inside this vertex set
  VertexSet within = VertexSet::first(kMaxVertices);
  bool chordless_only = false;
  int max_length = kMaxVertices;
};

/// Calls `visit(cycle)` once per circuit of g; `visit` returns false to stop.
/// Each circuit is reported starting at its smallest vertex, with the second
/// vertex smaller than the last.
template <class Visit>
void for_each_cycle(const Graph& g, const CycleFilter& filter, Visit&& visit) {
  const VertexSet allowed = filter.within & g.vertices();
  std::vector<int> path;
  path.reserve(g.order());
  bool stop = false;

  std::function<void(int, VertexSet, EdgeSet)> extend = [&](int cur, VertexSet used,
                                                             EdgeSet es) {
    const int start = path.front();
    const int len = static_cast<int>(path.size());
    if (len >= 3 && g.adjacent(cur, start) && path[1] < cur) {
      bool parity_ok = filter.parity == Parity::kAny ||
                       ((len % 2 == 0) == (filter.parity == Parity::kEven));
      if (parity_ok) {
        EdgeCycle c{es, path};
        c.edges.insert(*g.edge_index(cur, start));
        if (!filter.chordless_only || is_chordless(g, c)) {
          if (!visit(c)) {
            stop = true;
            return;
          }
        }
      }
    }
    if (len >= filter.max_length) return;
    // Past this point the edge back to the start would be a chord.
    if (filter.chordless_only && len >= 3 && g.adjacent(cur, start)) return;
    VertexSet interior = used;
    interior.erase(start);
    interior.erase(cur);
    for (int w : g.neighbours(cur) & allowed) {
      if (w <= start || used.contains(w)) continue;
      if (filter.chordless_only && g.neighbours(w).intersects(interior)) continue;
      path.push_back(w);
      used.insert(w);
      extend(w, used, es | EdgeSet::single(*g.edge_index(cur, w)));
      used.erase(w);
      path.pop_back();
      if (stop) return;
    }
  };

  for (int s : allowed) {
    path.assign(1, s);
    extend(s, VertexSet::single(s), EdgeSet{});
    if (stop) return;
  }
}

/// All circuits of g satisfying the filter, in discovery order. Throws
/// BudgetExceeded past `max_count`.
inline std::vector<EdgeCycle> cycles(const Graph& g, const CycleFilter& filter = {},
                                     std::size_t max_count = 5'000'000) {
  std::vector<EdgeCycle> out;
  bool over = false;
  for_each_cycle(g, filter, [&](const EdgeCycle& c) {
    if (out.size() >= max_count) {
      over = true;
      return false;
    }
    out.push_back(c);
    return true;
  });
  if (over) throw BudgetExceeded("circuit enumeration exceeded " + std::to_string(max_count));
  return out;
}

/// Length of a shortest circuit, or nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  for_each_cycle(g, {}, [&](const EdgeCycle& c) {
    if (!best || c.length() < *best) best = c.length();
    return true;
  });
  return best;
}

}  // namespace pfaff

#endif  // PFAFF_CYCLES_HPP
