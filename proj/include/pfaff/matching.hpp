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

#ifndef PFAFF_MATCHING_HPP
#define PFAFF_MATCHING_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pfaff/cycles.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"

namespace pfaff {

/// Perfect matching of a host graph, identified with its edge set.
class OneFactor {
 public:
  OneFactor() = default;

  /// Throws InvalidArgument unless `es` covers every vertex exactly once.
  static OneFactor of(const Graph& g, EdgeSet es) {
    if (!es.is_subset_of(g.all_edges())) throw InvalidArgument("factor uses a missing edge");
    for (int v = 0; v < g.order(); ++v) {
      int k = (g.incident(v) & es).size();
      if (k != 1)
        throw InvalidArgument("vertex " + g.label(v) + " is covered " + std::to_string(k) +
                              " times");
    }
    return OneFactor(es);
  }

  static OneFactor unchecked(EdgeSet es) { return OneFactor(es); }

  EdgeSet edges() const { return edges_; }
  bool contains(int e) const { return edges_.contains(e); }
  bool operator==(const OneFactor&) const = default;

 private:
  explicit OneFactor(EdgeSet es) : edges_(es) {}
  EdgeSet edges_;
};

inline bool is_one_factor(const Graph& g, EdgeSet es) {
  if (!es.is_subset_of(g.all_edges())) return false;
  for (int v = 0; v < g.order(); ++v)
    if ((g.incident(v) & es).size() != 1) return false;
  return true;
}

/// Memoised "does G[S] have a perfect matching" over vertex subsets S.
class MatchingOracle {
 public:
  explicit MatchingOracle(const Graph& g) : g_(&g) {
    if (g.order() <= 20) dense_.assign(std::size_t{1} << g.order(), -1);
  }

  bool matchable(VertexSet s) {
    if (s.empty()) return true;
    if (s.size() % 2 != 0) return false;
    if (!dense_.empty()) {
      std::int8_t& slot = dense_[s.bits()];
      if (slot < 0) slot = compute(s) ? 1 : 0;
      return slot == 1;
    }
    auto it = sparse_.find(s.bits());
    if (it != sparse_.end()) return it->second;
    bool r = compute(s);
    sparse_.emplace(s.bits(), r);
    return r;
  }

 private:
  bool compute(VertexSet s) {
    int v = s.front();
    VertexSet rest = s;
    rest.erase(v);
    for (int w : g_->neighbours(v) & rest) {
      VertexSet next = rest;
      next.erase(w);
      if (matchable(next)) return true;
    }
    return false;
  }

  const Graph* g_;
  std::vector<std::int8_t> dense_;
  std::unordered_map<std::uint32_t, bool> sparse_;
};

inline bool has_perfect_matching(const Graph& g) {
  MatchingOracle oracle(g);
  return oracle.matchable(g.vertices());
}

/// Perfect matchings of G[within] using only edges inside `within`,
/// branching on the lowest uncovered vertex. The order is lexicographic in
/// the sorted edge lists.
inline std::vector<EdgeSet> enumerate_matchings(const Graph& g, VertexSet within) {
  std::vector<EdgeSet> out;
  if (within.size() % 2 != 0) return out;
  std::function<void(VertexSet, EdgeSet)> branch = [&](VertexSet uncovered, EdgeSet chosen) {
    if (uncovered.empty()) {
      out.push_back(chosen);
      return;
    }
    int v = uncovered.front();
    VertexSet rest = uncovered;
    rest.erase(v);
    for (int w : g.neighbours(v) & rest) {
      VertexSet next = rest;
      next.erase(w);
      branch(next, chosen | EdgeSet::single(*g.edge_index(v, w)));
    }
  };
  branch(within & g.vertices(), EdgeSet{});
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

/// Every 1-factor of g, canonically ordered. Empty for odd order or when no
/// perfect matching exists.
inline std::vector<OneFactor> enumerate_one_factors(const Graph& g) {
  std::vector<OneFactor> out;
  for (EdgeSet m : enumerate_matchings(g, g.vertices())) out.push_back(OneFactor::unchecked(m));
  return out;
}

struct ExtendibilityReport {
  bool one_extendible = false;
  /// an edge lying in no 1-factor, when there is one
  std::optional<int> uncovered_edge;
  explicit operator bool() const { return one_extendible; }
};

/// Every edge lies in some 1-factor.
inline ExtendibilityReport is_one_extendible(const Graph& g) {
  MatchingOracle oracle(g);
  for (int e = 0; e < g.size(); ++e) {
    VertexSet rest = g.vertices();
    rest.erase(g.edge(e).u);
    rest.erase(g.edge(e).v);
    if (!oracle.matchable(rest)) return {false, e};
  }
  if (g.size() == 0 && g.order() > 0) return {false, std::nullopt};
  return {true, std::nullopt};
}

/// Same question for the subgraph formed by an edge set on its endpoints.
inline bool edges_one_extendible(const Graph& g, EdgeSet es) {
  return static_cast<bool>(is_one_extendible(edge_induced(g, es).graph));
}

/// Splits a 2-regular edge set (such as the sum of two 1-factors) into its
/// circuits, ordered by smallest vertex.
inline std::vector<EdgeCycle> split_into_circuits(const Graph& g, EdgeSet es) {
  std::vector<EdgeCycle> out;
  EdgeSet rest = es;
  while (!rest.empty()) {
    int start = g.edge(rest.front()).u;
    VertexSet comp = component_of(g, start, g.vertices(), rest);
    EdgeSet part = rest & g.edges_within(comp);
    out.push_back(make_cycle(g, part));
    rest -= part;
  }
  std::sort(out.begin(), out.end(),
            [](const EdgeCycle& a, const EdgeCycle& b) { return a.sense.front() < b.sense.front(); });
  return out;
}

struct AlternatingCircuit {
  EdgeCycle cycle;
  OneFactor factor;
};

struct EnumerationLimits {
  int max_vertices = 16;
  std::size_t max_circuits = 5'000'000;
};

namespace detail {

inline void check_limits(const Graph& g, const EnumerationLimits& limits) {
  if (g.order() > limits.max_vertices)
    throw BudgetExceeded("circuit enumeration is capped at " +
                         std::to_string(limits.max_vertices) + " vertices (graph has " +
                         std::to_string(g.order()) + ")");
}

inline void sort_cycles(std::vector<EdgeCycle>& cs) {
  std::sort(cs.begin(), cs.end(),
            [](const EdgeCycle& a, const EdgeCycle& b) { return lex_less(a.edges, b.edges); });
}

}  // namespace detail

/// f-alternating circuits obtained from the circuits of f + f' over every
/// other 1-factor f'.
inline std::vector<EdgeCycle> alternating_circuits_by_sums(const Graph& g, const OneFactor& f) {
  std::unordered_set<EdgeSet> seen;
  std::vector<EdgeCycle> out;
  for (const OneFactor& other : enumerate_one_factors(g)) {
    for (EdgeCycle& c : split_into_circuits(g, f.edges() ^ other.edges()))
      if (seen.insert(c.edges).second) out.push_back(std::move(c));
  }
  detail::sort_cycles(out);
  return out;
}

/// f-alternating circuits found directly: even circuits whose edges
/// alternate in and out of f.
inline std::vector<EdgeCycle> alternating_circuits_direct(const Graph& g, const OneFactor& f,
                                                          const EnumerationLimits& limits = {}) {
  detail::check_limits(g, limits);
  std::vector<EdgeCycle> out;
  for_each_cycle(g, {.parity = Parity::kEven}, [&](const EdgeCycle& c) {
    // In an even circuit, alternation is exactly "half the edges lie in f
    // and every circuit vertex meets one of them".
    EdgeSet in_f = c.edges & f.edges();
    if (in_f.size() * 2 == c.length() && g.endpoints(in_f) == g.endpoints(c.edges))
      out.push_back(c);
    if (out.size() > limits.max_circuits) return false;
    return true;
  });
  if (out.size() > limits.max_circuits) throw BudgetExceeded("too many alternating circuits");
  detail::sort_cycles(out);
  return out;
}

/// All f-alternating circuits, computed both ways; disagreement is an
/// InternalError.
inline std::vector<AlternatingCircuit> alternating_circuits(const Graph& g, const OneFactor& f,
                                                            const EnumerationLimits& limits = {}) {
  if (!is_one_factor(g, f.edges())) throw InvalidArgument("not a 1-factor of this graph");
  auto direct = alternating_circuits_direct(g, f, limits);
  auto by_sums = alternating_circuits_by_sums(g, f);
  if (direct.size() != by_sums.size() ||
      !std::equal(direct.begin(), direct.end(), by_sums.begin()))
    throw InternalError("alternating circuit enumerations disagree");
  std::vector<AlternatingCircuit> out;
  out.reserve(direct.size());
  for (EdgeCycle& c : direct) out.push_back({std::move(c), f});
  return out;
}

/// Even circuits C such that G - V(C) has a perfect matching (equivalently,
/// circuits alternating with respect to some 1-factor).
inline std::vector<EdgeCycle> central_circuits(const Graph& g, const EnumerationLimits& limits = {}) {
  detail::check_limits(g, limits);
  std::vector<EdgeCycle> out;
  if (g.order() % 2 != 0) return out;
  MatchingOracle oracle(g);
  if (!oracle.matchable(g.vertices())) return out;
  bool over = false;
  for_each_cycle(g, {.parity = Parity::kEven}, [&](const EdgeCycle& c) {
    if (oracle.matchable(g.vertices() - g.endpoints(c.edges))) {
      if (out.size() >= limits.max_circuits) {
        over = true;
        return false;
      }
      out.push_back(c);
    }
    return true;
  });
  if (over) throw BudgetExceeded("central circuit enumeration exceeded " +
                                 std::to_string(limits.max_circuits));
  detail::sort_cycles(out);
  return out;
}

/// Maximal subpaths of `circuit` outside `h`, as edge sets.
inline std::vector<EdgeSet> arcs_outside(const Graph& g, const EdgeCycle& circuit, EdgeSet h) {
  std::vector<EdgeSet> out;
  const auto& s = circuit.sense;
  const std::size_t n = s.size();
  std::vector<int> edge_at(n);
  for (std::size_t i = 0; i < n; ++i) edge_at[i] = *g.edge_index(s[i], s[(i + 1) % n]);
  std::size_t anchor = n;
  for (std::size_t i = 0; i < n; ++i)
    if (h.contains(edge_at[i])) {
      anchor = i;
      break;
    }
  if (anchor == n) return {circuit.edges};
  EdgeSet cur;
  for (std::size_t k = 1; k <= n; ++k) {
    int e = edge_at[(anchor + k) % n];
    if (h.contains(e)) {
      if (!cur.empty()) out.push_back(cur);
      cur = EdgeSet{};
    } else {
      cur.insert(e);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct EarDecompositionOptions {
  std::size_t budget = 1'000'000;
  /// 1 restricts the search to single-ear adjunctions
  int max_ears = 2;
  EnumerationLimits limits{};
};

/// Searches for G0 ⊂ G1 ⊂ ... ⊂ Gt = g where G0 is one edge of f and each
/// step adds the outside arcs of an f-alternating circuit having one or two
/// such arcs, each of odd length, every Gi being 1-extendible with f ∩ E(Gi)
/// a 1-factor of Gi. Returns the edge sets, or nullopt when the budget runs
/// out first.
inline std::optional<std::vector<EdgeSet>> ear_decomposition(
    const Graph& g, const OneFactor& f, const EarDecompositionOptions& options = {}) {
  if (!is_one_factor(g, f.edges())) throw InvalidArgument("not a 1-factor of this graph");
  if (!is_one_extendible(g)) throw InvalidArgument("graph is not 1-extendible");
  if (g.size() == 0) return std::vector<EdgeSet>{};
  auto circuits = alternating_circuits_direct(g, f, options.limits);
  std::size_t expanded = 0;
  std::unordered_set<EdgeSet> dead;
  std::vector<EdgeSet> chain;
  const EdgeSet goal = g.all_edges();

  std::function<bool(EdgeSet)> grow = [&](EdgeSet h) -> bool {
    if (h == goal) return true;
    if (dead.count(h)) return false;
    if (++expanded > options.budget) return false;
    for (const EdgeCycle& c : circuits) {
      if (!c.edges.intersects(h) || c.edges.is_subset_of(h)) continue;
      auto arcs = arcs_outside(g, c, h);
      if (static_cast<int>(arcs.size()) > options.max_ears) continue;
      bool odd = std::all_of(arcs.begin(), arcs.end(), [](EdgeSet a) { return a.size() % 2 == 1; });
      if (!odd) continue;
      EdgeSet next = h | c.edges;
      VertexSet vs = g.endpoints(next);
      if (g.endpoints(next & f.edges()) != vs || (next & f.edges()).size() * 2 != vs.size())
        continue;
      if (!edges_one_extendible(g, next)) continue;
      chain.push_back(next);
      if (grow(next)) return true;
      chain.pop_back();
      if (expanded > options.budget) return false;
    }
    dead.insert(h);
    return false;
  };

  for (int e : f.edges()) {
    chain.assign(1, EdgeSet::single(e));
    if (grow(chain.front())) return chain;
    if (expanded > options.budget) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace pfaff

#endif  // PFAFF_MATCHING_HPP
