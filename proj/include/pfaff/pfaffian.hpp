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

#ifndef PFAFF_PFAFFIAN_HPP
#define PFAFF_PFAFFIAN_HPP

// Signs of 1-factors, clockwise parity of even circuits, and the two
// Pfaffian deciders: a GF(2) system over central circuits and a gauge-fixed
// exhaustive search over orientations.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/cycles.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/gf2.hpp"
#include "pfaff/graph.hpp"
#include "pfaff/graph_ops.hpp"
#include "pfaff/matching.hpp"
#include "pfaff/orientation.hpp"

namespace pfaff {

namespace detail {

/// Vertex sequence u1 w1 u2 w2 ... of a factor written as directed pairs,
/// edges taken in index order.
inline std::vector<int> pair_sequence(const Graph& g, const Orientation& o, EdgeSet f) {
  std::vector<int> seq;
  for (int e : f) {
    seq.push_back(o.origin(g, e));
    seq.push_back(o.terminus(g, e));
  }
  return seq;
}

/// Parity of the permutation taking `from` to `to` (same elements).
inline bool odd_permutation(const std::vector<int>& from, const std::vector<int>& to,
                            int universe) {
  std::vector<int> pos(universe, -1);
  for (std::size_t i = 0; i < from.size(); ++i) pos[from[i]] = static_cast<int>(i);
  std::vector<int> perm(to.size());
  for (std::size_t i = 0; i < to.size(); ++i) perm[i] = pos[to[i]];
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return (perm.size() - cycles) % 2 == 1;
}

}  // namespace detail

/// +1 when f's directed pair sequence is an even permutation of base's,
/// -1 otherwise. Independent of the order the edges are written in.
inline int factor_sign(const Graph& g, const Orientation& o, const OneFactor& base,
                       const OneFactor& f) {
  o.check_host(g);
  if (!is_one_factor(g, base.edges()) || !is_one_factor(g, f.edges()))
    throw InvalidArgument("factor does not belong to this graph");
  auto a = detail::pair_sequence(g, o, base.edges());
  auto b = detail::pair_sequence(g, o, f.edges());
  return detail::odd_permutation(a, b, g.order()) ? -1 : 1;
}

/// Same computation on explicit pair sequences, in whatever order the edges
/// are listed. Used to check order independence.
inline int sequence_sign(const std::vector<std::pair<int, int>>& base,
                         const std::vector<std::pair<int, int>>& f, int order) {
  std::vector<int> a, b;
  for (auto [u, w] : base) {
    a.push_back(u);
    a.push_back(w);
  }
  for (auto [u, w] : f) {
    b.push_back(u);
    b.push_back(w);
  }
  return detail::odd_permutation(a, b, order) ? -1 : 1;
}

struct SignedFactorTable {
  OneFactor base;
  std::vector<std::pair<OneFactor, int>> rows;

  bool constant() const {
    for (const auto& r : rows)
      if (r.second != rows.front().second) return false;
    return true;
  }
  int count(int sign) const {
    int k = 0;
    for (const auto& r : rows) k += r.second == sign ? 1 : 0;
    return k;
  }
};

/// Signs of every 1-factor relative to the canonically first one.
inline SignedFactorTable sign_table(const Graph& g, const Orientation& o) {
  o.check_host(g);
  auto factors = enumerate_one_factors(g);
  if (factors.empty()) throw InvalidArgument("graph has no 1-factor");
  SignedFactorTable t{factors.front(), {}};
  for (const OneFactor& f : factors) t.rows.emplace_back(f, factor_sign(g, o, t.base, f));
  return t;
}

enum class ClockwiseParity { kEven, kOdd };

inline const char* to_string(ClockwiseParity p) {
  return p == ClockwiseParity::kEven ? "even" : "odd";
}

/// Parity of the number of circuit edges directed along the circuit's sense.
/// Only defined for even circuits.
inline ClockwiseParity clockwise_parity(const Graph& g, const EdgeCycle& c, const Orientation& o) {
  o.check_host(g);
  if (!c.is_even()) throw InvalidArgument("clockwise parity needs an even circuit");
  if (static_cast<int>(c.sense.size()) != c.length())
    throw InvalidArgument("circuit sense does not match its edges");
  int agree = 0;
  const std::size_t n = c.sense.size();
  for (std::size_t i = 0; i < n; ++i) {
    int a = c.sense[i];
    int b = c.sense[(i + 1) % n];
    int e = g.require_edge(a, b);
    if (!c.edges.contains(e)) throw InvalidArgument("circuit sense leaves its edge set");
    agree += o.origin(g, e) == a ? 1 : 0;
  }
  return agree % 2 == 0 ? ClockwiseParity::kEven : ClockwiseParity::kOdd;
}

/// First route: every 1-factor has the same sign.
inline bool sign_table_constant(const Graph& g, const Orientation& o) {
  return sign_table(g, o).constant();
}

/// Second route: every central circuit is clockwise odd.
inline bool central_circuits_clockwise_odd(const Graph& g, const Orientation& o,
                                           const EnumerationLimits& limits = {}) {
  for (const EdgeCycle& c : central_circuits(g, limits))
    if (clockwise_parity(g, c, o) == ClockwiseParity::kEven) return false;
  return true;
}

/// True iff all 1-factors have the same sign. Also evaluates the circuit
/// criterion and throws InternalError if the two disagree.
inline bool is_pfaffian_orientation(const Graph& g, const Orientation& o,
                                    const EnumerationLimits& limits = {}) {
  bool by_signs = sign_table_constant(g, o);
  bool by_circuits = central_circuits_clockwise_odd(g, o, limits);
  if (by_signs != by_circuits)
    throw InternalError("sign table and circuit parity criteria disagree");
  return by_signs;
}

/// Solves for a Pfaffian orientation: one unknown per edge (flip or keep
/// the low -> high reference direction) and, for every central circuit C,
/// the equation sum_{e in C} flip_e = 1 + agreements_ref(C) mod 2.
inline std::optional<Orientation> find_pfaffian_orientation(const Graph& g,
                                                            const EnumerationLimits& limits = {}) {
  const Orientation reference(g);
  if (!has_perfect_matching(g)) return reference;
  Gf2System system(g.size());
  for (const EdgeCycle& c : central_circuits(g, limits)) {
    bool even = clockwise_parity(g, c, reference) == ClockwiseParity::kEven;
    if (!system.add(c.edges.bits(), even)) return std::nullopt;
  }
  Orientation found = reference.flipped(EdgeSet(*system.solution()));
  if (!is_pfaffian_orientation(g, found, limits))
    throw InternalError("GF(2) solution failed validation");
  return found;
}

inline bool is_pfaffian(const Graph& g, const EnumerationLimits& limits = {}) {
  return find_pfaffian_orientation(g, limits).has_value();
}

/// Edges of a spanning forest chosen by depth-first search from the lowest
/// vertex of each component.
inline EdgeSet spanning_forest(const Graph& g) {
  EdgeSet tree;
  VertexSet seen;
  for (int s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    seen.insert(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        int w = g.edge(e).other(v);
        if (seen.contains(w)) continue;
        seen.insert(w);
        tree.insert(e);
        stack.push_back(w);
      }
    }
  }
  return tree;
}

/// Exhaustive search for a Pfaffian orientation, used as an oracle. Reversing
/// every edge at one vertex preserves the Pfaffian property (each 1-factor
/// meets that star exactly once), so forest edges can be held at the
/// reference direction and only the 2^(|E|-|V|+c) remaining choices tried,
/// in increasing binary order. Signs are recomputed through the flip rule:
/// reversing e changes the sign of exactly the factors containing e.
inline std::optional<Orientation> brute_force_pfaffian_orientation(const Graph& g,
                                                                   int max_free_edges = 30) {
  const Orientation reference(g);
  auto factors = enumerate_one_factors(g);
  if (factors.empty()) return reference;
  const EdgeSet free_edges = g.all_edges() - spanning_forest(g);
  if (free_edges.size() > max_free_edges)
    throw BudgetExceeded("brute force over 2^" + std::to_string(free_edges.size()) +
                         " orientations");
  const OneFactor& base = factors.front();
  std::vector<std::uint64_t> masks;
  std::vector<bool> odd0;
  for (const OneFactor& f : factors) {
    masks.push_back(f.edges().bits());
    odd0.push_back(factor_sign(g, reference, base, f) < 0);
  }
  const std::vector<int> positions = free_edges.to_vector();
  const std::uint64_t total = std::uint64_t{1} << positions.size();
  for (std::uint64_t choice = 0; choice < total; ++choice) {
    std::uint64_t flips = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
      if ((choice >> i) & 1U) flips |= std::uint64_t{1} << positions[i];
    const bool base_odd = (std::popcount(flips & base.edges().bits()) & 1) != 0;
    bool constant = true;
    for (std::size_t k = 0; k < masks.size() && constant; ++k) {
      bool odd = odd0[k] ^ ((std::popcount(flips & masks[k]) & 1) != 0) ^ base_odd;
      constant = !odd;
    }
    if (constant) {
      Orientation o = reference.flipped(EdgeSet(flips));
      if (!sign_table_constant(g, o)) throw InternalError("flip rule disagrees with sign table");
      return o;
    }
  }
  return std::nullopt;
}

/// Alternating circuits with empty mod-2 sum and an odd number of clockwise
/// even members. Exists iff the graph is non-Pfaffian.
struct IntractableSet {
  std::vector<EdgeCycle> circuits;
  std::vector<ClockwiseParity> parities;

  int clockwise_even() const {
    int k = 0;
    for (auto p : parities) k += p == ClockwiseParity::kEven ? 1 : 0;
    return k;
  }
};

/// Looks for an intractable set among the central circuits. Each circuit
/// contributes the vector (edges, clockwise-even bit); an intractable set is
/// a subset summing to (0, 1), found as the inconsistency certificate of
/// the corresponding GF(2) system. nullopt proves that none exists at any
/// size. Throws BudgetExceeded when the certificate is larger than
/// `size_bound`.
inline std::optional<IntractableSet> find_intractable_set(const Graph& g, const Orientation& o,
                                                          int size_bound = 8,
                                                          const EnumerationLimits& limits = {}) {
  o.check_host(g);
  if (!has_perfect_matching(g)) throw InvalidArgument("graph has no 1-factor");
  auto circuits = central_circuits(g, limits);
  Gf2System system(g.size());
  std::vector<ClockwiseParity> parity;
  for (const EdgeCycle& c : circuits) {
    parity.push_back(clockwise_parity(g, c, o));
    if (!system.add(c.edges.bits(), parity.back() == ClockwiseParity::kEven)) break;
  }
  if (system.consistent()) return std::nullopt;
  IntractableSet out;
  EdgeSet sum;
  for (std::size_t i : *system.conflict()) {
    out.circuits.push_back(circuits[i]);
    out.parities.push_back(parity[i]);
    sum ^= circuits[i].edges;
  }
  if (!sum.empty() || out.clockwise_even() % 2 == 0)
    throw InternalError("intractable set certificate is invalid");
  if (static_cast<int>(out.circuits.size()) > size_bound)
    throw BudgetExceeded("smallest certificate found has " + std::to_string(out.circuits.size()) +
                         " circuits, above the bound " + std::to_string(size_bound));
  return out;
}

/// Contracts both edges at a vertex of degree 2.
inline Graph contract_degree2(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw InvalidArgument("unknown vertex");
  if (g.degree(v) != 2)
    throw InvalidArgument("vertex " + g.label(v) + " has degree " + std::to_string(g.degree(v)));
  return contract(g, g.neighbours(v) | VertexSet::single(v));
}

}  // namespace pfaff

#endif  // PFAFF_PFAFFIAN_HPP
