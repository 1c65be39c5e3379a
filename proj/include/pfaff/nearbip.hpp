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

#ifndef PFAFF_NEARBIP_HPP
#define PFAFF_NEARBIP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pfaff/cycles.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"
#include "pfaff/matching.hpp"
#include "pfaff/orientation.hpp"
#include "pfaff/pfaffian.hpp"

namespace pfaff {

/// Edges e1 < e2 of a 1-extendible non-bipartite graph G such that
/// H = G - {e1, e2} is bipartite and 1-extendible.
struct NearBipartiteCertificate {
  int e1 = -1;
  int e2 = -1;
  Bipartition bipartition;
  /// canonically first 1-factor of H, as edges of G
  OneFactor factor;
};

/// Every qualifying pair, in increasing (e1, e2) order.
inline std::vector<NearBipartiteCertificate> find_near_bipartite_pairs(const Graph& g) {
  std::vector<NearBipartiteCertificate> out;
  if (is_bipartite(g, g.all_edges()) || !is_one_extendible(g)) return out;
  for (int e1 = 0; e1 < g.size(); ++e1) {
    for (int e2 = e1 + 1; e2 < g.size(); ++e2) {
      const EdgeSet h_edges = g.all_edges() - EdgeSet::single(e1) - EdgeSet::single(e2);
      auto sides = bipartition(g, h_edges);
      if (!sides) continue;
      const Graph h = remove_edges(g, EdgeSet::single(e1) | EdgeSet::single(e2));
      if (!is_one_extendible(h)) continue;
      auto factors = enumerate_matchings(h, h.vertices());
      EdgeSet f;
      for (int e : factors.front()) f.insert(g.require_edge(h.edge(e).u, h.edge(e).v));
      out.push_back({e1, e2, *sides, OneFactor::unchecked(f)});
    }
  }
  return out;
}

inline bool is_near_bipartite(const Graph& g) { return !find_near_bipartite_pairs(g).empty(); }

/// Edges of f from M to N, all other edges from N to M.
inline Orientation reference_orientation(const Graph& h, const Bipartition& b, const OneFactor& f) {
  if ((b.m & b.n).intersects(h.vertices()) || (b.m | b.n) != h.vertices())
    throw InvalidArgument("sides do not partition the vertex set");
  for (const Edge& e : h.edges())
    if (b.m.contains(e.u) == b.m.contains(e.v))
      throw InvalidArgument("an edge does not cross the bipartition");
  if (!is_one_factor(h, f.edges())) throw InvalidArgument("not a 1-factor of this graph");
  EdgeSet rev;
  for (int e = 0; e < h.size(); ++e) {
    const int from_m = b.m.contains(h.edge(e).u) ? h.edge(e).u : h.edge(e).v;
    const int origin = f.contains(e) ? from_m : h.edge(e).other(from_m);
    if (origin != h.edge(e).u) rev.insert(e);
  }
  return Orientation(h, rev);
}

/// Circuits of g whose edges all point the same way round.
inline std::vector<EdgeCycle> directed_circuits(const Graph& g, const Orientation& o) {
  o.check_host(g);
  std::vector<EdgeCycle> out;
  for_each_cycle(g, {}, [&](const EdgeCycle& c) {
    const std::size_t n = c.sense.size();
    int forward = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int e = g.require_edge(c.sense[i], c.sense[(i + 1) % n]);
      forward += o.origin(g, e) == c.sense[i] ? 1 : 0;
    }
    if (forward == 0 || forward == static_cast<int>(n)) out.push_back(c);
    return true;
  });
  detail::sort_cycles(out);
  return out;
}

/// reach[a] = vertices reachable from a by a directed path of length >= 0.
inline std::vector<VertexSet> reachability(const Graph& g, const Orientation& o) {
  o.check_host(g);
  std::vector<VertexSet> reach(g.order());
  for (int a = 0; a < g.order(); ++a) {
    VertexSet seen = VertexSet::single(a);
    std::vector<int> stack{a};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        if (o.origin(g, e) != v) continue;
        int w = o.terminus(g, e);
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    reach[a] = seen;
  }
  return reach;
}

/// The orientation of H = G - {e1, e2} carried over to G, with e1 and e2
/// directed from their lower endpoint.
inline Orientation extend_orientation(const Graph& g, const Graph& h, const Orientation& oh) {
  return transfer(h, oh, g);
}

struct OppositeParityPair {
  AlternatingCircuit a;
  AlternatingCircuit b;
  ClockwiseParity parity_a;
  ClockwiseParity parity_b;
};

/// Looks for two central circuits of opposite clockwise parity through e1
/// (each such circuit also passes through e2). `o` must restrict to a
/// Pfaffian orientation of G - {e1, e2}. Each circuit is returned with a
/// 1-factor it alternates with: a canonical matching of the rest of the
/// graph plus the half of the circuit avoiding e1.
inline std::optional<OppositeParityPair> find_opposite_parity_pair(
    const Graph& g, const NearBipartiteCertificate& cert, const Orientation& o,
    const EnumerationLimits& limits = {}) {
  o.check_host(g);
  const EdgeSet pair = EdgeSet::single(cert.e1) | EdgeSet::single(cert.e2);
  const Graph h = remove_edges(g, pair);
  if (!is_pfaffian_orientation(h, transfer(g, o, h), limits))
    throw InvalidArgument("orientation does not restrict to a Pfaffian orientation of G - {e1, e2}");

  std::optional<std::pair<EdgeCycle, ClockwiseParity>> first;
  auto with_factor = [&](const EdgeCycle& c) {
    EdgeSet half;
    const std::size_t n = c.sense.size();
    for (std::size_t i = 0; i < n; i += 2) half.insert(g.require_edge(c.sense[i], c.sense[i + 1]));
    if (half.contains(cert.e1)) half = c.edges - half;
    auto rest = enumerate_matchings(g, g.vertices() - g.endpoints(c.edges));
    return AlternatingCircuit{c, OneFactor::of(g, half | rest.front())};
  };
  for (const EdgeCycle& c : central_circuits(g, limits)) {
    if (c.edges.contains(cert.e1) != c.edges.contains(cert.e2))
      throw InternalError("alternating circuit meets only one of e1, e2");
    if (!c.edges.contains(cert.e1)) continue;
    ClockwiseParity p = clockwise_parity(g, c, o);
    if (!first) {
      first.emplace(c, p);
    } else if (first->second != p) {
      return OppositeParityPair{with_factor(first->first), with_factor(c), first->second, p};
    }
  }
  return std::nullopt;
}

}  // namespace pfaff

#endif  // PFAFF_NEARBIP_HPP
