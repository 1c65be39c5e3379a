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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "test_support.hpp"

namespace pfaff {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::make_graph;
using testing::path_graph;
using testing::petersen;

TEST(Graph, RejectsLoopsRepeatsAndUnknownEndpoints) {
  EXPECT_THROW(make_graph(2, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(make_graph(2, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(make_graph(2, {{0, 2}}), InvalidArgument);
  EXPECT_NO_THROW(make_graph(3, {{0, 1}, {1, 2}}));
}

TEST(Bipartition, SingleEdge) {
  auto b = bipartition(make_graph(2, {{0, 1}}));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->m, VertexSet::single(0));
  EXPECT_EQ(b->n, VertexSet::single(1));
}

TEST(Bipartition, K33SidesFollowLetters) {
  const Graph g = fixture_k33().graph;
  auto b = bipartition(g);
  ASSERT_TRUE(b);
  // a, c, e against b, d, f
  EXPECT_EQ(b->m.to_vector(), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(b->n.to_vector(), (std::vector<int>{1, 3, 5}));
}

TEST(Bipartition, TriangleHasNone) { EXPECT_FALSE(bipartition(cycle_graph(3))); }

TEST(Contract, SingleVertexIsIdentity) {
  const Graph g = petersen();
  for (int v = 0; v < g.order(); ++v) EXPECT_TRUE(isomorphic(contract(g, VertexSet::single(v)), g));
}

TEST(Contract, UnknownVertexRejected) {
  EXPECT_THROW(contract(cycle_graph(4), VertexSet::single(7)), InvalidArgument);
  EXPECT_THROW(contract(cycle_graph(4), VertexSet{}), InvalidArgument);
}

TEST(Contract, PetersenOuterCircuit) {
  const Graph g = petersen();
  VertexSet outer;
  for (int v = 0; v < 5; ++v) outer.insert(v);
  Contraction c = contract_with_map(g, outer);
  EXPECT_EQ(c.graph.order(), 6);
  EXPECT_EQ(c.graph.degree(c.merged), 5);
  for (int v = 5; v < 10; ++v) EXPECT_TRUE(c.graph.adjacent(c.merged, c.image[v]));
  EXPECT_FALSE(c.merged_parallels);
  // The inner pentagram survives untouched.
  EXPECT_EQ(c.graph.size(), 10);
}

TEST(Contract, ChordlessFiveCircuitInCubicGraph) {
  // Petersen is cubic with girth 5; its outer circuit is chordless and no
  // outside vertex sees two of its vertices.
  const Graph g = petersen();
  const EdgeCycle c = cycle_from_vertices(g, {0, 1, 2, 3, 4});
  ASSERT_TRUE(is_chordless(g, c));
  Contraction k = contract_with_map(g, g.endpoints(c.edges));
  EXPECT_EQ(k.graph.degree(k.merged), 15 - 10);
}

TEST(Contract, ParallelEdgesMergeAndAreFlagged) {
  // contracting {0, 1} in a triangle leaves one edge to 2, not two
  Contraction c = contract_with_map(cycle_graph(3), VertexSet::single(0) | VertexSet::single(1));
  EXPECT_EQ(c.graph.order(), 2);
  EXPECT_EQ(c.graph.size(), 1);
  EXPECT_TRUE(c.merged_parallels);
}

TEST(ContractProperty, VertexCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, 0.4, rng);
    VertexSet s(static_cast<std::uint32_t>(rng()) & g.vertices().bits());
    if (s.empty()) s.insert(0);
    EXPECT_EQ(contract(g, s).order(), g.order() - s.size() + 1);
  }
}

TEST(ContractProperty, DegreeFormulaForChordlessCircuits) {
  std::mt19937_64 rng(12);
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.35, rng);
    for (const EdgeCycle& c : cycles(g, {.chordless_only = true})) {
      const VertexSet on = g.endpoints(c.edges);
      bool hypothesis = true;
      for (int w : g.vertices() - on) hypothesis = hypothesis && (g.neighbours(w) & on).size() < 2;
      if (!hypothesis) continue;
      ++tested;
      int sum = 0;
      for (int v : on) sum += g.degree(v);
      Contraction k = contract_with_map(g, on);
      EXPECT_EQ(k.graph.degree(k.merged), sum - 2 * on.size());
      EXPECT_FALSE(k.merged_parallels);
      for (int w : g.vertices() - on) EXPECT_EQ(k.graph.degree(k.image[w]), g.degree(w));
    }
  }
  EXPECT_GT(tested, 50);
}

TEST(Subdivide, LengthOneIsIsomorphic) {
  const Graph g = petersen();
  EXPECT_TRUE(isomorphic(subdivide_edge(g, 3, 1), g));
}

TEST(Subdivide, K33LengthThreeStaysNonPfaffian) {
  const Graph g = subdivide_edge(fixture_k33().graph, 0, 3);
  EXPECT_EQ(g.order(), 8);
  EXPECT_FALSE(is_pfaffian(g));
}

TEST(Subdivide, K33LengthTwoHasNoPerfectMatching) {
  const Graph g = subdivide_edge(fixture_k33().graph, 0, 2);
  EXPECT_EQ(g.order(), 7);
  EXPECT_FALSE(has_perfect_matching(g));
}

TEST(Subdivide, MissingEdgeRejected) {
  EXPECT_THROW(subdivide_edge(cycle_graph(4), 0, 2, 3), InvalidArgument);
  EXPECT_THROW(subdivide_edge(cycle_graph(4), 9, 3), InvalidArgument);
  EXPECT_THROW(subdivide_edge(cycle_graph(4), 0, 0), InvalidArgument);
}

TEST(Suppress, CubicGraphUnchanged) {
  Suppression s = suppress_degree2(petersen());
  EXPECT_EQ(s.base, petersen());
  for (int e = 0; e < s.base.size(); ++e) EXPECT_EQ(s.chain_length(e), 1);
}

TEST(Suppress, RecoversSubdividedK33) {
  const Graph k33 = fixture_k33().graph;
  Suppression s = suppress_degree2(subdivide_edge(k33, 4, 3));
  EXPECT_TRUE(isomorphic(s.base, k33));
  int long_chains = 0;
  for (int e = 0; e < s.base.size(); ++e) {
    if (s.chain_length(e) == 3) ++long_chains;
    else EXPECT_EQ(s.chain_length(e), 1);
  }
  EXPECT_EQ(long_chains, 1);
}

TEST(Suppress, Gamma2IsCubic) {
  const Graph g = fixture_gamma2_sec6().graph;
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.size(), 18);
  EXPECT_EQ(suppress_degree2(g).base, g);
}

TEST(Suppress, RefusesCircuitsAndMultiEdges) {
  EXPECT_THROW(suppress_degree2(cycle_graph(6)), InvalidArgument);
  // Theta graph: two vertices of degree 3 joined by three paths; two of the
  // paths have length 1 and 2 -> would not be simple after suppression.
  Graph theta = make_graph(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}});
  EXPECT_THROW(suppress_degree2(theta), InvalidArgument);
  // a pendant path collapses to one edge
  EXPECT_EQ(suppress_degree2(path_graph(5)).base.size(), 1);
}

TEST(SuppressProperty, RoundTripWithSubdivision) {
  std::mt19937_64 rng(13);
  const std::vector<Graph> bases{complete_graph(4), complete_graph(5), petersen(),
                                 fixture_k33().graph, fixture_gamma1().graph};
  for (int trial = 0; trial < 200; ++trial) {
    const Graph& g = bases[rng() % bases.size()];
    const int e = static_cast<int>(rng() % g.size());
    const int k = 1 + static_cast<int>(rng() % 5);
    Suppression s = suppress_degree2(subdivide_edge(g, e, k));
    ASSERT_TRUE(isomorphic(s.base, g));
    int total = 0;
    for (int i = 0; i < s.base.size(); ++i) total += s.chain_length(i);
    EXPECT_EQ(total, g.size() - 1 + k);
    int with_k = 0;
    for (int i = 0; i < s.base.size(); ++i) with_k += s.chain_length(i) == k ? 1 : 0;
    EXPECT_GE(with_k, 1);
  }
}

// Walk host: 0->1, 1->2, 2->3, 3->1, 2->4, 4->5. Every vertex has
// indegree 1 or outdegree 1.
struct WalkHost {
  Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {2, 4}, {4, 5}});
  Orientation o = Orientation::from_arcs(
      g, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 5}});
};

void expect_walk_identities(const DirectedWalk& w, const WalkDecomposition& d) {
  std::vector<ArcSequence> parts{d.path};
  for (const auto& c : d.circuits) parts.push_back(c);
  EXPECT_EQ(arc_sum({w.steps()}), arc_sum(parts));
  EXPECT_EQ(arc_union({w.steps()}), arc_union(parts));
  for (const auto& c : d.circuits) {
    ASSERT_FALSE(c.empty());
    EXPECT_EQ(c.front().from, c.back().to);
  }
  if (!d.path.empty()) {
    EXPECT_EQ(d.path.front().from, w.origin());
    EXPECT_EQ(d.path.back().to, w.terminus());
    std::set<int> seen{d.path.front().from};
    for (Arc a : d.path) EXPECT_TRUE(seen.insert(a.to).second);
  }
}

TEST(DecomposeWalk, SimplePathIsItself) {
  WalkHost h;
  auto w = DirectedWalk::through({0, 1, 2, 4, 5});
  auto d = decompose_walk(w, h.g, h.o);
  EXPECT_EQ(d.path, w.steps());
  EXPECT_TRUE(d.circuits.empty());
}

TEST(DecomposeWalk, CircuitThenContinue) {
  WalkHost h;
  auto w = DirectedWalk::through({0, 1, 2, 3, 1, 2, 4, 5});
  auto d = decompose_walk(w, h.g, h.o);
  ASSERT_EQ(d.circuits.size(), 1U);
  EXPECT_EQ(d.circuits[0], (ArcSequence{{1, 2}, {2, 3}, {3, 1}}));
  EXPECT_EQ(d.path, DirectedWalk::through({0, 1, 2, 4, 5}).steps());
  expect_walk_identities(w, d);
}

TEST(DecomposeWalk, RepeatedEdgeGivesOneCircuitThroughIt) {
  WalkHost h;
  auto w = DirectedWalk::through({0, 1, 2, 3, 1, 2, 4, 5});
  auto d = decompose_walk(w, h.g, h.o);
  ASSERT_EQ(d.circuits.size(), 1U);
  EXPECT_NE(std::find(d.circuits[0].begin(), d.circuits[0].end(), Arc{1, 2}), d.circuits[0].end());
}

TEST(DecomposeWalk, HypothesisViolation) {
  // vertex 0 with two arcs in and two out
  Graph g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  Orientation o = Orientation::from_arcs(
      g, std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {0, 3}, {0, 4}});
  EXPECT_THROW(decompose_walk(DirectedWalk::through({1, 0, 3}), g, o), InvalidArgument);
  EXPECT_THROW(DirectedWalk(ArcSequence{{0, 1}, {2, 3}}), InvalidArgument);
}

TEST(DecomposeWalkProperty, RandomWalksInReferenceOrientations) {
  // In a reference orientation of a bipartite graph, M has outdegree 1 and
  // N has indegree 1, so walks from M to N meet the hypotheses.
  std::mt19937_64 rng(14);
  int walks = 0;
  for (int trial = 0; trial < 400 && walks < 300; ++trial) {
    const int half = 2 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < half; ++i) e.emplace_back(i, half + i);
    for (int i = 0; i < half; ++i)
      for (int j = 0; j < half; ++j)
        if (i != j && rng() % 2 == 0) e.emplace_back(i, half + j);
    Graph g(2 * half, e);
    auto b = bipartition(g);
    auto factors = enumerate_one_factors(g);
    ASSERT_TRUE(b && !factors.empty());
    Orientation o = reference_orientation(g, *b, factors.front());
    for (int start : b->m) {
      ArcSequence steps;
      int cur = start;
      for (int len = 0; len < 30; ++len) {
        std::vector<int> out;
        for (int x : g.incident(cur))
          if (o.origin(g, x) == cur) out.push_back(o.terminus(g, x));
        if (out.empty()) break;
        int next = out[rng() % out.size()];
        steps.push_back({cur, next});
        cur = next;
        if (b->n.contains(cur) && len > 4 && rng() % 3 == 0) break;
      }
      if (steps.empty() || !b->n.contains(cur)) continue;
      DirectedWalk w(steps);
      expect_walk_identities(w, decompose_walk(w, g, o));
      ++walks;
    }
  }
  EXPECT_GE(walks, 100);
}

void expect_two_path_identities(const DirectedWalk& p, const DirectedWalk& q,
                                const std::vector<ArcSequence>& circuits) {
  EXPECT_EQ(arc_sum({p.steps(), q.steps()}), arc_sum(circuits));
  EXPECT_EQ(arc_union({p.steps(), q.steps()}), arc_union(circuits));
  for (const auto& c : circuits) {
    ASSERT_GE(c.size(), 3U);
    EXPECT_EQ(c.front().from, c.back().to);
    std::set<int> seen;
    for (Arc a : c) EXPECT_TRUE(seen.insert(a.to).second);
  }
}

TEST(DecomposeTwoPaths, InternallyDisjoint) {
  auto p = DirectedWalk::through({0, 1, 2});
  auto q = DirectedWalk::through({2, 3, 0});
  auto cs = decompose_two_paths(p, q);
  ASSERT_EQ(cs.size(), 1U);
  EXPECT_EQ(cs[0].size(), 4U);
  expect_two_path_identities(p, q, cs);
}

TEST(DecomposeTwoPaths, SharedInternalVertex) {
  auto p = DirectedWalk::through({0, 1, 2, 3});
  auto q = DirectedWalk::through({3, 4, 1, 5, 0});
  auto cs = decompose_two_paths(p, q);
  EXPECT_EQ(cs.size(), 2U);
  expect_two_path_identities(p, q, cs);
}

TEST(DecomposeTwoPaths, EndpointMismatchAndReversal) {
  EXPECT_THROW(decompose_two_paths(DirectedWalk::through({0, 1, 2}), DirectedWalk::through({1, 0})),
               InvalidArgument);
  // q retracing p backwards has an empty sum; it is refused rather than
  // decomposed into two-edge "circuits"
  EXPECT_THROW(decompose_two_paths(DirectedWalk::through({0, 1, 2}),
                                   DirectedWalk::through({2, 1, 0})),
               InvalidArgument);
}

TEST(DecomposeTwoPathsProperty, RandomPathPairs) {
  std::mt19937_64 rng(15);
  int tested = 0;
  for (int trial = 0; trial < 3000 && tested < 500; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const int lp = 2 + static_cast<int>(rng() % (n - 1));
    std::vector<int> pv(perm.begin(), perm.begin() + lp);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> qv{pv.back()};
    for (int v : perm)
      if (v != pv.front() && v != pv.back() && rng() % 2 == 0) qv.push_back(v);
    qv.push_back(pv.front());
    auto p = DirectedWalk::through(pv);
    auto q = DirectedWalk::through(qv);
    std::set<std::pair<int, int>> forward;
    for (Arc a : p.steps()) forward.emplace(a.from, a.to);
    bool opposite = false;
    for (Arc a : q.steps()) opposite = opposite || forward.count({a.to, a.from});
    if (opposite || (pv.size() == 2 && qv.size() == 2)) continue;
    expect_two_path_identities(p, q, decompose_two_paths(p, q));
    ++tested;
  }
  EXPECT_GE(tested, 200);
}

TEST(Isomorphism, CanonicalCodeIsInvariant) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.5, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> e;
    for (const Edge& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
    Graph h(n, e);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    auto map = find_isomorphism(g, h);
    ASSERT_TRUE(map);
    for (const Edge& x : g.edges()) EXPECT_TRUE(h.adjacent((*map)[x.u], (*map)[x.v]));
  }
  EXPECT_FALSE(isomorphic(cycle_graph(6), fixture_k33().graph));
}

TEST(Census, ConnectedGraphCounts) {
  // number of connected graphs on n unlabelled vertices
  const std::vector<std::size_t> known{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(connected_graphs(n).size(), known[n - 1]) << n;
}

}  // namespace
}  // namespace pfaff
