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

#include "test_support.hpp"

namespace pfaff {
namespace {

using testing::letter_edge;
using testing::odd_relative;

std::string failed(const Report& r) {
  std::string out;
  for (const Check& c : r.checks)
    if (!c.ok) out += c.name + " (" + c.detail + ")\n";
  return out;
}

/// Parity of the permutation between two printed rows, taking each pair in
/// the order it is written.
bool printed_rows_odd(const std::vector<std::pair<int, int>>& a,
                      const std::vector<std::pair<int, int>>& b) {
  std::vector<int> pos(kMaxVertices, -1);
  int i = 0;
  for (auto [x, y] : a) {
    pos[x] = i++;
    pos[y] = i++;
  }
  std::vector<int> perm;
  for (auto [x, y] : b) {
    perm.push_back(pos[x]);
    perm.push_back(pos[y]);
  }
  int inversions = 0;
  for (std::size_t p = 0; p < perm.size(); ++p)
    for (std::size_t q = p + 1; q < perm.size(); ++q) inversions += perm[p] > perm[q];
  return inversions % 2 == 1;
}

TEST(Builtins, ShapesAndCounts) {
  struct Expect {
    const char* name;
    int order, size, factors;
  };
  for (Expect x : {Expect{"k33", 6, 9, 6}, Expect{"gamma1", 12, 18, 6}, Expect{"gamma2", 12, 18, 6},
                   Expect{"gamma1_sec6", 12, 18, 10}, Expect{"gamma2_sec6", 12, 18, 10}}) {
    Fixture fx = builtin(x.name);
    EXPECT_EQ(fx.name, x.name);
    EXPECT_EQ(fx.graph.order(), x.order) << x.name;
    EXPECT_EQ(fx.graph.size(), x.size) << x.name;
    EXPECT_EQ(fx.factors.size(), static_cast<std::size_t>(x.factors)) << x.name;
    EXPECT_EQ(fx.expected_signs.size(), fx.factors.size());
    EXPECT_EQ(fx.rows.size(), fx.factors.size());
    EXPECT_TRUE(is_regular(fx.graph, 3)) << x.name;
    EXPECT_TRUE(is_connected(fx.graph));
    for (const OneFactor& f : fx.factors) EXPECT_TRUE(is_one_factor(fx.graph, f.edges()));
  }
  EXPECT_EQ(builtin_names().size(), 5U);
  EXPECT_THROW(builtin("petersen"), InvalidArgument);
}

TEST(Builtins, EnumeratedFactorCounts) {
  EXPECT_EQ(enumerate_one_factors(fixture_k33().graph).size(), 6U);
  EXPECT_EQ(enumerate_one_factors(fixture_gamma1().graph).size(), 10U);
  EXPECT_EQ(enumerate_one_factors(fixture_gamma2().graph).size(), 10U);
}

TEST(Builtins, PrintedSignsAgreeWithInversionCounts) {
  // two oracles: printed pair order, and edge-index order under the arcs
  for (const std::string& name : builtin_names()) {
    Fixture fx = builtin(name);
    for (std::size_t i = 0; i < fx.factors.size(); ++i) {
      const bool odd = fx.expected_signs[i] != fx.expected_signs[0];
      EXPECT_EQ(printed_rows_odd(fx.rows[0], fx.rows[i]), odd) << name << " row " << i + 1;
      EXPECT_EQ(odd_relative(fx.graph, fx.orientation, fx.factors[0].edges().bits(),
                             fx.factors[i].edges().bits()),
                odd)
          << name << " row " << i + 1;
    }
  }
}

TEST(Builtins, PrintedPairsFollowTheOrientation) {
  for (const std::string& name : builtin_names()) {
    Fixture fx = builtin(name);
    for (const auto& row : fx.rows)
      for (auto [a, b] : row) {
        const int e = fx.graph.require_edge(a, b);
        EXPECT_EQ(fx.orientation.origin(fx.graph, e), a) << name;
      }
  }
}

TEST(Builtins, ReorientedCopiesShareTheGraph) {
  EXPECT_EQ(fixture_gamma1().graph, fixture_gamma1_sec6().graph);
  EXPECT_EQ(fixture_gamma2().graph, fixture_gamma2_sec6().graph);
  EXPECT_FALSE(isomorphic(fixture_gamma1().graph, fixture_gamma2().graph));
}

TEST(Builtins, Gamma2PairAndGirth) {
  const Graph g = fixture_gamma2().graph;
  for (const Graph& x : {g, fixture_gamma1().graph}) {
    EXPECT_GE(girth(x).value_or(0), 4);
    // no triangle, checked on the adjacency relation directly
    for (int a = 0; a < x.order(); ++a)
      for (int b = a + 1; b < x.order(); ++b)
        for (int c = b + 1; c < x.order(); ++c)
          EXPECT_FALSE(x.adjacent(a, b) && x.adjacent(b, c) && x.adjacent(a, c));
  }
  const EdgeSet pair = EdgeSet::single(letter_edge(g, "fe")) | EdgeSet::single(letter_edge(g, "ij"));
  EXPECT_TRUE(bipartition(remove_edges(g, pair)));
}

TEST(Verify, FixturesAndTables) {
  Report a = verify_fixtures();
  EXPECT_TRUE(a.ok()) << failed(a);
  Report b = verify_figure_tables();
  EXPECT_TRUE(b.ok()) << failed(b);
  Report c = verify_sign_statements();
  EXPECT_TRUE(c.ok()) << failed(c);
}

TEST(Verify, Minimality) {
  for (const char* name : {"gamma1", "gamma2"}) {
    Report r = verify_minimality(name);
    EXPECT_TRUE(r.ok()) << failed(r);
    // non-Pfaffian, all deletions, then one line per recipe
    EXPECT_EQ(r.checks.size(), 2 + minimality_recipes(name).size());
  }
  EXPECT_THROW(minimality_recipes("k33"), InvalidArgument);
}

TEST(Verify, RecipesCoverEveryEdgeClass) {
  // each listed deletion names a distinct edge of the graph
  for (const char* name : {"gamma1", "gamma2"}) {
    const Graph g = builtin(name).graph;
    EdgeSet seen;
    for (const Recipe& rc : minimality_recipes(name)) {
      const int e = letter_edge(g, rc.removed);
      EXPECT_FALSE(seen.contains(e)) << rc.removed;
      seen.insert(e);
    }
  }
}

TEST(Verify, RecipeWithWrongReversalFails) {
  Fixture fx = fixture_gamma1_sec6();
  const Graph h = remove_edges(fx.graph, EdgeSet::single(letter_edge(fx.graph, "de")));
  // the recipe reverses lf; leaving the orientation alone must not work
  EXPECT_FALSE(is_pfaffian_orientation(h, transfer(fx.graph, fx.orientation, h)));
}

TEST(Verify, Corollaries) {
  Report r = verify_corollaries();
  EXPECT_TRUE(r.ok()) << failed(r);
}

TEST(Verify, WholeRun) {
  Report r = verify_paper();
  EXPECT_TRUE(r.ok()) << failed(r);
  EXPECT_GT(r.checks.size(), 40U);
}

}  // namespace
}  // namespace pfaff
