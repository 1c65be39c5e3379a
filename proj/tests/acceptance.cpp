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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pfaff/pfaff.hpp"

namespace pfaff {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok || detail.size() < 400) detail += (detail.empty() ? "" : "; ") + why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double s = seconds_since(t0);
  if (limit_s > 0 && s > limit_s) out.fail("took longer than " + std::to_string(limit_s) + " s");
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, s,
              out.detail.empty() ? "" : " - ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

/// Sign of each listed factor relative to the first listed one, read off
/// the computed table.
std::vector<int> listed_signs(const Graph& g, const Orientation& o,
                              const std::vector<OneFactor>& listed, Outcome& out) {
  const SignedFactorTable t = sign_table(g, o);
  std::vector<int> raw;
  for (const OneFactor& f : listed) {
    int s = 0;
    for (const auto& [row, sign] : t.rows)
      if (row == f) s = sign;
    if (s == 0) out.fail("listed factor missing from the table");
    raw.push_back(s);
  }
  if (!raw.empty() && raw.front() != 0) {
    const int first = raw.front();
    for (int& s : raw) s *= first;
  }
  return raw;
}

std::string signs_text(const std::vector<int>& s) {
  std::string out;
  for (int x : s) out += x > 0 ? '+' : '-';
  return out;
}

bool same_factor_sets(const std::vector<OneFactor>& a, const std::vector<OneFactor>& b) {
  if (a.size() != b.size()) return false;
  for (const OneFactor& f : a)
    if (std::find(b.begin(), b.end(), f) == b.end()) return false;
  return true;
}

/// The graph itself plus every even subdivision adding total length at most
/// four: one edge by 3 or by 5, or two edges by 3 each.
std::vector<Graph> small_even_subdivisions(const Graph& g) {
  std::vector<Graph> out{g};
  for (int e = 0; e < g.size(); ++e) {
    out.push_back(subdivide_edge(g, e, 3));
    out.push_back(subdivide_edge(g, e, 5));
    for (int e2 = e + 1; e2 < g.size(); ++e2) {
      const Graph once = subdivide_edge(g, e, 3);
      out.push_back(subdivide_edge(once, once.require_edge(g.edge(e2).u, g.edge(e2).v), 3));
    }
  }
  return out;
}

Orientation random_orientation(const Graph& g, std::mt19937_64& rng) {
  return Orientation(g).flipped(EdgeSet(rng() & g.all_edges().bits()));
}

std::vector<Graph> census_with_matching(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; n += 2)
    for (Graph& g : connected_graphs(n))
      if (has_perfect_matching(g)) out.push_back(std::move(g));
  return out;
}

int clockwise_even_count(const Graph& g, const std::vector<EdgeCycle>& set, const Orientation& o) {
  int k = 0;
  for (const EdgeCycle& c : set) k += clockwise_parity(g, c, o) == ClockwiseParity::kEven;
  return k;
}

}  // namespace
}  // namespace pfaff

int main() {
  using namespace pfaff;
  bool all = true;

  all &= run(1, "K3,3 sign table matches the printed rows", 1.0, [] {
    Outcome out;
    Fixture fx = fixture_k33();
    const SignedFactorTable t = sign_table(fx.graph, fx.orientation);
    std::vector<OneFactor> table;
    for (const auto& row : t.rows) table.push_back(row.first);
    if (!same_factor_sets(table, fx.factors)) out.fail("table rows differ from the printed rows");
    const std::vector<int> want{+1, -1, +1, -1, +1, -1};
    auto got = listed_signs(fx.graph, fx.orientation, fx.factors, out);
    if (got != want) out.fail("signs " + signs_text(got));
    return out;
  });

  all &= run(2, "figure factors of the two gammas cover each edge twice, split 3/3", 1.0, [] {
    Outcome out;
    for (const char* name : {"gamma1", "gamma2"}) {
      Fixture fx = builtin(name);
      if (fx.factors.size() != 6) out.fail(std::string(name) + ": not six factors");
      for (int e = 0; e < fx.graph.size(); ++e) {
        int k = 0;
        for (const OneFactor& f : fx.factors) k += f.contains(e);
        if (k != 2) out.fail(std::string(name) + ": edge " + edge_name(fx.graph, e) + " covered " + std::to_string(k) + " times");
      }
      auto s = listed_signs(fx.graph, fx.orientation, fx.factors, out);
      if (std::count(s.begin(), s.end(), 1) != 3) out.fail(std::string(name) + ": signs " + signs_text(s));
    }
    return out;
  });

  all &= run(3, "reoriented sign statements", 0, [] {
    Outcome out;
    {
      Fixture fx = fixture_gamma1_sec6();
      auto s = listed_signs(fx.graph, fx.orientation, fx.factors, out);
      if (signs_text(s) != "+++++++++-") out.fail("gamma1: " + signs_text(s));
    }
    {
      Fixture fx = fixture_gamma2_sec6();
      auto s = listed_signs(fx.graph, fx.orientation, fx.factors, out);
      if (signs_text(s) != "+---------") out.fail("gamma2: " + signs_text(s));
    }
    return out;
  });

  all &= run(4, "1-factor counts 6, 10, 10 equal to the listed sets", 0, [] {
    Outcome out;
    if (enumerate_one_factors(fixture_k33().graph).size() != 6) out.fail("k33");
    for (const char* name : {"gamma1_sec6", "gamma2_sec6"}) {
      Fixture fx = builtin(name);
      auto all_f = enumerate_one_factors(fx.graph);
      if (all_f.size() != 10) out.fail(std::string(name) + ": " + std::to_string(all_f.size()) + " factors");
      if (!same_factor_sets(all_f, fx.factors)) out.fail(std::string(name) + ": sets differ");
    }
    return out;
  });

  all &= run(5, "Pfaffian decisions on fixtures, small even subdivisions, C4, C6, K4", 0, [] {
    Outcome out;
    double slowest = 0;
    int decided = 0;
    auto decide = [&](const Graph& g, bool want, const std::string& what) {
      const auto t0 = Clock::now();
      const bool got = is_pfaffian(g);
      const double s = seconds_since(t0);
      slowest = std::max(slowest, s);
      ++decided;
      if (got != want) out.fail(what + " decided " + (got ? "Pfaffian" : "non-Pfaffian"));
      if (s > 10.0) out.fail(what + " took " + std::to_string(s) + " s");
    };
    for (const char* name : {"k33", "gamma1", "gamma2"})
      for (const Graph& g : small_even_subdivisions(builtin(name).graph)) decide(g, false, name);
    auto cycle = [](int n) {
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
      return Graph(n, e);
    };
    decide(cycle(4), true, "C4");
    decide(cycle(6), true, "C6");
    decide(Graph(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), true, "K4");
    if (out.ok) out.detail = std::to_string(decided) + " graphs, slowest " + std::to_string(slowest) + " s";
    return out;
  });

  all &= run(6, "minimality of the two gammas and the reorientation recipes", 300.0, [] {
    Outcome out;
    for (const char* name : {"gamma1", "gamma2"}) {
      Fixture fx = builtin(std::string(name) + "_sec6");
      if (is_pfaffian(fx.graph)) out.fail(std::string(name) + " is Pfaffian");
      for (int x = 0; x < fx.graph.size(); ++x)
        if (!is_pfaffian(remove_edges(fx.graph, EdgeSet::single(x))))
          out.fail(std::string(name) + " - " + edge_name(fx.graph, x) + " non-Pfaffian");
      Report r = verify_minimality(name);
      for (const Check& c : r.checks)
        if (!c.ok) out.fail(c.name);
    }
    return out;
  });

  all &= run(7, "no even K3,3 subdivision inside, no reduction to one", 600.0, [] {
    Outcome out;
    for (Target t : {Target::kGamma1, Target::kGamma2}) {
      const Graph& g = target_graph(t);
      if (find_even_subdivision_subgraph(g, Target::kK33)) out.fail(std::string(to_string(t)) + ": subgraph found");
      if (is_reducible_to_even_subdivision(g, Target::kK33, g.order()))
        out.fail(std::string(to_string(t)) + ": reduction found");
    }
    return out;
  });

  all &= run(8, "GF(2) decision equals gauge-fixed brute force on the 8-vertex census", 1800.0, [] {
    Outcome out;
    const auto census = census_with_matching(8);
    for (const Graph& g : census)
      if (find_pfaffian_orientation(g).has_value() != brute_force_pfaffian_orientation(g).has_value())
        out.fail("disagree on\n" + format_graph(g));
    if (out.ok) out.detail = std::to_string(census.size()) + " graphs";
    return out;
  });

  all &= run(9, "Kasteleyn equivalence and circuit parity on the same census", 0, [] {
    Outcome out;
    std::mt19937_64 rng(9);
    const auto census = census_with_matching(8);
    long sets = 0;
    for (const Graph& g : census) {
      std::vector<Orientation> os{Orientation(g), random_orientation(g, rng)};
      if (auto p = find_pfaffian_orientation(g)) os.push_back(*p);
      for (const Orientation& o : os)
        if (sign_table_constant(g, o) != central_circuits_clockwise_odd(g, o))
          out.fail("Kasteleyn criterion disagrees on\n" + format_graph(g));
      const Orientation other = random_orientation(g, rng);
      const OneFactor f = enumerate_one_factors(g).front();
      auto alt = alternating_circuits(g, f);
      for (std::size_t i = 0; i < alt.size(); ++i)
        for (std::size_t j = i + 1; j < alt.size(); ++j) {
          std::vector<EdgeCycle> set{alt[i].cycle, alt[j].cycle};
          for (EdgeCycle& c : split_into_circuits(g, alt[i].cycle.edges ^ alt[j].cycle.edges))
            set.push_back(std::move(c));
          const int k = clockwise_even_count(g, set, os[1]);
          if (k % 2 != clockwise_even_count(g, set, other) % 2)
            out.fail("even count parity changed under reorientation");
          const bool opposite = clockwise_parity(g, set[0], os[1]) != clockwise_parity(g, set[1], os[1]);
          const int in_sum = k - (clockwise_parity(g, set[0], os[1]) == ClockwiseParity::kEven) -
                             (clockwise_parity(g, set[1], os[1]) == ClockwiseParity::kEven);
          if (opposite != (in_sum % 2 == 1)) out.fail("parity statement fails");
          ++sets;
        }
    }
    if (out.ok) out.detail = std::to_string(census.size()) + " graphs, " + std::to_string(sets) + " circuit sets";
    return out;
  });

  all &= run(10, "degree-2 contraction keeps Pfaffian status on 1000 random graphs", 0, [] {
    Outcome out;
    std::mt19937_64 rng(10);
    int tested = 0;
    while (tested < 1000) {
      const int n = 3 + static_cast<int>(rng() % 8);
      Graph g = random_graph(n, 0.2 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng);
      std::vector<int> deg2;
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2) deg2.push_back(v);
      if (deg2.empty()) continue;
      const int v = deg2[rng() % deg2.size()];
      if (is_pfaffian(g) != is_pfaffian(contract_degree2(g, v))) out.fail("violation on\n" + format_graph(g));
      ++tested;
    }
    return out;
  });

  all &= run(11, "witness exists exactly for non-Pfaffian near-bipartite graphs", 0, [] {
    Outcome out;
    std::vector<Graph> corpus;
    for (const char* name : {"k33", "gamma1", "gamma2"})
      for (Graph& g : small_even_subdivisions(builtin(name).graph)) corpus.push_back(std::move(g));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 4000; ++trial) {
      const int n = 4 + 2 * static_cast<int>(rng() % 4);
      corpus.push_back(random_graph(n, 0.3 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng));
    }
    int near = 0, non_pfaffian = 0, random_near = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Graph& g = corpus[i];
      if (find_near_bipartite_pairs(g).empty()) continue;
      ++near;
      random_near += g.order() <= 10 && i >= corpus.size() - 4000;
      MainTheoremReport rep = check_main_theorem(g);
      if (rep.inconclusive || !rep.exhaustive) {
        out.fail("search not exhaustive on\n" + format_graph(g));
        continue;
      }
      non_pfaffian += !rep.pfaffian;
      if (rep.witness.has_value() == rep.pfaffian) out.fail("violation on\n" + format_graph(g));
    }
    if (random_near == 0) out.fail("no random near-bipartite graphs in the corpus");
    if (out.ok)
      out.detail = std::to_string(near) + " near-bipartite graphs (" + std::to_string(random_near) +
                   " random), " + std::to_string(non_pfaffian) + " non-Pfaffian";
    return out;
  });

  return all ? 0 : 1;
}
