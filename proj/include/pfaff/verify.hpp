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

#ifndef PFAFF_VERIFY_HPP
#define PFAFF_VERIFY_HPP

// Executable checks of the claims attached to K3,3, Γ1 and Γ2: the signed
// factor tables, minimality with its reorientation recipes, and the two
// non-reduction corollaries.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfaff/characterize.hpp"
#include "pfaff/cycles.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/fixtures.hpp"
#include "pfaff/graph.hpp"
#include "pfaff/matching.hpp"
#include "pfaff/pfaffian.hpp"

namespace pfaff {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

namespace detail {

inline std::string sign_string(const std::vector<int>& signs) {
  std::string s;
  for (int x : signs) s += x > 0 ? '+' : '-';
  return s;
}

/// Signs of the fixture's printed factors relative to its first one.
inline std::vector<int> computed_signs(const Fixture& fx) {
  std::vector<int> out;
  for (const OneFactor& f : fx.factors)
    out.push_back(factor_sign(fx.graph, fx.orientation, fx.factors.front(), f));
  return out;
}

inline std::vector<int> relative_expected(const Fixture& fx) {
  std::vector<int> out;
  for (int s : fx.expected_signs) out.push_back(s * fx.expected_signs.front());
  return out;
}

inline EdgeSet edge_of(const Graph& g, std::string_view name) {
  return EdgeSet::single(g.require_edge(name[0] - 'a', name[1] - 'a'));
}

}  // namespace detail

/// Stored factor lists and signs agree with fresh computation.
inline Report verify_fixtures() {
  Report r;
  for (const std::string& name : builtin_names()) {
    Fixture fx = builtin(name);
    auto all = enumerate_one_factors(fx.graph);
    bool subset = std::all_of(fx.factors.begin(), fx.factors.end(), [&](const OneFactor& f) {
      return std::find(all.begin(), all.end(), f) != all.end();
    });
    const bool complete = fx.factors.size() == all.size();
    r.add(name + ": printed factors are 1-factors" + (complete ? " (all of them)" : ""), subset,
          std::to_string(fx.factors.size()) + " printed, " + std::to_string(all.size()) +
              " enumerated");
    auto got = detail::computed_signs(fx);
    auto want = detail::relative_expected(fx);
    r.add(name + ": stored signs match recomputation", got == want,
          detail::sign_string(got) + " vs " + detail::sign_string(want));
  }
  for (const char* name : {"gamma1", "gamma2"}) {
    Fixture fx = builtin(name);
    r.add(std::string(name) + ": 12 vertices, 18 edges, cubic",
          fx.graph.order() == 12 && fx.graph.size() == 18 && is_regular(fx.graph, 3));
    r.add(std::string(name) + ": same graph as the _sec6 fixture",
          fx.graph == builtin(std::string(name) + "_sec6").graph);
  }
  return r;
}

/// Figure tables: every edge lies in exactly two printed factors, the signs
/// split 3/3 (odd/odd), and each row's sign matches the printed column.
inline Report verify_figure_tables() {
  Report r;
  for (const char* name : {"k33", "gamma1", "gamma2"}) {
    Fixture fx = builtin(name);
    bool twice = true;
    for (int e = 0; e < fx.graph.size(); ++e) {
      int k = 0;
      for (const OneFactor& f : fx.factors) k += f.contains(e) ? 1 : 0;
      twice = twice && k == 2;
    }
    r.add(std::string(name) + ": every edge in exactly two listed factors", twice);
    auto got = detail::computed_signs(fx);
    int plus = static_cast<int>(std::count(got.begin(), got.end(), 1));
    int minus = static_cast<int>(got.size()) - plus;
    r.add(std::string(name) + ": odd/odd sign split", plus % 2 == 1 && minus % 2 == 1,
          std::to_string(plus) + " plus, " + std::to_string(minus) + " minus");
    r.add(std::string(name) + ": signs match the printed table",
          got == detail::relative_expected(fx), detail::sign_string(got));
  }
  Fixture k33 = fixture_k33();
  r.add("k33: the table lists all 1-factors", enumerate_one_factors(k33.graph).size() == 6);
  return r;
}

/// Sign statements for the reoriented Γ1 and Γ2.
inline Report verify_sign_statements() {
  Report r;
  {
    Fixture fx = fixture_gamma1_sec6();
    auto got = detail::computed_signs(fx);
    bool ok = got.size() == 10 && got.back() == -1 &&
              std::all_of(got.begin(), got.end() - 1, [](int s) { return s == 1; });
    r.add("gamma1_sec6: all plus except f10", ok, detail::sign_string(got));
  }
  {
    Fixture fx = fixture_gamma2_sec6();
    auto got = detail::computed_signs(fx);
    bool ok = got.size() == 10 &&
              std::all_of(got.begin() + 1, got.end(), [&](int s) { return s == -got.front(); });
    r.add("gamma2_sec6: f1 opposite to all others", ok, detail::sign_string(got));
  }
  for (const char* name : {"k33", "gamma1_sec6", "gamma2_sec6"}) {
    Fixture fx = builtin(name);
    auto all = enumerate_one_factors(fx.graph);
    bool same = all.size() == fx.factors.size() &&
                std::all_of(fx.factors.begin(), fx.factors.end(), [&](const OneFactor& f) {
                  return std::find(all.begin(), all.end(), f) != all.end();
                });
    r.add(std::string(name) + ": listed factors are exactly the 1-factors", same,
          std::to_string(all.size()) + " enumerated");
  }
  return r;
}

/// One reorientation recipe: deleting `removed` and reversing `reversed`
/// (empty for none) gives a Pfaffian orientation of the rest.
struct Recipe {
  std::string_view removed;
  std::string_view reversed;
};

inline std::vector<Recipe> minimality_recipes(std::string_view name) {
  if (name == "gamma1")
    return {{"de", "lf"}, {"kj", "lf"}, {"gf", "je"}, {"ih", "je"}, {"la", "bg"}, {"bc", "ad"},
            {"ad", ""},   {"bg", ""},   {"ci", ""},   {"je", ""},   {"kh", ""},   {"lf", ""}};
  if (name == "gamma2")
    return {{"el", "cd"}, {"dh", "ef"}, {"ai", "gh"}, {"ab", ""}, {"cd", ""},
            {"ef", ""},   {"gh", ""},   {"ij", ""},   {"kl", ""}};
  throw InvalidArgument("minimality is checked for gamma1 and gamma2 only");
}

/// G is non-Pfaffian, G - x is Pfaffian for every edge x, and every recipe
/// validates against the reoriented fixture.
inline Report verify_minimality(std::string_view name) {
  Report r;
  Fixture fx = builtin(std::string(name) + "_sec6");
  const Graph& g = fx.graph;
  r.add(std::string(name) + ": non-Pfaffian", !is_pfaffian(g));
  int pfaffian_deletions = 0;
  std::string failures;
  for (int x = 0; x < g.size(); ++x) {
    if (is_pfaffian(remove_edges(g, EdgeSet::single(x)))) {
      ++pfaffian_deletions;
    } else {
      failures += " " + edge_name(g, x);
    }
  }
  r.add(std::string(name) + ": G - x Pfaffian for all " + std::to_string(g.size()) + " edges",
        pfaffian_deletions == g.size(), failures.empty() ? "" : "fails for" + failures);
  for (const Recipe& rc : minimality_recipes(name)) {
    const EdgeSet x = detail::edge_of(g, rc.removed);
    Orientation o = fx.orientation;
    if (!rc.reversed.empty()) o = o.flipped(detail::edge_of(g, rc.reversed));
    const Graph h = remove_edges(g, x);
    bool ok = is_pfaffian_orientation(h, transfer(g, o, h));
    std::string label = std::string(name) + " - " + std::string(rc.removed) + ": " +
                        (rc.reversed.empty() ? std::string("orientation unchanged")
                                             : "reverse " + std::string(rc.reversed));
    r.add(label, ok);
  }
  return r;
}

/// Neither Γ1 nor Γ2 contains an even subdivision of K3,3 or reduces to
/// one (both searches exhaustive); both are cubic with girth at least 4.
inline Report verify_corollaries() {
  Report r;
  for (Target t : {Target::kGamma1, Target::kGamma2}) {
    const Graph& g = target_graph(t);
    const std::string name = to_string(t);
    r.add(name + ": cubic", is_regular(g, 3));
    auto gi = girth(g);
    r.add(name + ": girth at least 4", gi && *gi >= 4, gi ? "girth " + std::to_string(*gi) : "");
    try {
      r.add(name + ": no even subdivision of K3,3 as a subgraph",
            !find_even_subdivision_subgraph(g, Target::kK33).has_value());
    } catch (const BudgetExceeded& e) {
      r.add(name + ": no even subdivision of K3,3 as a subgraph", false, e.what());
    }
    try {
      r.add(name + ": not reducible to an even subdivision of K3,3",
            !is_reducible_to_even_subdivision(g, Target::kK33).has_value());
    } catch (const BudgetExceeded& e) {
      r.add(name + ": not reducible to an even subdivision of K3,3", false, e.what());
    }
  }
  return r;
}

/// GF(2) decision, exhaustive orientation search and both Pfaffian criteria
/// agree on every fixture and on each one-edge deletion of Γ1 and Γ2.
inline Report verify_decider_agreement() {
  Report r;
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const char* name : {"k33", "gamma1", "gamma2"}) graphs.emplace_back(name, builtin(name).graph);
  for (Target t : {Target::kGamma1, Target::kGamma2}) {
    const Graph& g = target_graph(t);
    for (int x = 0; x < g.size(); ++x)
      graphs.emplace_back(std::string(to_string(t)) + " - " + edge_name(g, x),
                          remove_edges(g, EdgeSet::single(x)));
  }
  int agree = 0;
  std::string failures;
  for (const auto& [name, g] : graphs) {
    bool by_system = find_pfaffian_orientation(g).has_value();
    bool by_search = brute_force_pfaffian_orientation(g).has_value();
    if (by_system == by_search) {
      ++agree;
    } else {
      failures += " " + name;
    }
  }
  r.add("GF(2) and exhaustive deciders agree on " + std::to_string(graphs.size()) + " graphs",
        agree == static_cast<int>(graphs.size()), failures);
  return r;
}

/// Everything above.
inline Report verify_paper() {
  Report r;
  r.append(verify_fixtures());
  r.append(verify_figure_tables());
  r.append(verify_sign_statements());
  r.append(verify_minimality("gamma1"));
  r.append(verify_minimality("gamma2"));
  r.append(verify_corollaries());
  r.append(verify_decider_agreement());
  return r;
}

}  // namespace pfaff

#endif  // PFAFF_VERIFY_HPP
