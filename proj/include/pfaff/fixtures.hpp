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

#ifndef PFAFF_FIXTURES_HPP
#define PFAFF_FIXTURES_HPP

// K3,3, Γ1 and Γ2 with their printed orientations and signed 1-factor
// lists. Vertices are named a, b, c, ... and numbered alphabetically from 0.
// Each graph's edge set is the union of its printed factors.

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"
#include "pfaff/matching.hpp"
#include "pfaff/orientation.hpp"

namespace pfaff {

/// A factor row as printed: directed pairs such as "ab cd ef" meaning
/// (a,b)(c,d)(e,f).
struct PrintedRow {
  std::string_view pairs;
  int sign;
};

struct Fixture {
  std::string name;
  Graph graph;
  Orientation orientation;
  /// the printed factors, in printed order
  std::vector<OneFactor> factors;
  /// printed signs; the first row is the base
  std::vector<int> expected_signs;
  /// the printed rows as directed vertex pairs
  std::vector<std::vector<std::pair<int, int>>> rows;
};

namespace detail {

inline std::vector<std::pair<int, int>> parse_pairs(std::string_view text) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    out.emplace_back(text[i] - 'a', text[i + 1] - 'a');
    i += 2;
  }
  return out;
}

inline std::vector<std::string> letter_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

/// Builds the graph from the union of the rows and reads the orientation
/// off the directed pairs; an edge printed in both directions is an error.
inline Fixture make_fixture(std::string name, int order, const std::vector<PrintedRow>& printed) {
  std::map<std::pair<int, int>, std::pair<int, int>> direction;
  std::vector<std::vector<std::pair<int, int>>> rows;
  for (const PrintedRow& r : printed) {
    rows.push_back(parse_pairs(r.pairs));
    for (auto [a, b] : rows.back()) {
      std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      auto [it, fresh] = direction.emplace(key, std::pair{a, b});
      if (!fresh && it->second != std::pair{a, b})
        throw InternalError("fixture " + name + " orients an edge both ways");
    }
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [key, arc] : direction) {
    edges.push_back(key);
    arcs.push_back(arc);
  }
  Fixture fx{std::move(name), Graph(order, edges, letter_labels(order)), {}, {}, {}, rows};
  fx.orientation = Orientation::from_arcs(fx.graph, arcs);
  for (std::size_t i = 0; i < printed.size(); ++i) {
    EdgeSet es;
    for (auto [a, b] : rows[i]) es.insert(fx.graph.require_edge(a, b));
    fx.factors.push_back(OneFactor::of(fx.graph, es));
    fx.expected_signs.push_back(printed[i].sign);
  }
  return fx;
}

}  // namespace detail

inline Fixture fixture_k33() {
  return detail::make_fixture("k33", 6,
                              {{"ab cd ef", +1},
                               {"ab cf ed", -1},
                               {"ad cf eb", +1},
                               {"ad cb ef", -1},
                               {"af cb ed", +1},
                               {"af cd eb", -1}});
}

inline Fixture fixture_gamma1() {
  return detail::make_fixture("gamma1", 12,
                              {{"ab cd ef gh ij kl", +1},
                               {"bc de fg hi jk la", -1},
                               {"da je bc fg hi kl", +1},
                               {"bg hk cd ef ij la", -1},
                               {"ic fl ab de gh jk", +1},
                               {"da bg ic je hk fl", -1}});
}

inline Fixture fixture_gamma2() {
  return detail::make_fixture("gamma2", 12,
                              {{"ab cd fe hg ij kl", +1},
                               {"bc de gf ih jk la", -1},
                               {"el ab cd gf ih jk", +1},
                               {"hd kg bc fe ij la", -1},
                               {"ai fb cj de hg kl", +1},
                               {"ai fb cj hd el kg", -1}});
}

inline Fixture fixture_gamma1_sec6() {
  return detail::make_fixture("gamma1_sec6", 12,
                              {{"ab cd fe hg ji lk", +1},
                               {"la bc de gf ih kj", +1},
                               {"bc ad fe hg ji lk", +1},
                               {"ab cd je gf ih lk", +1},
                               {"ad bc je gf ih lk", +1},
                               {"la bc de gf kh ji", +1},
                               {"la bg ih kj cd fe", +1},
                               {"la bg kh cd fe ji", +1},
                               {"lf de ci kj ab hg", +1},
                               {"ad bg ci je kh lf", -1}});
}

inline Fixture fixture_gamma2_sec6() {
  return detail::make_fixture("gamma2_sec6", 12,
                              {{"ab cd ef gh ij kl", +1},
                               {"cb ed gf ih kj al", -1},
                               {"ab cj ed gf ih kl", -1},
                               {"ab cd el gf ih kj", -1},
                               {"cb dh kg al ef ij", -1},
                               {"bf ed cj ai kl gh", -1},
                               {"bf ai kj el cd gh", -1},
                               {"ed bf al kg ih cj", -1},
                               {"gf dh cb ai kj el", -1},
                               {"bf el kg dh cj ai", -1}});
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"k33", "gamma1", "gamma2", "gamma1_sec6",
                                              "gamma2_sec6"};
  return names;
}

inline Fixture builtin(std::string_view name) {
  if (name == "k33") return fixture_k33();
  if (name == "gamma1") return fixture_gamma1();
  if (name == "gamma2") return fixture_gamma2();
  if (name == "gamma1_sec6") return fixture_gamma1_sec6();
  if (name == "gamma2_sec6") return fixture_gamma2_sec6();
  throw InvalidArgument("unknown builtin '" + std::string(name) + "'");
}

}  // namespace pfaff

#endif  // PFAFF_FIXTURES_HPP
