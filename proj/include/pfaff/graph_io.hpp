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

#ifndef PFAFF_GRAPH_IO_HPP
#define PFAFF_GRAPH_IO_HPP

// Line-based text formats.
//
//   graph:        v <id> [label]     e <id> <id>
//   orientation:  a <origin> <terminus>
//
// '#' starts a comment; blank lines are ignored. Vertex ids must be
// 0 .. n-1, each declared once.

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"
#include "pfaff/orientation.hpp"

namespace pfaff {

namespace detail {

struct Line {
  int number;
  std::vector<std::string> words;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline int parse_id(const Line& line, const std::string& word) {
  int value = -1;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size() || value < 0)
    throw ParseError(line.number, "expected a vertex id, got '" + word + "'");
  return value;
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::vector<std::optional<std::string>> labels;
  std::vector<bool> declared;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_lines;
  bool any_label = false;
  for (const auto& line : detail::tokenize(in)) {
    const std::string& kind = line.words[0];
    if (kind == "v") {
      if (line.words.size() < 2 || line.words.size() > 3)
        throw ParseError(line.number, "expected 'v <id> [label]'");
      int id = detail::parse_id(line, line.words[1]);
      if (id >= kMaxVertices)
        throw ParseError(line.number, "vertex id exceeds the limit of " +
                                          std::to_string(kMaxVertices - 1));
      if (id >= static_cast<int>(declared.size())) {
        declared.resize(id + 1, false);
        labels.resize(id + 1);
      }
      if (declared[id]) throw ParseError(line.number, "vertex " + line.words[1] + " declared twice");
      declared[id] = true;
      if (line.words.size() == 3) {
        labels[id] = line.words[2];
        any_label = true;
      }
    } else if (kind == "e") {
      if (line.words.size() != 3) throw ParseError(line.number, "expected 'e <id> <id>'");
      edges.emplace_back(detail::parse_id(line, line.words[1]), detail::parse_id(line, line.words[2]));
      edge_lines.push_back(line.number);
    } else {
      throw ParseError(line.number, "unknown record '" + kind + "'");
    }
  }
  for (std::size_t v = 0; v < declared.size(); ++v)
    if (!declared[v]) throw ParseError(0, "vertex ids are not dense: " + std::to_string(v) + " missing");
  const int n = static_cast<int>(declared.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a >= n || b >= n) throw ParseError(edge_lines[i], "edge uses an undeclared vertex");
    if (a == b) throw ParseError(edge_lines[i], "loops are not allowed");
    for (std::size_t k = 0; k < i; ++k)
      if (std::minmax(a, b) == std::minmax(edges[k].first, edges[k].second))
        throw ParseError(edge_lines[i], "repeated edge");
  }
  std::vector<std::string> names;
  if (any_label)
    for (int v = 0; v < n; ++v) names.push_back(labels[v].value_or(std::to_string(v)));
  try {
    return Graph(n, edges, std::move(names));
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

inline Orientation read_orientation(std::istream& in, const Graph& host) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& line : detail::tokenize(in)) {
    if (line.words[0] != "a" || line.words.size() != 3)
      throw ParseError(line.number, "expected 'a <origin> <terminus>'");
    int from = detail::parse_id(line, line.words[1]);
    int to = detail::parse_id(line, line.words[2]);
    if (from >= host.order() || to >= host.order() || !host.adjacent(from, to))
      throw ParseError(line.number, "arc " + line.words[1] + " -> " + line.words[2] +
                                        " is not an edge of the graph");
    arcs.emplace_back(from, to);
  }
  try {
    return Orientation::from_arcs(host, arcs);
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

inline Orientation parse_orientation(std::string_view text, const Graph& host) {
  std::istringstream in{std::string(text)};
  return read_orientation(in, host);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    out << "v " << v;
    if (g.has_labels()) out << ' ' << g.label(v);
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

inline void write_orientation(std::ostream& out, const Graph& g, const Orientation& o) {
  for (auto [from, to] : o.arcs(g)) out << "a " << from << ' ' << to << '\n';
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

inline std::string format_orientation(const Graph& g, const Orientation& o) {
  std::ostringstream out;
  write_orientation(out, g, o);
  return out.str();
}

}  // namespace pfaff

#endif  // PFAFF_GRAPH_IO_HPP
