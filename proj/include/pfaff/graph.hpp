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

#ifndef PFAFF_GRAPH_HPP
#define PFAFF_GRAPH_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/small_set.hpp"

namespace pfaff {

inline constexpr int kMaxVertices = VertexSet::capacity;
inline constexpr int kMaxEdges = EdgeSet::capacity;

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr int other(int w) const { return w == u ? v : u; }
  constexpr bool has(int w) const { return w == u || w == v; }
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on the dense vertex ids 0..order()-1.
///
/// Edges are kept sorted by (u, v); an edge's position in that list is its
/// index, which is what EdgeSet bits refer to. Labels are an optional alias
/// map used by the built-in fixtures and the text format.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidArgument on loops, repeated edges, unknown endpoints or
  /// graphs beyond the word-sized limits.
  Graph(int order, std::span<const std::pair<int, int>> edges,
        std::vector<std::string> labels = {})
      : order_(order), labels_(std::move(labels)) {
    if (order < 0 || order > kMaxVertices)
      throw InvalidArgument("graph order must be in [0, " +
                            std::to_string(kMaxVertices) + "]");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != order)
      throw InvalidArgument("label count does not match the vertex count");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || a >= order || b < 0 || b >= order)
        throw InvalidArgument("edge endpoint is not a vertex: " +
                              std::to_string(a) + " " + std::to_string(b));
      if (a == b) throw InvalidArgument("loop at vertex " + std::to_string(a));
      edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw InvalidArgument("repeated edge");
    if (static_cast<int>(edges_.size()) > kMaxEdges)
      throw InvalidArgument("graph has more than " + std::to_string(kMaxEdges) +
                            " edges");
    rebuild();
  }

  Graph(int order, std::initializer_list<std::pair<int, int>> edges)
      : Graph(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  VertexSet vertices() const { return VertexSet::first(order_); }
  EdgeSet all_edges() const { return EdgeSet::first(size()); }

  VertexSet neighbours(int v) const { return adjacency_[v]; }
  EdgeSet incident(int v) const { return incidence_[v]; }
  int degree(int v) const { return adjacency_[v].size(); }
  bool adjacent(int a, int b) const { return adjacency_[a].contains(b); }

  std::optional<int> edge_index(int a, int b) const {
    if (a < 0 || b < 0 || a >= order_ || b >= order_ || a == b) return std::nullopt;
    const Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  /// Like edge_index but throws when the edge is absent.
  int require_edge(int a, int b) const {
    if (auto e = edge_index(a, b)) return *e;
    throw InvalidArgument("no edge " + label(a) + "-" + label(b));
  }

  /// Vertices covered by an edge subset.
  VertexSet endpoints(EdgeSet es) const {
    VertexSet out;
    for (int e : es) {
      out.insert(edges_[e].u);
      out.insert(edges_[e].v);
    }
    return out;
  }

  /// Edges with both ends in `vs`.
  EdgeSet edges_within(VertexSet vs) const {
    EdgeSet out;
    for (int e = 0; e < size(); ++e)
      if (vs.contains(edges_[e].u) && vs.contains(edges_[e].v)) out.insert(e);
    return out;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }
  std::optional<int> vertex_by_label(std::string_view name) const {
    for (int v = 0; v < order_; ++v)
      if (label(v) == name) return v;
    return std::nullopt;
  }

  std::vector<std::pair<int, int>> edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  /// Same vertex ids, same labels; equality of edge sets.
  bool operator==(const Graph& o) const {
    return order_ == o.order_ && edges_ == o.edges_;
  }

 private:
  void rebuild() {
    adjacency_.fill(VertexSet{});
    incidence_.fill(EdgeSet{});
    for (int i = 0; i < size(); ++i) {
      const Edge& e = edges_[i];
      adjacency_[e.u].insert(e.v);
      adjacency_[e.v].insert(e.u);
      incidence_[e.u].insert(i);
      incidence_[e.v].insert(i);
    }
  }

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::array<VertexSet, kMaxVertices> adjacency_{};
  std::array<EdgeSet, kMaxVertices> incidence_{};
};

/// Result of building a graph from a subset of another graph's edges.
struct Subgraph {
  Graph graph;
  /// host edge index of each edge of `graph`
  std::vector<int> host_edge;
};

/// Spanning subgraph keeping only `keep` (same vertex ids and labels).
inline Subgraph spanning_subgraph(const Graph& g, EdgeSet keep) {
  std::vector<std::pair<int, int>> pairs;
  for (int e : keep) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
  Subgraph out{Graph(g.order(), pairs, g.labels()), {}};
  out.host_edge.reserve(pairs.size());
  for (const Edge& e : out.graph.edges()) out.host_edge.push_back(g.require_edge(e.u, e.v));
  return out;
}

/// G - es, keeping every vertex.
inline Graph remove_edges(const Graph& g, EdgeSet es) {
  return spanning_subgraph(g, g.all_edges() - es).graph;
}

/// Vertex-induced or edge-defined subgraph renumbered densely.
struct Relabelled {
  Graph graph;
  /// host vertex id of each vertex of `graph`, ascending
  std::vector<int> host_vertex;
};

/// Subgraph on the vertex set `vs` using the host edges `es` (which must lie
/// inside `vs`). Vertices are renumbered in ascending host order.
inline Relabelled extract(const Graph& g, VertexSet vs, EdgeSet es) {
  std::vector<int> local(g.order(), -1);
  Relabelled out;
  for (int v : vs) {
    local[v] = static_cast<int>(out.host_vertex.size());
    out.host_vertex.push_back(v);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int e : es) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] < 0 || local[ed.v] < 0)
      throw InvalidArgument("edge leaves the extracted vertex set");
    pairs.emplace_back(local[ed.u], local[ed.v]);
  }
  std::vector<std::string> labels;
  if (g.has_labels())
    for (int v : out.host_vertex) labels.push_back(g.label(v));
  out.graph = Graph(static_cast<int>(out.host_vertex.size()), pairs, std::move(labels));
  return out;
}

inline Relabelled induced_subgraph(const Graph& g, VertexSet vs) {
  return extract(g, vs, g.edges_within(vs));
}

/// Subgraph determined by an edge set: its vertices are the endpoints.
inline Relabelled edge_induced(const Graph& g, EdgeSet es) {
  return extract(g, g.endpoints(es), es);
}

/// Vertices reachable from `start` inside `within` using edges of `es`.
inline VertexSet component_of(const Graph& g, int start, VertexSet within,
                              EdgeSet es) {
  VertexSet seen = VertexSet::single(start);
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.incident(v) & es) {
      int w = g.edge(e).other(v);
      if (within.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, 0, g.vertices(), g.all_edges()) == g.vertices();
}

/// Connectivity of the graph induced by an edge set on its endpoints.
inline bool edges_connected(const Graph& g, EdgeSet es) {
  if (es.empty()) return true;
  VertexSet ends = g.endpoints(es);
  return component_of(g, ends.front(), ends, es) == ends;
}

struct Bipartition {
  VertexSet m;
  VertexSet n;
  bool operator==(const Bipartition&) const = default;
};

/// Two-colouring restricted to the edges `es`, or nullopt when they contain
/// an odd circuit. In every component the side holding the smallest vertex
/// id goes to M.
inline std::optional<Bipartition> bipartition(const Graph& g, EdgeSet es) {
  std::vector<int> colour(g.order(), -1);
  Bipartition out;
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v) & es) {
        int w = g.edge(e).other(v);
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < g.order(); ++v) (colour[v] == 0 ? out.m : out.n).insert(v);
  return out;
}

inline std::optional<Bipartition> bipartition(const Graph& g) {
  return bipartition(g, g.all_edges());
}

inline bool is_bipartite(const Graph& g, EdgeSet es) {
  return bipartition(g, es).has_value();
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_regular(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

inline std::string edge_name(const Graph& g, int e) {
  return g.label(g.edge(e).u) + "-" + g.label(g.edge(e).v);
}

}  // namespace pfaff

#endif  // PFAFF_GRAPH_HPP
