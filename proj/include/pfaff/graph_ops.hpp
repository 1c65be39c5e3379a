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

#ifndef PFAFF_GRAPH_OPS_HPP
#define PFAFF_GRAPH_OPS_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"

namespace pfaff {

struct Contraction {
  Graph graph;
  /// new id of every old vertex
  std::vector<int> image;
  /// id of the vertex the contracted set became
  int merged = -1;
  /// true when two edges collapsed onto one (simple-graph semantics)
  bool merged_parallels = false;
};

/// Replaces the vertex set `s` by a single vertex. Edges inside `s` vanish,
/// parallel edges merge. The surviving vertices keep their relative order and
/// the new vertex takes the place of min(s).
inline Contraction contract_with_map(const Graph& g, VertexSet s) {
  if (s.empty()) throw InvalidArgument("cannot contract an empty vertex set");
  if (!s.is_subset_of(g.vertices()))
    throw InvalidArgument("contracted set contains an unknown vertex");
  const int keep = s.front();
  Contraction out;
  out.image.assign(g.order(), -1);
  int next = 0;
  std::vector<std::string> labels;
  for (int v = 0; v < g.order(); ++v) {
    if (s.contains(v) && v != keep) continue;
    out.image[v] = next++;
    if (g.has_labels()) {
      if (v != keep || s.size() == 1) {
        labels.push_back(g.label(v));
      } else {
        std::string joined;
        for (int w : s) joined += (joined.empty() ? "" : "+") + g.label(w);
        labels.push_back(std::move(joined));
      }
    }
  }
  for (int v : s) out.image[v] = out.image[keep];
  out.merged = out.image[keep];

  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) {
    int a = out.image[e.u];
    int b = out.image[e.v];
    if (a == b) continue;
    if (!pairs.emplace(std::min(a, b), std::max(a, b)).second) out.merged_parallels = true;
  }
  std::vector<std::pair<int, int>> list(pairs.begin(), pairs.end());
  out.graph = Graph(next, list, std::move(labels));
  return out;
}

inline Graph contract(const Graph& g, VertexSet s) { return contract_with_map(g, s).graph; }

/// Replaces edge `e` by a path of `length` edges through length-1 new
/// vertices, appended after the existing ids. Odd lengths make the step an
/// even subdivision.
inline Graph subdivide_edge(const Graph& g, int e, int length) {
  if (e < 0 || e >= g.size()) throw InvalidArgument("edge index out of range");
  if (length < 1) throw InvalidArgument("subdivision length must be at least 1");
  const Edge target = g.edge(e);
  const int fresh = length - 1;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < g.size(); ++i)
    if (i != e) pairs.emplace_back(g.edge(i).u, g.edge(i).v);
  int prev = target.u;
  for (int i = 0; i < fresh; ++i) {
    pairs.emplace_back(prev, g.order() + i);
    prev = g.order() + i;
  }
  pairs.emplace_back(prev, target.v);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    for (int i = 0; i < fresh; ++i)
      labels.push_back(g.label(target.u) + g.label(target.v) + "." + std::to_string(i + 1));
  }
  return Graph(g.order() + fresh, pairs, std::move(labels));
}

inline Graph subdivide_edge(const Graph& g, int a, int b, int length) {
  return subdivide_edge(g, g.require_edge(a, b), length);
}

struct Suppression {
  /// graph on the vertices of degree other than 2
  Graph base;
  /// host vertex of each base vertex
  std::vector<int> branch;
  /// for each base edge (by index), the host vertex path it replaces, running
  /// from branch[u] to branch[v] of that base edge
  std::vector<std::vector<int>> chains;

  int chain_length(int base_edge) const {
    return static_cast<int>(chains[base_edge].size()) - 1;
  }
};

/// Replaces every maximal path whose interior vertices have degree 2 by a
/// single edge. Throws InvalidArgument for disconnected input, a bare
/// circuit, or when the result would need a loop or a multiple edge.
inline Suppression suppress_degree2(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("cannot suppress an empty graph");
  if (!is_connected(g)) throw InvalidArgument("suppression needs a connected graph");
  std::vector<int> local(g.order(), -1);
  Suppression out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) {
      local[v] = static_cast<int>(out.branch.size());
      out.branch.push_back(v);
    }
  }
  if (out.branch.empty()) throw InvalidArgument("graph is a bare circuit");

  struct Raw {
    int a, b;
    std::vector<int> path;
  };
  std::vector<Raw> raw;
  EdgeSet walked;
  for (int start : out.branch) {
    for (int first : g.incident(start)) {
      if (walked.contains(first)) continue;
      std::vector<int> path{start};
      int prev = start;
      int e = first;
      int cur = g.edge(e).other(start);
      walked.insert(e);
      while (g.degree(cur) == 2) {
        path.push_back(cur);
        EdgeSet next = g.incident(cur) - EdgeSet::single(e);
        e = next.front();
        walked.insert(e);
        prev = cur;
        cur = g.edge(e).other(prev);
      }
      path.push_back(cur);
      if (cur == start) throw InvalidArgument("suppression would create a loop at " + g.label(start));
      raw.push_back({local[start], local[cur], std::move(path)});
    }
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  if (g.has_labels())
    for (int v : out.branch) labels.push_back(g.label(v));
  for (const Raw& r : raw) pairs.emplace_back(r.a, r.b);
  try {
    out.base = Graph(static_cast<int>(out.branch.size()), pairs, std::move(labels));
  } catch (const InvalidArgument&) {
    throw InvalidArgument("suppression would create a multiple edge");
  }
  out.chains.resize(raw.size());
  for (Raw& r : raw) {
    int idx = out.base.require_edge(r.a, r.b);
    if (r.a > r.b) std::reverse(r.path.begin(), r.path.end());
    out.chains[idx] = std::move(r.path);
  }
  return out;
}

}  // namespace pfaff

#endif  // PFAFF_GRAPH_OPS_HPP
