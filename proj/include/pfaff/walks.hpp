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

#ifndef PFAFF_WALKS_HPP
#define PFAFF_WALKS_HPP

// Splitting directed walks into a path plus directed circuits, in graphs
// where every vertex has indegree 1 or outdegree 1 (the shape of a
// bipartite graph under its reference orientation).

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"
#include "pfaff/orientation.hpp"

namespace pfaff {

struct Arc {
  int from = 0;
  int to = 0;
  constexpr auto operator<=>(const Arc&) const = default;
};

using ArcSequence = std::vector<Arc>;

/// A sequence of arcs in which every arc starts where the previous one ended.
class DirectedWalk {
 public:
  DirectedWalk() = default;
  explicit DirectedWalk(ArcSequence steps) : steps_(std::move(steps)) {
    for (std::size_t i = 1; i < steps_.size(); ++i)
      if (steps_[i].from != steps_[i - 1].to)
        throw InvalidArgument("walk step " + std::to_string(i) +
                              " does not start where the previous one ended");
  }

  /// Walk through consecutive vertices v0 -> v1 -> ... .
  static DirectedWalk through(const std::vector<int>& vertices) {
    ArcSequence s;
    for (std::size_t i = 1; i < vertices.size(); ++i) s.push_back({vertices[i - 1], vertices[i]});
    return DirectedWalk(std::move(s));
  }

  const ArcSequence& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }
  int origin() const { return steps_.front().from; }
  int terminus() const { return steps_.back().to; }

 private:
  ArcSequence steps_;
};

/// Undirected edges occurring an odd number of times across `parts`.
inline std::set<std::pair<int, int>> arc_sum(const std::vector<ArcSequence>& parts) {
  std::set<std::pair<int, int>> out;
  for (const auto& part : parts)
    for (Arc a : part) {
      std::pair<int, int> key{std::min(a.from, a.to), std::max(a.from, a.to)};
      if (!out.erase(key)) out.insert(key);
    }
  return out;
}

/// Undirected edges occurring anywhere in `parts`.
inline std::set<std::pair<int, int>> arc_union(const std::vector<ArcSequence>& parts) {
  std::set<std::pair<int, int>> out;
  for (const auto& part : parts)
    for (Arc a : part) out.emplace(std::min(a.from, a.to), std::max(a.from, a.to));
  return out;
}

struct WalkDecomposition {
  ArcSequence path;
  std::vector<ArcSequence> circuits;
};

/// Repeatedly cuts out the stretch between the first two occurrences of the
/// earliest repeated arc; each cut is a directed circuit and what remains is
/// a directed path from the walk's origin to its terminus.
inline WalkDecomposition decompose_walk(const DirectedWalk& walk, const Graph& host,
                                        const Orientation& o) {
  o.check_host(host);
  if (walk.empty()) return {};
  for (int v = 0; v < host.order(); ++v)
    if (o.indegree(host, v) >= 2 && o.outdegree(host, v) >= 2)
      throw InvalidArgument("vertex " + host.label(v) +
                            " has indegree and outdegree at least 2");
  for (Arc a : walk.steps()) {
    auto e = host.edge_index(a.from, a.to);
    if (!e || o.origin(host, *e) != a.from)
      throw InvalidArgument("step " + host.label(a.from) + "->" + host.label(a.to) +
                            " is not an arc of the host");
  }
  if (o.outdegree(host, walk.origin()) != 1)
    throw InvalidArgument("walk origin must have outdegree 1");
  if (o.indegree(host, walk.terminus()) != 1)
    throw InvalidArgument("walk terminus must have indegree 1");

  WalkDecomposition out;
  ArcSequence rest = walk.steps();
  while (true) {
    std::map<Arc, std::size_t> first_seen;
    std::size_t i = 0, j = 0;
    bool repeated = false;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      auto [it, fresh] = first_seen.emplace(rest[k], k);
      if (!fresh) {
        i = it->second;
        j = k;
        repeated = true;
        break;
      }
    }
    if (!repeated) break;
    out.circuits.emplace_back(rest.begin() + static_cast<std::ptrdiff_t>(i),
                              rest.begin() + static_cast<std::ptrdiff_t>(j));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i),
               rest.begin() + static_cast<std::ptrdiff_t>(j));
  }
  // A walk that returns to its origin without repeating an arc is itself a
  // circuit, leaving the empty path.
  if (!rest.empty() && rest.front().from == rest.back().to) {
    out.circuits.push_back(std::move(rest));
  } else {
    out.path = std::move(rest);
  }
  return out;
}

/// Given a directed path p from x to y and a directed path q from y to x,
/// returns directed circuits whose mod-2 sum is p + q and whose union is
/// p ∪ q. The closed walk p·q is split at every vertex revisit.
inline std::vector<ArcSequence> decompose_two_paths(const DirectedWalk& p, const DirectedWalk& q) {
  if (p.empty() || q.empty()) throw InvalidArgument("both paths must be non-empty");
  if (p.terminus() != q.origin() || q.terminus() != p.origin())
    throw InvalidArgument("endpoint mismatch: need p from x to y and q from y to x");
  auto check_simple = [](const DirectedWalk& w, const char* name) {
    std::set<int> seen{w.origin()};
    for (Arc a : w.steps())
      if (!seen.insert(a.to).second && !(a.to == w.terminus() && a.to == w.origin()))
        throw InvalidArgument(std::string(name) + " is not a simple path");
  };
  check_simple(p, "p");
  check_simple(q, "q");
  std::set<Arc> directions(p.steps().begin(), p.steps().end());
  for (Arc a : q.steps())
    if (directions.count(Arc{a.to, a.from}))
      throw InvalidArgument("p and q traverse an edge in opposite directions");

  std::vector<ArcSequence> out;
  ArcSequence stack;
  std::vector<int> vertex_stack{p.origin()};
  auto push = [&](Arc a) {
    stack.push_back(a);
    auto hit = std::find(vertex_stack.begin(), vertex_stack.end(), a.to);
    if (hit == vertex_stack.end()) {
      vertex_stack.push_back(a.to);
      return;
    }
    const auto keep = static_cast<std::size_t>(hit - vertex_stack.begin());
    out.emplace_back(stack.begin() + static_cast<std::ptrdiff_t>(keep), stack.end());
    stack.resize(keep);
    vertex_stack.resize(keep + 1);
  };
  for (Arc a : p.steps()) push(a);
  for (Arc a : q.steps()) push(a);
  if (!stack.empty()) throw InternalError("closed walk did not decompose into circuits");
  return out;
}

}  // namespace pfaff

#endif  // PFAFF_WALKS_HPP
