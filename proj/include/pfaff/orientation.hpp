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

#ifndef PFAFF_ORIENTATION_HPP
#define PFAFF_ORIENTATION_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"

namespace pfaff {

/// Direction of every edge of a host graph. Stored relative to the host's
/// low-to-high edge listing: an edge in `reversed()` runs from its larger
/// endpoint to its smaller one.
class Orientation {
 public:
  Orientation() = default;

  /// All edges low id -> high id.
  explicit Orientation(const Graph& host) : edge_count_(host.size()) {}
  Orientation(const Graph& host, EdgeSet reversed)
      : edge_count_(host.size()), reversed_(reversed & host.all_edges()) {}

  /// Reads each pair as (origin, terminus). Every host edge must appear
  /// exactly once.
  static Orientation from_arcs(const Graph& host, std::span<const std::pair<int, int>> arcs) {
    Orientation o(host);
    EdgeSet seen;
    for (auto [from, to] : arcs) {
      auto e = host.edge_index(from, to);
      if (!e) throw InvalidArgument("arc " + host.label(from) + "->" + host.label(to) +
                                    " is not an edge");
      if (seen.contains(*e)) throw InvalidArgument("edge " + edge_name(host, *e) +
                                                   " oriented twice");
      seen.insert(*e);
      if (from > to) o.reversed_.insert(*e);
    }
    if (seen != host.all_edges()) throw InvalidArgument("orientation does not cover every edge");
    return o;
  }

  int edge_count() const { return edge_count_; }
  EdgeSet reversed() const { return reversed_; }

  int origin(const Graph& host, int e) const {
    return reversed_.contains(e) ? host.edge(e).v : host.edge(e).u;
  }
  int terminus(const Graph& host, int e) const {
    return reversed_.contains(e) ? host.edge(e).u : host.edge(e).v;
  }
  /// True when edge e runs from a to b.
  bool directed(const Graph& host, int e, int a) const { return origin(host, e) == a; }

  Orientation flipped(EdgeSet es) const {
    Orientation o = *this;
    o.reversed_ ^= es;
    return o;
  }

  /// Throws unless this orientation was built for `host`.
  void check_host(const Graph& host) const {
    if (edge_count_ != host.size())
      throw InvalidArgument("orientation does not match the graph (" +
                            std::to_string(edge_count_) + " vs " +
                            std::to_string(host.size()) + " edges)");
  }

  std::vector<std::pair<int, int>> arcs(const Graph& host) const {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < host.size(); ++e) out.emplace_back(origin(host, e), terminus(host, e));
    return out;
  }

  int outdegree(const Graph& host, int v) const {
    int d = 0;
    for (int e : host.incident(v)) d += origin(host, e) == v ? 1 : 0;
    return d;
  }
  int indegree(const Graph& host, int v) const { return host.degree(v) - outdegree(host, v); }

  bool operator==(const Orientation&) const = default;

 private:
  int edge_count_ = 0;
  EdgeSet reversed_;
};

/// Carries an orientation of `from` over to `to` by endpoints; edges of `to`
/// missing from `from` keep the low -> high direction.
inline Orientation transfer(const Graph& from, const Orientation& o, const Graph& to) {
  EdgeSet rev;
  for (int e = 0; e < to.size(); ++e) {
    auto src = from.edge_index(to.edge(e).u, to.edge(e).v);
    if (src && o.reversed().contains(*src)) rev.insert(e);
  }
  return Orientation(to, rev);
}

}  // namespace pfaff

#endif  // PFAFF_ORIENTATION_HPP
