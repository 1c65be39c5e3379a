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

#ifndef PFAFF_CHARACTERIZE_HPP
#define PFAFF_CHARACTERIZE_HPP

// Even subdivisions of K3,3, Γ1 and Γ2, reduction by odd circuit
// contraction, and witnesses of the form (J, reduction steps, subdivision
// certificate, 1-factor of G - VJ).
//
// The witness search works one vertex set U at a time. Contracting odd
// circuits of a subgraph J with VJ = U produces the same vertex partitions
// as contracting them in G[U], and J's quotient is a spanning subgraph of
// G[U]'s quotient. So it suffices to walk the partitions of U reachable by
// chordless odd circuit contractions in G[U] (a chorded odd circuit
// contracts to the same partition as a sequence of chordless ones) and look
// for a spanning even subdivision of a target in each quotient.

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "pfaff/cycles.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/fixtures.hpp"
#include "pfaff/graph.hpp"
#include "pfaff/graph_ops.hpp"
#include "pfaff/isomorphism.hpp"
#include "pfaff/matching.hpp"
#include "pfaff/nearbip.hpp"
#include "pfaff/pfaffian.hpp"

namespace pfaff {

enum class Target { kK33, kGamma1, kGamma2 };

inline constexpr std::array<Target, 3> kAllTargets{Target::kK33, Target::kGamma1,
                                                   Target::kGamma2};

inline const char* to_string(Target t) {
  switch (t) {
    case Target::kK33:
      return "k33";
    case Target::kGamma1:
      return "gamma1";
    case Target::kGamma2:
      return "gamma2";
  }
  return "?";
}

inline std::optional<Target> parse_target(std::string_view name) {
  for (Target t : kAllTargets)
    if (name == to_string(t)) return t;
  return std::nullopt;
}

inline const Graph& target_graph(Target t) {
  static const std::array<Graph, 3> graphs{fixture_k33().graph, fixture_gamma1().graph,
                                           fixture_gamma2().graph};
  return graphs[static_cast<std::size_t>(t)];
}

/// Counts search nodes and throws BudgetExceeded past the limit.
class NodeBudget {
 public:
  explicit NodeBudget(std::size_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_)
      throw BudgetExceeded("node budget of " + std::to_string(limit_) + " exhausted");
  }
  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

/// Target vertex t sits at candidate vertex vertex_map[t]; target edge i
/// (with endpoints u < v) is the candidate path chains[i], running from
/// vertex_map[u] to vertex_map[v].
struct SubdivisionMap {
  std::vector<int> vertex_map;
  std::vector<std::vector<int>> chains;
};

struct SubdivisionCertificate {
  Target target = Target::kK33;
  SubdivisionMap map;
};

/// Checks a subdivision map directly against the definition. Returns the
/// first failure, or nullopt when `candidate` is an even subdivision of
/// `target` via `m`.
inline std::optional<std::string> check_subdivision(const Graph& candidate, const Graph& target,
                                                    const SubdivisionMap& m) {
  if (static_cast<int>(m.vertex_map.size()) != target.order())
    return "vertex map has the wrong size";
  if (static_cast<int>(m.chains.size()) != target.size()) return "chain list has the wrong size";
  VertexSet branch;
  for (int v : m.vertex_map) {
    if (v < 0 || v >= candidate.order()) return "vertex map leaves the candidate";
    if (branch.contains(v)) return "vertex map is not injective";
    branch.insert(v);
  }
  VertexSet covered = branch;
  EdgeSet used;
  for (int i = 0; i < target.size(); ++i) {
    const auto& chain = m.chains[i];
    const Edge& te = target.edge(i);
    if (chain.size() < 2) return "chain " + edge_name(target, i) + " is empty";
    if (chain.front() != m.vertex_map[te.u] || chain.back() != m.vertex_map[te.v])
      return "chain " + edge_name(target, i) + " has the wrong ends";
    if ((chain.size() - 1) % 2 == 0) return "chain " + edge_name(target, i) + " has even length";
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      if (chain[k + 1] < 0 || chain[k + 1] >= candidate.order())
        return "chain " + edge_name(target, i) + " leaves the candidate";
      auto e = candidate.edge_index(chain[k], chain[k + 1]);
      if (!e) return "chain " + edge_name(target, i) + " uses a missing edge";
      if (used.contains(*e)) return "an edge lies on two chains";
      used.insert(*e);
    }
    for (std::size_t k = 1; k + 1 < chain.size(); ++k) {
      int w = chain[k];
      if (covered.contains(w)) return "chains are not internally disjoint";
      if (candidate.degree(w) != 2) return "chain interior vertex has degree other than 2";
      covered.insert(w);
    }
  }
  if (used != candidate.all_edges()) return "some candidate edge lies on no chain";
  if (covered != candidate.vertices()) return "some candidate vertex lies on no chain";
  return std::nullopt;
}

/// Suppresses degree-2 vertices, requires every chain to be odd, and maps
/// the result isomorphically onto `target` (minimum degree 3).
inline std::optional<SubdivisionMap> match_even_subdivision(const Graph& j, const Graph& target) {
  if (j.order() < target.order() || j.size() - j.order() != target.size() - target.order())
    return std::nullopt;
  if (!is_connected(j)) return std::nullopt;
  int branch_count = 0;
  for (int v = 0; v < j.order(); ++v) {
    if (j.degree(v) < 2) return std::nullopt;
    branch_count += j.degree(v) != 2 ? 1 : 0;
  }
  if (branch_count != target.order()) return std::nullopt;
  Suppression s;
  try {
    s = suppress_degree2(j);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  for (int e = 0; e < s.base.size(); ++e)
    if (s.chain_length(e) % 2 == 0) return std::nullopt;
  auto phi = find_isomorphism(target, s.base);
  if (!phi) return std::nullopt;
  SubdivisionMap m;
  for (int t = 0; t < target.order(); ++t) m.vertex_map.push_back(s.branch[(*phi)[t]]);
  for (const Edge& te : target.edges()) {
    int be = s.base.require_edge((*phi)[te.u], (*phi)[te.v]);
    std::vector<int> chain = s.chains[be];
    if (chain.front() != m.vertex_map[te.u]) std::reverse(chain.begin(), chain.end());
    m.chains.push_back(std::move(chain));
  }
  return m;
}

inline std::optional<SubdivisionCertificate> is_even_subdivision(const Graph& j, Target t) {
  auto m = match_even_subdivision(j, target_graph(t));
  if (!m) return std::nullopt;
  return SubdivisionCertificate{t, std::move(*m)};
}

/// Searches the spanning subgraphs of `k` for an even subdivision of a cubic
/// `target`: every vertex gets degree 2 or 3 with exactly |target| of degree
/// 3, then the candidate is matched. Returns the chosen edges of `k`.
template <class Tick>
std::optional<EdgeSet> spanning_even_subdivision(const Graph& k, const Graph& target, Tick&& tick) {
  if (!is_regular(target, 3)) throw InvalidArgument("target must be cubic");
  const int n = k.order();
  const int t = target.order();
  if (n < t || (n - t) % 2 != 0) return std::nullopt;
  int rich = 0;
  for (int v = 0; v < n; ++v) {
    if (k.degree(v) < 2) return std::nullopt;
    rich += k.degree(v) >= 3 ? 1 : 0;
  }
  if (rich < t) return std::nullopt;

  std::vector<int> deg(n, 0);
  EdgeSet chosen;
  int c3 = 0;
  int c2 = 0;
  std::optional<EdgeSet> found;

  // later[w][v]: edges from w to vertices above v
  auto edges_above = [&](int w, int v) {
    int c = 0;
    for (int x : k.neighbours(w)) c += x > v ? 1 : 0;
    return c;
  };

  std::function<bool(int)> visit = [&](int v) -> bool {
    tick();
    if (v == n) {
      if (c3 != t) return false;
      Graph sub = spanning_subgraph(k, chosen).graph;
      if (match_even_subdivision(sub, target)) {
        found = chosen;
        return true;
      }
      return false;
    }
    std::vector<int> open;
    for (int e : k.incident(v))
      if (k.edge(e).other(v) > v) open.push_back(e);
    for (int want : {3, 2}) {
      const int r = want - deg[v];
      if (r < 0 || r > static_cast<int>(open.size())) continue;
      if (want == 3 && c3 == t) continue;
      if (want == 2 && c2 == n - t) continue;
      (want == 3 ? c3 : c2)++;
      std::vector<int> pick;
      std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
        if (static_cast<int>(pick.size()) == r) {
          for (int e : open) {
            int w = k.edge(e).other(v);
            bool taken = std::find(pick.begin(), pick.end(), e) != pick.end();
            if (!taken && deg[w] + edges_above(w, v) < 2) return false;
          }
          return visit(v + 1);
        }
        for (std::size_t i = from; i < open.size(); ++i) {
          int e = open[i];
          int w = k.edge(e).other(v);
          if (deg[w] >= 3) continue;
          pick.push_back(e);
          ++deg[w];
          chosen.insert(e);
          bool done = choose(i + 1);
          chosen.erase(e);
          --deg[w];
          pick.pop_back();
          if (done) return true;
        }
        return false;
      };
      deg[v] += r;
      bool done = choose(0);
      deg[v] -= r;
      (want == 3 ? c3 : c2)--;
      if (done) return true;
    }
    return false;
  };
  visit(0);
  return found;
}

/// A contraction step: `circuit` lists the pre-step vertices in cyclic
/// order; `result` is the graph after contracting them, whose vertex i is
/// named names[i].
///
/// Vertices of every graph in a reduction are named by the smallest vertex
/// of G they absorb, so names stay meaningful across steps.
struct ReductionStep {
  std::vector<int> circuit;
  Graph result;
  std::vector<int> names;
};

struct Witness {
  /// edges of G forming J
  EdgeSet j;
  std::vector<ReductionStep> steps;
  /// subdivision map of the final graph, in vertex names
  SubdivisionCertificate certificate;
  /// perfect matching of G - VJ
  EdgeSet complement_factor;
  /// some contraction merged parallel edges
  bool merged_parallels = false;
};

struct Replay {
  Graph graph;
  std::vector<int> names;
  std::vector<ReductionStep> steps;
  bool merged_parallels = false;
  std::optional<std::string> error;
};

/// Applies named circuit contractions to J (taken on its own vertex set).
inline Replay replay_reduction(const Graph& g, EdgeSet j,
                               const std::vector<std::vector<int>>& circuits) {
  Replay out;
  Relabelled start = extract(g, g.endpoints(j), j);
  out.graph = std::move(start.graph);
  out.names = std::move(start.host_vertex);
  for (const auto& circuit : circuits) {
    if (circuit.size() % 2 == 0) {
      out.error = "reduction circuit not odd";
      return out;
    }
    if (circuit.size() < 3) {
      out.error = "reduction circuit too short";
      return out;
    }
    std::vector<int> local;
    for (int name : circuit) {
      auto it = std::find(out.names.begin(), out.names.end(), name);
      if (it == out.names.end()) {
        out.error = "reduction circuit names unknown vertex " + std::to_string(name);
        return out;
      }
      local.push_back(static_cast<int>(it - out.names.begin()));
    }
    VertexSet vs;
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (vs.contains(local[i])) {
        out.error = "reduction circuit repeats a vertex";
        return out;
      }
      vs.insert(local[i]);
      if (!out.graph.adjacent(local[i], local[(i + 1) % local.size()])) {
        out.error = "reduction circuit uses a missing edge";
        return out;
      }
    }
    Contraction c = contract_with_map(out.graph, vs);
    std::vector<int> names(c.graph.order(), -1);
    for (int v = 0; v < out.graph.order(); ++v) {
      int& slot = names[c.image[v]];
      slot = slot < 0 ? out.names[v] : std::min(slot, out.names[v]);
    }
    out.merged_parallels = out.merged_parallels || c.merged_parallels;
    out.graph = std::move(c.graph);
    out.names = std::move(names);
    out.steps.push_back({circuit, out.graph, out.names});
  }
  return out;
}

inline std::vector<std::vector<int>> step_circuits(const std::vector<ReductionStep>& steps) {
  std::vector<std::vector<int>> out;
  for (const auto& s : steps) out.push_back(s.circuit);
  return out;
}

struct WitnessCheck {
  bool ok = false;
  std::string reason;
  bool merged_parallels = false;
  explicit operator bool() const { return ok; }
};

/// Mechanically checks every part of a witness.
inline WitnessCheck verify_witness(const Graph& g, const Witness& w) {
  WitnessCheck out;
  auto fail = [&](std::string why) {
    out.reason = std::move(why);
    return out;
  };
  if (w.j.empty()) return fail("J is empty");
  if (!w.j.is_subset_of(g.all_edges())) return fail("J uses an edge not in G");
  const VertexSet vj = g.endpoints(w.j);
  const VertexSet rest = g.vertices() - vj;
  if (!w.complement_factor.is_subset_of(g.edges_within(rest)))
    return fail("complement factor uses an edge meeting J or missing from G");
  for (int v : rest)
    if ((g.incident(v) & w.complement_factor).size() != 1)
      return fail("complement factor does not cover vertex " + g.label(v) + " exactly once");

  Replay r = replay_reduction(g, w.j, step_circuits(w.steps));
  if (r.error) return fail(*r.error);
  out.merged_parallels = r.merged_parallels;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const ReductionStep& s = w.steps[i];
    if (s.result.order() > 0 && (s.result != r.steps[i].result || s.names != r.steps[i].names))
      return fail("recorded result of step " + std::to_string(i + 1) + " is wrong");
  }

  SubdivisionMap local = w.certificate.map;
  auto to_local = [&](int& name) {
    auto it = std::find(r.names.begin(), r.names.end(), name);
    name = it == r.names.end() ? -1 : static_cast<int>(it - r.names.begin());
  };
  for (int& v : local.vertex_map) to_local(v);
  for (auto& chain : local.chains)
    for (int& v : chain) to_local(v);
  if (auto why = check_subdivision(r.graph, target_graph(w.certificate.target), local))
    return fail("subdivision certificate: " + *why);
  out.ok = true;
  return out;
}

struct SearchBounds {
  /// contraction depth limit; negative means unlimited
  int max_depth = -1;
  /// candidate vertex sets examined before giving up
  std::size_t max_subgraphs = 10'000'000;
  std::size_t node_budget = 200'000'000;
  int jobs = 1;
};

namespace detail {

/// Blobs of a vertex partition (sorted by smallest member) and the simple
/// quotient graph over `allowed` edges. realizer[e] is the smallest host
/// edge behind quotient edge e.
struct Quotient {
  std::vector<VertexSet> blobs;
  Graph graph;
  std::vector<int> realizer;
};

inline Quotient make_quotient(const Graph& g, EdgeSet allowed, std::vector<VertexSet> blobs) {
  std::sort(blobs.begin(), blobs.end(),
            [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < blobs.size(); ++i)
    for (int v : blobs[i]) owner[v] = static_cast<int>(i);
  std::map<std::pair<int, int>, int> first;
  for (int e : allowed) {
    int a = owner[g.edge(e).u];
    int b = owner[g.edge(e).v];
    if (a == b) continue;
    first.emplace(std::pair{std::min(a, b), std::max(a, b)}, e);
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [p, e] : first) pairs.push_back(p);
  Quotient q;
  q.blobs = std::move(blobs);
  q.graph = Graph(static_cast<int>(q.blobs.size()), pairs);
  q.realizer.assign(q.graph.size(), -1);
  for (const auto& [p, e] : first) q.realizer[q.graph.require_edge(p.first, p.second)] = e;
  return q;
}

inline std::vector<std::uint32_t> partition_key(const std::vector<VertexSet>& blobs) {
  std::vector<std::uint32_t> key;
  for (VertexSet b : blobs) key.push_back(b.bits());
  return key;
}

/// What a successful reduction search found, in host terms.
struct Reduction {
  Target target = Target::kK33;
  std::vector<std::vector<int>> circuits;
  EdgeSet circuit_edges;
  EdgeSet final_edges;
};

/// Depth-first search over partitions of `u` reachable by contracting
/// chordless odd circuits. In spanning mode a quotient qualifies when it has
/// a spanning even subdivision of a target; otherwise the quotient itself
/// must be one and at least one contraction is required.
class ReductionSearch {
 public:
  ReductionSearch(const Graph& g, VertexSet u, std::vector<Target> targets, bool spanning,
                  int max_depth, NodeBudget& budget)
      : g_(g),
        allowed_(g.edges_within(u)),
        targets_(std::move(targets)),
        spanning_(spanning),
        max_depth_(max_depth),
        budget_(budget) {
    for (int v : u) start_.push_back(VertexSet::single(v));
    for (Target t : targets_) min_order_ = std::min(min_order_, target_graph(t).order());
  }

  std::optional<Reduction> run() {
    best_depth_.clear();
    Quotient q = make_quotient(g_, allowed_, start_);
    best_depth_[partition_key(q.blobs)] = 0;
    if (dfs(q, 0)) return found_;
    return std::nullopt;
  }

  /// true when the depth limit cut off some branch
  bool truncated() const { return truncated_; }

 private:
  bool qualifies(const Quotient& q, int depth) {
    if (!spanning_ && depth == 0) return false;
    for (Target t : targets_) {
      const Graph& tg = target_graph(t);
      if (q.graph.order() < tg.order() || (q.graph.order() - tg.order()) % 2 != 0) continue;
      std::optional<EdgeSet> s;
      if (spanning_) {
        s = spanning_even_subdivision(q.graph, tg, [&] { budget_.tick(); });
      } else if (match_even_subdivision(q.graph, tg)) {
        s = q.graph.all_edges();
      }
      if (s) {
        found_.target = t;
        found_.circuits = circuits_;
        found_.circuit_edges = circuit_edges_;
        found_.final_edges = EdgeSet{};
        for (int e : *s) found_.final_edges.insert(q.realizer[e]);
        return true;
      }
    }
    return false;
  }

  bool dfs(const Quotient& q, int depth) {
    budget_.tick();
    if (qualifies(q, depth)) return true;
    std::vector<EdgeCycle> odd;
    for_each_cycle(q.graph, {.parity = Parity::kOdd, .chordless_only = true},
                   [&](const EdgeCycle& c) {
                     if (q.graph.order() - (c.length() - 1) >= min_order_) odd.push_back(c);
                     return true;
                   });
    if (odd.empty()) return false;
    if (max_depth_ >= 0 && depth >= max_depth_) {
      truncated_ = true;
      return false;
    }
    for (const EdgeCycle& c : odd) {
      std::vector<VertexSet> blobs;
      VertexSet merged;
      for (int v = 0; v < q.graph.order(); ++v) {
        if (std::find(c.sense.begin(), c.sense.end(), v) != c.sense.end()) {
          merged |= q.blobs[v];
        } else {
          blobs.push_back(q.blobs[v]);
        }
      }
      blobs.push_back(merged);
      Quotient next = make_quotient(g_, allowed_, std::move(blobs));
      auto key = partition_key(next.blobs);
      auto it = best_depth_.find(key);
      if (it != best_depth_.end() && it->second <= depth + 1) continue;
      best_depth_[key] = depth + 1;

      std::vector<int> names;
      for (int v : c.sense) names.push_back(q.blobs[v].front());
      EdgeSet saved = circuit_edges_;
      for (int e : c.edges) circuit_edges_.insert(q.realizer[e]);
      circuits_.push_back(std::move(names));
      bool done = dfs(next, depth + 1);
      circuits_.pop_back();
      circuit_edges_ = saved;
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  EdgeSet allowed_;
  std::vector<Target> targets_;
  bool spanning_;
  int max_depth_;
  NodeBudget& budget_;
  std::vector<VertexSet> start_;
  int min_order_ = kMaxVertices;
  std::map<std::vector<std::uint32_t>, int> best_depth_;
  std::vector<std::vector<int>> circuits_;
  EdgeSet circuit_edges_;
  Reduction found_;
  bool truncated_ = false;
};

}  // namespace detail

/// Strict reducibility: at least one odd circuit contraction of g itself,
/// ending at an even subdivision of `target`. Exhaustive when max_depth is
/// negative.
inline std::optional<std::vector<ReductionStep>> is_reducible_to_even_subdivision(
    const Graph& g, Target target, int max_depth = -1, std::size_t node_budget = 200'000'000) {
  NodeBudget budget(node_budget);
  detail::ReductionSearch search(g, g.vertices(), {target}, false, max_depth, budget);
  auto found = search.run();
  if (!found) return std::nullopt;
  Replay r = replay_reduction(g, g.all_edges(), found->circuits);
  if (r.error || !match_even_subdivision(r.graph, target_graph(target)))
    throw InternalError("reduction found by search does not replay");
  return r.steps;
}

/// Some subgraph of g that is an even subdivision of `target` (no
/// contractions), as an edge set of g.
inline std::optional<EdgeSet> find_even_subdivision_subgraph(const Graph& g, Target target,
                                                             std::size_t node_budget = 200'000'000) {
  NodeBudget budget(node_budget);
  const Graph& tg = target_graph(target);
  const int n = g.order();
  for (int size = tg.order(); size <= n; size += 2) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      VertexSet u(static_cast<std::uint32_t>(mask));
      Relabelled k = induced_subgraph(g, u);
      if (k.graph.size() - k.graph.order() < tg.size() - tg.order() || !is_connected(k.graph))
        continue;
      auto s = spanning_even_subdivision(k.graph, tg, [&] { budget.tick(); });
      if (!s) continue;
      EdgeSet out;
      for (int e : *s)
        out.insert(g.require_edge(k.host_vertex[k.graph.edge(e).u], k.host_vertex[k.graph.edge(e).v]));
      return out;
    }
  }
  return std::nullopt;
}

struct WitnessSearch {
  std::optional<Witness> witness;
  std::size_t subgraphs = 0;
  std::size_t nodes = 0;
  /// false when the depth limit cut some branch, so "not found" is
  /// inconclusive
  bool exhaustive = true;
};

namespace detail {

inline Witness assemble_witness(const Graph& g, VertexSet u, const Reduction& red) {
  Witness w;
  w.j = red.circuit_edges | red.final_edges;
  if (g.endpoints(w.j) != u) throw InternalError("witness subgraph does not span its vertex set");
  Replay r = replay_reduction(g, w.j, red.circuits);
  if (r.error) throw InternalError("witness does not replay: " + *r.error);
  w.steps = r.steps;
  w.merged_parallels = r.merged_parallels;
  auto m = match_even_subdivision(r.graph, target_graph(red.target));
  if (!m) throw InternalError("witness endpoint is not an even subdivision");
  for (int& v : m->vertex_map) v = r.names[v];
  for (auto& chain : m->chains)
    for (int& v : chain) v = r.names[v];
  w.certificate = {red.target, std::move(*m)};
  auto rest = enumerate_matchings(g, g.vertices() - u);
  if (rest.empty()) throw InternalError("complement of the witness has no 1-factor");
  w.complement_factor = rest.front();
  if (!verify_witness(g, w)) throw InternalError("assembled witness fails verification");
  return w;
}

struct CandidateResult {
  std::optional<Reduction> reduction;
  std::size_t nodes = 0;
  bool over_budget = false;
  bool truncated = false;
};

inline CandidateResult search_candidate(const Graph& g, VertexSet u, int max_depth,
                                        std::size_t node_cap) {
  CandidateResult out;
  NodeBudget budget(node_cap);
  detail::ReductionSearch search(g, u, {kAllTargets.begin(), kAllTargets.end()}, true, max_depth,
                                 budget);
  try {
    out.reduction = search.run();
  } catch (const BudgetExceeded&) {
    out.over_budget = true;
  }
  out.nodes = budget.used();
  out.truncated = search.truncated();
  return out;
}

}  // namespace detail

/// Vertex sets U worth examining, in search order: |U| even and at least 6,
/// G[U] connected with minimum degree 2 and at least |U| + 3 edges, and
/// G - U has a perfect matching. Ordered by size, then by bitmask.
inline std::vector<VertexSet> witness_candidates(const Graph& g) {
  std::vector<VertexSet> out;
  const int n = g.order();
  if (n > 24) throw BudgetExceeded("witness search supports at most 24 vertices");
  MatchingOracle oracle(g);
  for (int size = 6; size <= n; size += 2) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      VertexSet u(static_cast<std::uint32_t>(mask));
      EdgeSet inside = g.edges_within(u);
      if (inside.size() < size + 3) continue;
      bool ok = true;
      for (int v : u)
        if ((g.incident(v) & inside).size() < 2) {
          ok = false;
          break;
        }
      if (!ok || component_of(g, u.front(), u, inside) != u) continue;
      if (!oracle.matchable(g.vertices() - u)) continue;
      out.push_back(u);
    }
  }
  return out;
}

/// Bounded witness search. Candidates are searched in canonical order, in
/// parallel batches when bounds.jobs > 1; budget accounting replays the
/// sequential order, so results do not depend on the worker count.
inline WitnessSearch search_witness(const Graph& g, const SearchBounds& bounds = {}) {
  WitnessSearch out;
  const auto candidates = witness_candidates(g);
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, bounds.jobs));
  const std::size_t batch = jobs == 1 ? 1 : jobs * 4;
  for (std::size_t begin = 0; begin < candidates.size(); begin += batch) {
    const std::size_t end = std::min(candidates.size(), begin + batch);
    const std::size_t cap = bounds.node_budget - out.nodes;
    std::vector<detail::CandidateResult> results(end - begin);
    if (jobs == 1) {
      results[0] = detail::search_candidate(g, candidates[begin], bounds.max_depth, cap);
    } else {
      std::atomic<std::size_t> next{begin};
      std::vector<std::thread> workers;
      for (std::size_t t = 0; t < std::min(jobs, end - begin); ++t)
        workers.emplace_back([&] {
          for (std::size_t i = next++; i < end; i = next++)
            results[i - begin] = detail::search_candidate(g, candidates[i], bounds.max_depth, cap);
        });
      for (auto& w : workers) w.join();
    }
    for (std::size_t i = begin; i < end; ++i) {
      const auto& r = results[i - begin];
      if (++out.subgraphs > bounds.max_subgraphs)
        throw BudgetExceeded("more than " + std::to_string(bounds.max_subgraphs) +
                             " candidate subgraphs");
      out.nodes += r.nodes;
      if (r.over_budget || out.nodes > bounds.node_budget)
        throw BudgetExceeded("node budget of " + std::to_string(bounds.node_budget) +
                             " exhausted");
      if (r.truncated) out.exhaustive = false;
      if (r.reduction) {
        out.witness = detail::assemble_witness(g, candidates[i], *r.reduction);
        return out;
      }
    }
  }
  return out;
}

inline std::optional<Witness> find_witness(const Graph& g, const SearchBounds& bounds = {}) {
  return search_witness(g, bounds).witness;
}

struct MainTheoremReport {
  bool near_bipartite = false;
  bool pfaffian = false;
  std::optional<Witness> witness;
  /// the search ran out of budget
  bool inconclusive = false;
  /// the search covered every contraction depth
  bool exhaustive = false;
  /// a verified witness relies on merged parallel edges
  bool merged_parallels = false;
  /// no violation: a witness implies non-Pfaffian, and for near-bipartite
  /// graphs searched exhaustively, non-Pfaffian implies a witness
  bool consistent = true;
};

inline MainTheoremReport check_main_theorem(const Graph& g, const SearchBounds& bounds = {}) {
  MainTheoremReport rep;
  rep.near_bipartite = is_near_bipartite(g);
  rep.pfaffian = is_pfaffian(g);
  try {
    WitnessSearch s = search_witness(g, bounds);
    rep.witness = s.witness;
    rep.exhaustive = s.exhaustive;
  } catch (const BudgetExceeded&) {
    rep.inconclusive = true;
  }
  if (rep.witness) {
    rep.merged_parallels = rep.witness->merged_parallels;
    if (rep.pfaffian) rep.consistent = false;
  } else if (rep.near_bipartite && !rep.inconclusive && rep.exhaustive && !rep.pfaffian) {
    rep.consistent = false;
  }
  return rep;
}

}  // namespace pfaff

#endif  // PFAFF_CHARACTERIZE_HPP
