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

#ifndef PFAFF_WITNESS_JSON_HPP
#define PFAFF_WITNESS_JSON_HPP

// Witness <-> JSON:
//
//   {"target": "gamma1",
//    "J": [[u, v], ...],
//    "steps": [[circuit vertices], ...],
//    "chains": {"a-b": [path vertices], ...},
//    "vertex_map": {"a": v, ...},
//    "complement_factor": [[u, v], ...],
//    "merged_parallels": false}
//
// Vertices are ids of G; after contractions a vertex is named by the
// smallest id it absorbed. Step results are not stored and are recomputed
// on verification.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pfaff/characterize.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/graph.hpp"

namespace pfaff {

inline nlohmann::json edge_list_json(const Graph& g, EdgeSet es) {
  nlohmann::json out = nlohmann::json::array();
  for (int e : es) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

inline nlohmann::json witness_to_json(const Graph& g, const Witness& w) {
  const Graph& tg = target_graph(w.certificate.target);
  nlohmann::json out;
  out["target"] = to_string(w.certificate.target);
  out["J"] = edge_list_json(g, w.j);
  out["steps"] = nlohmann::json::array();
  for (const auto& s : w.steps) out["steps"].push_back(s.circuit);
  out["chains"] = nlohmann::json::object();
  for (int i = 0; i < tg.size(); ++i) out["chains"][edge_name(tg, i)] = w.certificate.map.chains[i];
  out["vertex_map"] = nlohmann::json::object();
  for (int v = 0; v < tg.order(); ++v) out["vertex_map"][tg.label(v)] = w.certificate.map.vertex_map[v];
  out["complement_factor"] = edge_list_json(g, w.complement_factor);
  out["merged_parallels"] = w.merged_parallels;
  return out;
}

namespace detail {

inline EdgeSet edge_list_from_json(const Graph& g, const nlohmann::json& list, const char* field) {
  EdgeSet out;
  for (const auto& pair : list) {
    auto ends = pair.get<std::vector<int>>();
    if (ends.size() != 2) throw InvalidArgument(std::string(field) + ": expected vertex pairs");
    auto e = g.edge_index(ends[0], ends[1]);
    if (!e) throw InvalidArgument(std::string(field) + ": not an edge of G");
    out.insert(*e);
  }
  return out;
}

}  // namespace detail

/// Throws InvalidArgument for structurally malformed documents; whether
/// the witness is valid is for verify_witness to decide.
inline Witness witness_from_json(const Graph& g, const nlohmann::json& doc) {
  try {
    Witness w;
    auto target = parse_target(doc.at("target").get<std::string>());
    if (!target) throw InvalidArgument("unknown target");
    const Graph& tg = target_graph(*target);
    w.certificate.target = *target;
    w.j = detail::edge_list_from_json(g, doc.at("J"), "J");
    for (const auto& c : doc.at("steps")) w.steps.push_back({c.get<std::vector<int>>(), {}, {}});
    for (int i = 0; i < tg.size(); ++i)
      w.certificate.map.chains.push_back(doc.at("chains").at(edge_name(tg, i)).get<std::vector<int>>());
    for (int v = 0; v < tg.order(); ++v)
      w.certificate.map.vertex_map.push_back(doc.at("vertex_map").at(tg.label(v)).get<int>());
    w.complement_factor =
        detail::edge_list_from_json(g, doc.at("complement_factor"), "complement_factor");
    w.merged_parallels = doc.value("merged_parallels", false);
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed witness: ") + e.what());
  }
}

}  // namespace pfaff

#endif  // PFAFF_WITNESS_JSON_HPP
