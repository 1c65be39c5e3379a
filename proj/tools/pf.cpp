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

// pf: command-line front end.
//
// Exit status: 0 success, 1 negative answer (non-Pfaffian, no witness, ...),
// 2 usage or input error, 3 budget exhausted, 4 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfaff/pfaff.hpp"

namespace {

using nlohmann::json;
using namespace pfaff;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;
constexpr int kInternal = 4;

struct Options {
  std::string input;
  std::string orientation;
  std::string target;
  int max_depth = -1;
  std::size_t budget = 200'000'000;
  int subset_bound = 8;
  bool json = false;
  int jobs = 1;
  std::vector<int> edge;
  int length = 3;
  std::string check;
};

struct Input {
  Graph graph;
  std::optional<Fixture> fixture;
  Orientation orientation;
  bool orientation_given = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Input load(const Options& opt) {
  Input in;
  const std::string prefix = "builtin:";
  if (opt.input.rfind(prefix, 0) == 0) {
    in.fixture = builtin(opt.input.substr(prefix.size()));
    in.graph = in.fixture->graph;
    in.orientation = in.fixture->orientation;
  } else {
    in.graph = parse_graph(read_file(opt.input));
    in.orientation = Orientation(in.graph);
  }
  if (!opt.orientation.empty()) {
    in.orientation = parse_orientation(read_file(opt.orientation), in.graph);
    in.orientation_given = true;
  }
  return in;
}

std::string vertex_list(const Graph& g, const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

std::string edge_list(const Graph& g, EdgeSet es) {
  std::string out;
  for (int e : es) out += (out.empty() ? "" : " ") + edge_name(g, e);
  return out;
}

std::string arc_list(const Graph& g, const Orientation& o, EdgeSet es) {
  std::string out;
  for (int e : es) out += "(" + g.label(o.origin(g, e)) + "," + g.label(o.terminus(g, e)) + ")";
  return out;
}

json arcs_json(const Graph& g, const Orientation& o, EdgeSet es) {
  json out = json::array();
  for (int e : es) out.push_back({o.origin(g, e), o.terminus(g, e)});
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_matchings(const Options& opt) {
  Input in = load(opt);
  auto factors = enumerate_one_factors(in.graph);
  if (opt.json) {
    json doc{{"count", factors.size()}, {"factors", json::array()}};
    for (const auto& f : factors) doc["factors"].push_back(edge_list_json(in.graph, f.edges()));
    emit(doc);
    return kOk;
  }
  std::cout << factors.size() << " 1-factors\n";
  for (std::size_t i = 0; i < factors.size(); ++i)
    std::cout << "f" << i + 1 << "  " << edge_list(in.graph, factors[i].edges()) << '\n';
  return kOk;
}

int cmd_signs(const Options& opt) {
  Input in = load(opt);
  std::vector<OneFactor> rows;
  if (in.fixture) {
    rows = in.fixture->factors;
  } else {
    rows = enumerate_one_factors(in.graph);
    if (rows.empty()) throw InvalidArgument("graph has no 1-factor");
  }
  std::vector<int> signs;
  for (const auto& f : rows) signs.push_back(factor_sign(in.graph, in.orientation, rows.front(), f));
  bool constant = std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
  if (opt.json) {
    json doc{{"constant", constant}, {"rows", json::array()}};
    for (std::size_t i = 0; i < rows.size(); ++i)
      doc["rows"].push_back({{"factor", arcs_json(in.graph, in.orientation, rows[i].edges())},
                             {"sign", signs[i]}});
    emit(doc);
    return kOk;
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::cout << "f" << i + 1 << (i + 1 < 10 ? "   " : "  ")
              << arc_list(in.graph, in.orientation, rows[i].edges()) << "  "
              << (signs[i] > 0 ? '+' : '-') << '\n';
  std::cout << "constant: " << (constant ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_parity(const Options& opt) {
  Input in = load(opt);
  auto circuits = central_circuits(in.graph);
  int even = 0;
  json list = json::array();
  for (const auto& c : circuits) {
    ClockwiseParity p = clockwise_parity(in.graph, c, in.orientation);
    even += p == ClockwiseParity::kEven ? 1 : 0;
    if (opt.json) {
      list.push_back({{"circuit", c.sense}, {"parity", to_string(p)}});
    } else {
      std::cout << vertex_list(in.graph, c.sense) << "  " << to_string(p) << '\n';
    }
  }
  if (opt.json) {
    emit({{"central_circuits", list}, {"clockwise_even", even}});
  } else {
    std::cout << even << " of " << circuits.size() << " central circuits clockwise even\n";
  }
  return kOk;
}

int cmd_check(const Options& opt) {
  Input in = load(opt);
  const Graph& g = in.graph;
  if (in.orientation_given) {
    bool ok = !has_perfect_matching(g) || is_pfaffian_orientation(g, in.orientation);
    if (opt.json) {
      emit({{"pfaffian_orientation", ok}});
    } else {
      std::cout << (ok ? "orientation is Pfaffian" : "orientation is not Pfaffian") << '\n';
    }
    return ok ? kOk : kNo;
  }
  auto found = find_pfaffian_orientation(g);
  if (found) {
    if (opt.json) {
      emit({{"pfaffian", true}, {"orientation", arcs_json(g, *found, g.all_edges())}});
    } else {
      std::cout << "Pfaffian\n";
      write_orientation(std::cout, g, *found);
    }
    return kOk;
  }
  json doc{{"pfaffian", false}};
  std::string text = "non-Pfaffian\n";
  const Orientation reference(g);
  try {
    auto set = find_intractable_set(g, reference, opt.subset_bound);
    json circuits = json::array();
    text += "intractable set under the low-to-high orientation:\n";
    for (std::size_t i = 0; i < set->circuits.size(); ++i) {
      circuits.push_back({{"circuit", set->circuits[i].sense},
                          {"parity", to_string(set->parities[i])}});
      text += "  " + vertex_list(g, set->circuits[i].sense) + "  " + to_string(set->parities[i]) + '\n';
    }
    doc["intractable_set"] = circuits;
  } catch (const BudgetExceeded& e) {
    doc["intractable_set"] = nullptr;
    text += std::string("intractable set not shown: ") + e.what() + '\n';
  }
  if (opt.json) {
    emit(doc);
  } else {
    std::cout << text;
  }
  return kNo;
}

int cmd_nearbip(const Options& opt) {
  Input in = load(opt);
  const Graph& g = in.graph;
  auto certs = find_near_bipartite_pairs(g);
  json doc{{"near_bipartite", !certs.empty()}, {"pairs", json::array()}};
  std::string text;
  for (const auto& c : certs) {
    doc["pairs"].push_back({{"e1", {g.edge(c.e1).u, g.edge(c.e1).v}},
                            {"e2", {g.edge(c.e2).u, g.edge(c.e2).v}},
                            {"M", c.bipartition.m.to_vector()},
                            {"N", c.bipartition.n.to_vector()},
                            {"factor", edge_list_json(g, c.factor.edges())}});
    text += "e1=" + edge_name(g, c.e1) + " e2=" + edge_name(g, c.e2) + "  M={" +
            vertex_list(g, c.bipartition.m.to_vector()) + "} N={" +
            vertex_list(g, c.bipartition.n.to_vector()) + "}  f=" +
            edge_list(g, c.factor.edges()) + '\n';
  }
  if (!certs.empty()) {
    const auto& c = certs.front();
    const Graph h = remove_edges(g, EdgeSet::single(c.e1) | EdgeSet::single(c.e2));
    if (auto oh = find_pfaffian_orientation(h)) {
      auto pair = find_opposite_parity_pair(g, c, transfer(h, *oh, g));
      if (pair) {
        doc["opposite_parity_pair"] = {{"A", pair->a.cycle.sense}, {"B", pair->b.cycle.sense}};
        text += "opposite clockwise parity through " + edge_name(g, c.e1) + ", " +
                edge_name(g, c.e2) + ":\n  A = " + vertex_list(g, pair->a.cycle.sense) + "  " +
                to_string(pair->parity_a) + "\n  B = " + vertex_list(g, pair->b.cycle.sense) +
                "  " + to_string(pair->parity_b) + '\n';
      } else {
        doc["opposite_parity_pair"] = nullptr;
        text += "no alternating circuits of opposite clockwise parity through e1\n";
      }
    } else {
      text += "G - {e1, e2} is not Pfaffian\n";
    }
  }
  if (opt.json) {
    emit(doc);
  } else {
    std::cout << (certs.empty() ? "not near bipartite\n" : text);
  }
  return certs.empty() ? kNo : kOk;
}

void print_witness(const Graph& g, const Witness& w) {
  const Graph& tg = target_graph(w.certificate.target);
  std::cout << "witness: " << to_string(w.certificate.target) << '\n';
  std::cout << "J: " << edge_list(g, w.j) << '\n';
  for (std::size_t i = 0; i < w.steps.size(); ++i)
    std::cout << "step " << i + 1 << ": contract " << vertex_list(g, w.steps[i].circuit) << '\n';
  for (int e = 0; e < tg.size(); ++e)
    std::cout << "chain " << edge_name(tg, e) << ": "
              << vertex_list(g, w.certificate.map.chains[e]) << '\n';
  std::cout << "complement factor: " << edge_list(g, w.complement_factor) << '\n';
  if (w.merged_parallels) std::cout << "note: a contraction merged parallel edges\n";
}

int cmd_witness(const Options& opt) {
  Input in = load(opt);
  const Graph& g = in.graph;
  if (!opt.check.empty()) {
    json doc = json::parse(read_file(opt.check));
    // accept a bare witness or the report written by `witness --json`
    if (doc.is_object() && doc.contains("witness")) doc = doc["witness"];
    Witness w = witness_from_json(g, doc);
    WitnessCheck r = verify_witness(g, w);
    if (opt.json) {
      emit({{"valid", r.ok}, {"reason", r.reason}, {"merged_parallels", r.merged_parallels}});
    } else {
      std::cout << (r.ok ? "witness valid" : "witness invalid: " + r.reason) << '\n';
    }
    return r.ok ? kOk : kNo;
  }
  SearchBounds bounds;
  bounds.max_depth = opt.max_depth;
  bounds.node_budget = opt.budget;
  bounds.jobs = opt.jobs;
  WitnessSearch s = search_witness(g, bounds);
  if (opt.json) {
    json doc{{"found", s.witness.has_value()}, {"exhaustive", s.exhaustive}};
    if (s.witness) doc["witness"] = witness_to_json(g, *s.witness);
    emit(doc);
  } else if (s.witness) {
    print_witness(g, *s.witness);
  } else {
    std::cout << "no witness" << (s.exhaustive ? "" : " within the depth limit (inconclusive)")
              << '\n';
  }
  return s.witness ? kOk : kNo;
}

Target require_target(const Options& opt) {
  auto t = parse_target(opt.target);
  if (!t) throw InvalidArgument("--target must be one of k33, gamma1, gamma2");
  return *t;
}

int cmd_reduce(const Options& opt) {
  Input in = load(opt);
  const Target t = require_target(opt);
  auto steps = is_reducible_to_even_subdivision(in.graph, t, opt.max_depth, opt.budget);
  if (opt.json) {
    json doc{{"reducible", steps.has_value()}, {"steps", json::array()}};
    if (steps)
      for (const auto& s : *steps) doc["steps"].push_back(s.circuit);
    emit(doc);
  } else if (steps) {
    std::cout << "reducible to an even subdivision of " << to_string(t) << '\n';
    for (std::size_t i = 0; i < steps->size(); ++i)
      std::cout << "step " << i + 1 << ": contract " << vertex_list(in.graph, (*steps)[i].circuit)
                << '\n';
  } else {
    std::cout << "not reducible to an even subdivision of " << to_string(t) << '\n';
  }
  return steps ? kOk : kNo;
}

int cmd_subdivide(const Options& opt) {
  Input in = load(opt);
  if (opt.edge.empty() && opt.target.empty())
    throw InvalidArgument("subdivide needs --edge U V, --target, or both");
  Graph g = in.graph;
  if (!opt.edge.empty()) g = subdivide_edge(g, opt.edge[0], opt.edge[1], opt.length);
  if (opt.target.empty()) {
    write_graph(std::cout, g);
    return kOk;
  }
  const Target t = require_target(opt);
  auto cert = is_even_subdivision(g, t);
  if (opt.json) {
    json doc{{"even_subdivision", cert.has_value()}};
    if (cert) {
      doc["vertex_map"] = cert->map.vertex_map;
      doc["chains"] = cert->map.chains;
    }
    emit(doc);
  } else if (cert) {
    const Graph& tg = target_graph(t);
    std::cout << "even subdivision of " << to_string(t) << '\n';
    for (int e = 0; e < tg.size(); ++e)
      std::cout << "chain " << edge_name(tg, e) << ": " << vertex_list(g, cert->map.chains[e])
                << '\n';
  } else {
    std::cout << "not an even subdivision of " << to_string(t) << '\n';
  }
  return cert ? kOk : kNo;
}

int cmd_verify_paper(const Options& opt) {
  Report r = verify_paper();
  if (opt.json) {
    json doc{{"ok", r.ok()}, {"checks", json::array()}};
    for (const auto& c : r.checks)
      doc["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    emit(doc);
  } else {
    for (const auto& c : r.checks)
      std::cout << (c.ok ? "ok    " : "FAIL  ") << c.name
                << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    std::cout << (r.ok() ? "all checks passed" : "some checks failed") << '\n';
  }
  return r.ok() ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matchings, Pfaffian orientations and near-bipartite witnesses on small graphs"};
  app.require_subcommand(1);
  Options opt;

  struct Spec {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    bool takes_input;
  };
  const std::vector<Spec> specs{
      {"matchings", "list the 1-factors", cmd_matchings, true},
      {"signs", "signs of the 1-factors under an orientation", cmd_signs, true},
      {"parity", "clockwise parity of every central circuit", cmd_parity, true},
      {"check", "decide whether the graph (or a given orientation) is Pfaffian", cmd_check, true},
      {"nearbip", "near-bipartite edge pairs", cmd_nearbip, true},
      {"witness", "search for (or --check) a forbidden-subgraph witness", cmd_witness, true},
      {"reduce", "odd circuit reduction to an even subdivision of --target", cmd_reduce, true},
      {"subdivide", "subdivide an edge and/or test for an even subdivision", cmd_subdivide, true},
      {"verify-paper", "run every built-in fixture check", cmd_verify_paper, false},
  };
  std::vector<std::pair<CLI::App*, const Spec*>> subs;
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (s.takes_input)
      sub->add_option("input", opt.input, "graph file or builtin:<name>")->required();
    sub->add_flag("--json", opt.json, "JSON output");
    if (s.takes_input) {
      sub->add_option("--orientation", opt.orientation, "orientation file");
      sub->add_option("--target", opt.target, "k33, gamma1 or gamma2");
      sub->add_option("--max-depth", opt.max_depth, "contraction depth limit (default: none)");
      sub->add_option("--budget", opt.budget, "search node budget")->check(CLI::PositiveNumber);
      sub->add_option("--subset-bound", opt.subset_bound, "largest intractable set to report")
          ->check(CLI::PositiveNumber);
      sub->add_option("--jobs", opt.jobs, "worker threads for witness search")
          ->check(CLI::PositiveNumber);
    }
    if (std::string(s.name) == "subdivide") {
      sub->add_option("--edge", opt.edge, "edge to subdivide")->expected(2);
      sub->add_option("--length", opt.length, "path length replacing the edge")
          ->check(CLI::PositiveNumber);
    }
    if (std::string(s.name) == "witness")
      sub->add_option("--check", opt.check, "verify a witness JSON file instead of searching");
    subs.emplace_back(sub, &s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    for (auto [sub, spec] : subs)
      if (sub->parsed()) return spec->run(opt);
  } catch (const ParseError& e) {
    std::cerr << "pf: " << opt.input << ": " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "pf: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "pf: budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const InternalError& e) {
    std::cerr << "pf: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "pf: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
