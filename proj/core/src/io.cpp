// Copyright 2026 The tclayers Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tcl/io.h"

#include <sstream>

#include "nlohmann/json.hpp"

namespace tcl {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw Error(Errc::malformed, std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::malformed, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw Error(Errc::malformed, std::string("field \"") + key + "\" has the wrong type");
  }
}

void check_version(const Json& j) {
  if (!j.is_object()) throw Error(Errc::malformed, "document is not an object");
  if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion) {
    throw Error(Errc::malformed, "unsupported schema_version");
  }
}

Json header(const char* kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json graph_json(const TorusGraph& g) {
  Json j;
  j["darts"] = g.num_darts();
  j["alpha"] = g.alpha_array();
  j["sigma"] = g.sigma_array();
  j["vertex_of"] = g.vertex_array();
  j["edge_of"] = g.edge_array();
  if (const auto& lg = g.legend()) {
    Json l;
    l["kind"] = lg->kind;
    l["lx"] = lg->lx;
    l["ly"] = lg->ly;
    l["coords"] = lg->coords;
    j["legend"] = l;
  }
  return j;
}

TorusGraph graph_from(const Json& j) {
  auto alpha = field<std::vector<int>>(j, "alpha");
  if (field<size_t>(j, "darts") != alpha.size()) throw Error(Errc::malformed, "\"darts\" does not match alpha");
  std::optional<Legend> legend;
  if (j.contains("legend")) {
    const Json& l = j["legend"];
    legend = Legend{field<std::string>(l, "kind"), field<size_t>(l, "lx"), field<size_t>(l, "ly"),
                    l.contains("coords") ? field<std::vector<std::array<double, 2>>>(l, "coords")
                                         : std::vector<std::array<double, 2>>{}};
  }
  return TorusGraph(std::move(alpha), field<std::vector<int>>(j, "sigma"), field<std::vector<int>>(j, "vertex_of"),
                    field<std::vector<int>>(j, "edge_of"), std::move(legend));
}

Json group_json(const StabilizerGroup& g) {
  Json j;
  j["n"] = g.n();
  Json gens = Json::array();
  for (const auto& w : g.generators()) gens.push_back(w.str());
  j["generators"] = gens;
  return j;
}

StabilizerGroup group_from(const Json& j) {
  size_t n = field<size_t>(j, "n");
  std::vector<PauliWord> gens;
  for (const auto& s : field<std::vector<std::string>>(j, "generators")) gens.push_back(PauliWord::parse(s, n));
  return make_group(n, std::move(gens));
}

Json cycle_json(const TopoCycle& c) {
  Json j;
  j["edges"] = c.edges;
  j["vertices"] = c.vertices;
  Json sides = Json::array();
  for (Side s : c.sides) sides.push_back(side_name(s));
  j["sides"] = sides;
  return j;
}

std::vector<int> edge_list(const BitVec& b) {
  std::vector<int> e;
  for (size_t i : b.ones()) e.push_back(static_cast<int>(i));
  return e;
}

}  // namespace

std::string save_graph(const TorusGraph& g) {
  Json j = header("graph");
  j.update(graph_json(g));
  return dump(j);
}

TorusGraph load_graph(std::string_view text) {
  Json j = parse(text);
  check_version(j);
  if (j.contains("graph")) return graph_from(j["graph"]);
  return graph_from(j);
}

std::string save_group(const StabilizerGroup& g) {
  Json j = header("group");
  j.update(group_json(g));
  return dump(j);
}

StabilizerGroup load_group(std::string_view text) {
  Json j = parse(text);
  check_version(j);
  return group_from(j);
}

std::string save_family(const CycleFamily& f) {
  Json j = header("family");
  j["size"] = f.size();
  Json cs = Json::array();
  for (const auto& c : f.cycles) cs.push_back(cycle_json(c));
  j["cycles"] = cs;
  return dump(j);
}

CycleFamily load_family(const TorusGraph& g, std::string_view text) {
  Json j = parse(text);
  check_version(j);
  Json list = j.is_array() ? j : (j.contains("cycles") ? j["cycles"] : Json::array({j}));
  if (!list.is_array()) throw Error(Errc::malformed, "\"cycles\" is not an array");
  std::vector<TopoCycle> cycles;
  for (const auto& cj : list) {
    TopoCycle c = check_topological(g, field<std::vector<int>>(cj, "edges"));
    if (cj.contains("sides") && field<std::vector<int>>(cj, "edges") == c.edges) {
      auto sides = field<std::vector<std::string>>(cj, "sides");
      if (sides.size() != c.sides.size()) throw Error(Errc::verification, "sides do not match the cycle");
      for (size_t i = 0; i < sides.size(); ++i) {
        if (sides[i] != side_name(c.sides[i])) throw Error(Errc::verification, "sides do not match the cycle");
      }
    }
    cycles.push_back(std::move(c));
  }
  return make_family(g, std::move(cycles));
}

std::string save_obstructions(const std::vector<Obstruction>& obs) {
  Json j = header("obstructions");
  Json a = Json::array();
  for (const auto& o : obs) {
    Json x;
    x["cycle"] = o.cycle;
    x["vertices"] = o.vertices;
    a.push_back(x);
  }
  j["obstructions"] = a;
  return dump(j);
}

std::vector<Obstruction> load_obstructions(std::string_view text) {
  Json j = parse(text);
  check_version(j);
  std::vector<Obstruction> out;
  for (const auto& o : field<Json>(j, "obstructions")) {
    out.push_back({field<std::vector<int>>(o, "cycle"), field<std::vector<int>>(o, "vertices")});
  }
  return out;
}

std::string save_state(const ToricCodeState& s) {
  Json j = header("state");
  j["graph"] = graph_json(s.graph);
  j["group"] = group_json(s.group);
  j["c_primal"] = edge_list(s.c_primal);
  j["c_dual"] = edge_list(s.c_dual);
  return dump(j);
}

ToricCodeState load_state(std::string_view text) {
  Json j = parse(text);
  check_version(j);
  if (!j.contains("graph") || !j.contains("group")) throw Error(Errc::malformed, "state needs graph and group");
  TorusGraph g = graph_from(j["graph"]);
  const size_t ne = g.num_edges();
  ToricCodeState s = toric_code_state(g, edge_set(ne, field<std::vector<int>>(j, "c_primal")),
                                      edge_set(ne, field<std::vector<int>>(j, "c_dual")));
  StabilizerGroup grp = group_from(j["group"]);
  if (grp.n() != ne) throw Error(Errc::dimension, "group size differs from the edge count");
  if (!grp.is_state()) throw Error(Errc::not_state_group, "stored group is not a state group");
  s.group = std::move(grp);
  return s;
}

std::string document_kind(std::string_view text) {
  Json j = parse(text);
  if (j.is_object() && j.contains("kind") && j["kind"].is_string()) return j["kind"].get<std::string>();
  return {};
}

std::string save_report(const DisentangleReport& r) {
  Json j = header("disentangle_report");
  j["ok"] = r.ok();
  Json v;
  for (const auto& [name, pass] : r.verdicts()) v[name] = pass;
  j["verdicts"] = v;
  j["num_qubits"] = r.num_qubits;
  j["family_size"] = r.family_size;
  j["component_count"] = r.components.size();
  j["max_cut_entropy_bound"] = kMaxLadderCutEntropy;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json x;
    x["qubits"] = c.qubits;
    x["generators"] = c.generators;
    x["reference_equal"] = c.reference_equal;
    x["ladder_shape"] = c.ladder_shape;
    x["ladder_bijection"] = c.ladder_bijection ? Json(*c.ladder_bijection) : Json(nullptr);
    x["max_cut_entropy"] = c.max_cut_entropy;
    x["has_tz"] = c.has_tz;
    comps.push_back(x);
  }
  j["components"] = comps;
  j["mutual_information"] = r.mutual_information;
  j["preimage_mutual_information"] = r.preimage_mutual_information;
  j["oracle_run"] = r.oracle_run;
  j["oracle_verified"] = r.oracle_verified;
  Json rel = Json::array();
  for (const auto& e : r.relabeling.ghz) {
    Json x;
    x["chain"] = e.chain;
    x["ghz_index"] = e.index + 1;
    x["slot"] = e.slot;
    x["vertex"] = e.vertex;
    x["color"] = color_name(e.color);
    rel.push_back(x);
  }
  j["relabeling"] = rel;
  return dump(j);
}

std::string save_entropy(const EntropyResult& e) {
  Json j = header("entropy");
  j["regions"] = e.regions;
  j["entropy"] = e.entropy;
  j["mutual_information"] = e.mutual_information;
  return dump(j);
}

std::string to_dot(const TorusGraph& g, const DotOptions& opts) {
  std::vector<int> cycle_of(g.num_edges(), -1);
  for (size_t k = 0; k < opts.cycles.size(); ++k) {
    for (int e : opts.cycles[k]) {
      if (e < 0 || static_cast<size_t>(e) >= g.num_edges()) throw Error(Errc::range, "cycle edge out of range");
      cycle_of[e] = static_cast<int>(k);
    }
  }
  static const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown"};
  std::ostringstream o;
  o << "graph torus {\n  node [shape=circle];\n";
  const auto& lg = g.legend();
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    o << "  v" << v;
    if (lg && v < lg->coords.size()) o << " [pos=\"" << lg->coords[v][0] << "," << lg->coords[v][1] << "!\"]";
    o << ";\n";
  }
  for (size_t e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge_darts(static_cast<int>(e));
    o << "  v" << g.vertex_of(a) << " -- v" << g.vertex_of(b) << " [label=\"e" << e << "\"";
    if (cycle_of[e] >= 0) {
      o << ", cycle=" << cycle_of[e] << ", color=" << kPalette[cycle_of[e] % 6] << ", penwidth=3";
    }
    o << "];\n";
  }
  o << "}\n";
  if (opts.dual) {
    o << "graph dual {\n  node [shape=box];\n";
    for (size_t f = 0; f < g.num_faces(); ++f) o << "  f" << f << ";\n";
    for (size_t e = 0; e < g.num_edges(); ++e) {
      auto [a, b] = g.edge_darts(static_cast<int>(e));
      o << "  f" << g.face_of(a) << " -- f" << g.face_of(b) << " [label=\"e" << e << "\", style=dashed";
      if (cycle_of[e] >= 0) o << ", cycle=" << cycle_of[e];
      o << "];\n";
    }
    o << "}\n";
  }
  return o.str();
}

std::string ladder_to_dot(const LadderSpec& l) {
  std::ostringstream o;
  o << "graph ladder {\n  node [shape=box];\n";
  for (size_t q = 0; q < l.layout.size(); ++q) {
    o << "  q" << q << " [pos=\"" << l.layout[q][0] << "," << -l.layout[q][1] << "!\"];\n";
  }
  const size_t L = l.rungs;
  for (size_t x = 0; x < L; ++x) {
    o << "  q" << x << " -- q" << (x + 1) % L << ";\n";
    o << "  q" << L + x << " -- q" << L + (x + 1) % L << ";\n";
    o << "  q" << x << " -- q" << 2 * L + x << " -- q" << L + x << ";\n";
  }
  o << "}\n";
  return o.str();
}

}  // namespace tcl
