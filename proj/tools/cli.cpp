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

#include "cli.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "tcl/dense.h"
#include "tcl/io.h"

namespace tcl::cli {

namespace {

// Carries an exit code out of a command.
struct Failure {
  int code;
  std::string message;
};

struct Config {
  std::string in, out = "-", cycles, lattice, size;
  std::vector<std::string> regions;
  uint64_t seed = 0;
  bool oracle = false;
  bool dual = false;
  bool state = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{kUsage, "cannot open " + path};
  std::ostringstream s;
  s << f.rdbuf();
  if (f.bad()) throw Failure{kUsage, "cannot read " + path};
  return s.str();
}

// Writes next to the target and renames, so readers never see a partial file.
void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure{kUsage, "cannot write " + path};
    f << text;
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp);
      throw Failure{kUsage, "cannot write " + path};
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure{kUsage, "cannot rename onto " + path};
  }
}

std::pair<size_t, size_t> parse_size(const std::string& s) {
  size_t x = s.find_first_of("xX");
  try {
    size_t pos = 0;
    if (x == std::string::npos) {
      size_t l = std::stoul(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return {l, l};
    }
    size_t lx = std::stoul(s.substr(0, x), &pos);
    if (pos != x) throw std::invalid_argument(s);
    size_t ly = std::stoul(s.substr(x + 1), &pos);
    if (pos != s.size() - x - 1) throw std::invalid_argument(s);
    return {lx, ly};
  } catch (const std::logic_error&) {
    throw Failure{kUsage, "bad --size \"" + s + "\", expected LxL"};
  }
}

// "e1,e5,7" -> {1, 5, 7}; the empty string is the empty region.
Region parse_region(const std::string& s) {
  Region r;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    if (tok[0] == 'e' || tok[0] == 'q') tok.erase(0, 1);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw Failure{kUsage, "bad region entry in \"" + s + "\""};
    }
    r.push_back(std::stoul(tok));
  }
  return r;
}

TorusGraph generate_graph(const Config& c) {
  if (c.lattice == "random") return random_embedding(c.seed);
  auto kind = lattice_kind_from_string(c.lattice);
  if (!kind) throw Failure{kUsage, "unknown lattice \"" + c.lattice + "\""};
  if (c.size.empty()) throw Failure{kUsage, "--size is required with --lattice"};
  auto [lx, ly] = parse_size(c.size);
  try {
    return build_lattice(*kind, lx, ly);
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  }
}

struct Input {
  TorusGraph graph;
  std::optional<ToricCodeState> state;
};

// --in takes a graph or state document; otherwise --lattice builds one.
Input load_input(const Config& c) {
  if (c.in.empty() == c.lattice.empty()) throw Failure{kUsage, "give exactly one of --in and --lattice"};
  if (c.in.empty()) return {generate_graph(c), std::nullopt};
  std::string text = read_input(c.in);
  try {
    if (document_kind(text) == "state") {
      ToricCodeState s = load_state(text);
      TorusGraph g = s.graph;
      return {std::move(g), std::move(s)};
    }
    return {load_graph(text), std::nullopt};
  } catch (const Error& e) {
    throw Failure{e.code() == Errc::malformed ? kUsage : kVerification, c.in + ": " + e.what()};
  }
}

// Toric code state used when the input carries none: both logicals on the
// first family cycle, or fundamental cycles when the graph has no family.
ToricCodeState reference_state(const TorusGraph& g, const CycleFamily* family) {
  if (family) return toric_code_state(g, family->cycles[0].edge_set, family->cycles[0].edge_set);
  const size_t ne = g.num_edges();
  for (const auto& c : fundamental_cycles(g)) {
    BitVec cp = edge_set(ne, c);
    if (is_contractible(g, cp)) continue;
    auto duals = fundamental_dual_cycles(g);
    std::vector<BitVec> cands;
    for (const auto& d : duals) {
      BitVec b = edge_set(ne, d);
      if (!is_dual_contractible(g, b)) cands.push_back(b);
    }
    if (cands.size() >= 2) cands.push_back(cands[0] ^ cands[1]);
    for (const auto& cd : cands) {
      if (!is_dual_contractible(g, cd) && !cp.dot(cd)) return toric_code_state(g, cp, cd);
    }
  }
  throw Failure{kVerification, "no logical pair found"};
}

CycleFamily load_cycles(const Config& c, const TorusGraph& g) {
  std::string text = read_input(c.cycles);
  try {
    return load_family(g, text);
  } catch (const Error& e) {
    throw Failure{e.code() == Errc::malformed ? kUsage : kVerification, c.cycles + ": " + e.what()};
  }
}

struct Pipeline {
  ToricCodeState state;
  CycleFamily family;
};

// State and family for disentangling; graphs without a family are
// completed by vertex splits. Writes the obstruction document and fails
// with kNoFamily when that is impossible.
Pipeline prepare(const Config& c, const Input& in) {
  if (!c.cycles.empty()) {
    CycleFamily f = load_cycles(c, in.graph);
    ToricCodeState s = in.state ? *in.state : reference_state(in.graph, &f);
    return {std::move(s), std::move(f)};
  }
  try {
    CycleFamily f = find_family(in.graph);
    ToricCodeState s = in.state ? *in.state : reference_state(in.graph, &f);
    return {std::move(s), std::move(f)};
  } catch (const NoFamilyError& e) {
    if (!in.state) {
      try {
        CompletedFamily cf = complete_family(in.graph, e.obstructions());
        return {cf.state(), cf.family};
      } catch (const Error&) {
      }
    }
    write_output(c.out, save_obstructions(e.obstructions()));
    throw Failure{kNoFamily, e.what()};
  }
}

int cmd_generate(const Config& c) {
  if (c.lattice.empty()) throw Failure{kUsage, "--lattice is required"};
  TorusGraph g = generate_graph(c);
  if (!c.state) {
    write_output(c.out, save_graph(g));
    return kOk;
  }
  try {
    CycleFamily f = find_family(g);
    write_output(c.out, save_state(reference_state(g, &f)));
  } catch (const NoFamilyError&) {
    write_output(c.out, save_state(reference_state(g, nullptr)));
  }
  return kOk;
}

int cmd_cycles(const Config& c) {
  Input in = load_input(c);
  try {
    write_output(c.out, save_family(find_family(in.graph)));
  } catch (const NoFamilyError& e) {
    write_output(c.out, save_obstructions(e.obstructions()));
    std::cerr << "tclayers: " << e.what() << "\n";
    return kNoFamily;
  }
  return kOk;
}

int cmd_disentangle(const Config& c) {
  Input in = load_input(c);
  Pipeline p = prepare(c, in);
  if (c.oracle && p.state.graph.num_edges() > kDenseMaxQubits) {
    throw Failure{kUsage, "--oracle needs at most " + std::to_string(kDenseMaxQubits) + " qubits, have " +
                              std::to_string(p.state.graph.num_edges())};
  }
  DisentangleResult r;
  try {
    r = disentangle(p.state, p.family, c.oracle);
  } catch (const Error& e) {
    throw Failure{kVerification, e.what()};
  }
  write_output(c.out, save_report(r.report));
  if (r.report.ok()) return kOk;
  for (const auto& [name, pass] : r.report.verdicts()) {
    if (!pass) std::cerr << "tclayers: check failed: " << name << "\n";
  }
  return kVerification;
}

int cmd_entropy(const Config& c) {
  Input in = load_input(c);
  StabilizerGroup group;
  if (c.cycles.empty()) {
    std::optional<CycleFamily> f;
    try {
      f = find_family(in.graph);
    } catch (const NoFamilyError&) {
    }
    group = in.state ? in.state->group : reference_state(in.graph, f ? &*f : nullptr).group;
  } else {
    Pipeline p = prepare(c, in);
    try {
      group = disentangle(p.state, p.family).group;
    } catch (const Error& e) {
      throw Failure{kVerification, e.what()};
    }
  }
  EntropyResult res;
  for (const auto& s : c.regions) res.regions.push_back(parse_region(s));
  const size_t k = res.regions.size();
  res.mutual_information.assign(k, std::vector<size_t>(k, 0));
  try {
    for (const auto& r : res.regions) res.entropy.push_back(entanglement_entropy(group, r));
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = i + 1; j < k; ++j) {
        res.mutual_information[i][j] = res.mutual_information[j][i] =
            mutual_information(group, res.regions[i], res.regions[j]);
      }
    }
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  }
  write_output(c.out, save_entropy(res));
  return kOk;
}

int cmd_export_dot(const Config& c) {
  Input in = load_input(c);
  DotOptions opts;
  opts.dual = c.dual;
  if (!c.cycles.empty()) {
    // Obstruction documents are drawn as is; families are validated.
    std::string text = read_input(c.cycles);
    if (document_kind(text) == "obstructions") {
      try {
        for (const auto& o : load_obstructions(text)) opts.cycles.push_back(o.cycle);
      } catch (const Error& e) {
        throw Failure{kUsage, c.cycles + ": " + e.what()};
      }
    } else {
      for (const auto& cy : load_cycles(c, in.graph).cycles) opts.cycles.push_back(cy.edges);
    }
  }
  try {
    write_output(c.out, to_dot(in.graph, opts));
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
  Config c;
  CLI::App app{"Toric code layer disentangling on torus graphs", "tclayers"};
  app.require_subcommand(1);
  app.add_option("--seed", c.seed, "Seed for --lattice random");

  auto source = [&](CLI::App* s) {
    s->add_option("--in", c.in, "Graph or state JSON, - for stdin");
    s->add_option("--lattice", c.lattice, "square, triangular, kagome, square_octagon or random");
    s->add_option("--size", c.size, "Lattice size LxL");
    s->add_option("--out", c.out, "Output path, - for stdout");
  };

  auto* gen = app.add_subcommand("generate", "Write a lattice graph (or its toric code state)");
  gen->add_option("--lattice", c.lattice, "square, triangular, kagome, square_octagon or random")->required();
  gen->add_option("--size", c.size, "Lattice size LxL");
  gen->add_option("--out", c.out, "Output path, - for stdout");
  gen->add_flag("--state", c.state, "Write a toric code state document instead");

  auto* cyc = app.add_subcommand("cycles", "Find a topological cycle family");
  source(cyc);

  auto* dis = app.add_subcommand("disentangle", "Disentangle a toric code state into ladders");
  source(dis);
  dis->add_option("--cycles", c.cycles, "Cycle family JSON");
  dis->add_flag("--oracle", c.oracle, "Check against dense statevectors (n <= 20)");

  auto* ent = app.add_subcommand("entropy", "Entanglement entropy of edge regions");
  source(ent);
  ent->add_option("--region", c.regions, "Comma separated edge ids, e.g. \"e1,e5\"; repeatable")->take_all();
  ent->add_option("--cycles", c.cycles, "Cycle family JSON; regions then refer to the disentangled state");

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a graph");
  source(dot);
  dot->add_option("--cycles", c.cycles, "Family or obstruction JSON to highlight");
  dot->add_flag("--dual", c.dual, "Also emit the dual graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_generate(c);
    if (*cyc) return cmd_cycles(c);
    if (*dis) return cmd_disentangle(c);
    if (*ent) return cmd_entropy(c);
    return cmd_export_dot(c);
  } catch (const Failure& f) {
    std::cerr << "tclayers: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    std::cerr << "tclayers: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::no_family ? kNoFamily : kVerification;
  } catch (const std::exception& e) {
    std::cerr << "tclayers: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace tcl::cli
