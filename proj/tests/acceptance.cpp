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

// Acceptance checks. Prints one PASS/FAIL line per criterion, preceded by
// indented detail lines, and exits nonzero when any criterion fails.
// Every tolerance below is exact; the time budgets are wall clock.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.h"
#include "nlohmann/json.hpp"
#include "tcl/dense.h"
#include "tcl/error.h"
#include "tcl/io.h"

namespace {

using namespace tcl;

constexpr double kBudget1 = 5.0;
constexpr double kBudget2 = 30.0;
constexpr double kBudget4 = 60.0;
constexpr double kBudget6 = 10.0;
constexpr uint64_t kEmbeddings = 200;

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void detail(const std::string& s) { std::cout << "  " << s << "\n"; }

struct Run {
  ToricCodeState state;
  CycleFamily family;
  DisentangleReport report;
  bool er = false;
};

// find_family, falling back to vertex splitting like the CLI does.
Run pipeline(const TorusGraph& g, bool oracle) {
  Run r;
  try {
    r.family = find_family(g);
    r.state = toric_code_state(g, r.family.cycles[0].edge_set, r.family.cycles[0].edge_set);
  } catch (const NoFamilyError& e) {
    CompletedFamily cf = complete_family(g, e.obstructions());
    r.state = cf.state();
    r.family = cf.family;
    r.er = true;
  }
  r.report = disentangle(r.state, r.family, oracle).report;
  return r;
}

bool mi_zero(const DisentangleReport& rep) {
  for (const auto& row : rep.mutual_information) {
    for (size_t v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

bool ladders_match(const DisentangleReport& rep) {
  for (const auto& c : rep.components) {
    if (!c.reference_equal) return false;
    if (rep.generated_lattice && c.ladder_shape && !c.ladder_bijection) return false;
  }
  return true;
}

bool criterion1() {
  Clock clock;
  bool ok = true;
  struct Case {
    LatticeKind kind;
    size_t l;
  };
  for (Case c : {Case{LatticeKind::triangular, 2}, Case{LatticeKind::triangular, 4}, Case{LatticeKind::square, 2},
                 Case{LatticeKind::square, 4}, Case{LatticeKind::kagome, 2}, Case{LatticeKind::square_octagon, 2}}) {
    std::ostringstream line;
    line << lattice_kind_name(c.kind) << " " << c.l << "x" << c.l << ": ";
    try {
      Run r = pipeline(build_lattice(c.kind, c.l, c.l), false);
      bool pass = r.report.components.size() == c.l && r.family.size() == c.l && ladders_match(r.report) &&
                  mi_zero(r.report);
      line << "M=" << r.family.size() << " components=" << r.report.components.size()
           << " ladders=" << ladders_match(r.report) << " mi_zero=" << mi_zero(r.report) << (r.er ? " (split)" : "")
           << (pass ? "" : " FAIL");
      ok = ok && pass;
    } catch (const Error& e) {
      line << errc_name(e.code()) << ": " << e.what() << " FAIL";
      ok = false;
    }
    detail(line.str());
  }
  double t = clock.seconds();
  detail("time " + std::to_string(t) + " s");
  return ok && t < kBudget1;
}

bool criterion2() {
  Clock clock;
  bool ok = true;
  std::vector<std::pair<std::string, TorusGraph>> cases = {
      {"square 2x2", build_lattice(LatticeKind::square, 2, 2)},
      {"triangular 2x2", build_lattice(LatticeKind::triangular, 2, 2)},
      {"square 3x3", build_lattice(LatticeKind::square, 3, 3)},
      {"square 3x2 (split)", build_lattice(LatticeKind::square, 3, 2)},
  };
  for (auto& [name, g] : cases) {
    try {
      Run r = pipeline(g, true);
      bool pass = r.report.oracle_run && r.report.oracle_verified;
      detail(name + ": n=" + std::to_string(r.state.group.n()) + " oracle_verified=" + std::to_string(pass));
      ok = ok && pass;
    } catch (const Error& e) {
      detail(name + ": " + errc_name(e.code()) + ": " + e.what());
      ok = false;
    }
  }
  double t = clock.seconds();
  detail("time " + std::to_string(t) + " s");
  return ok && t < kBudget2;
}

// Chain index of edge e in chain k, or -1.
int position(const GhzChain& c, size_t e) {
  for (size_t i = 0; i < c.length(); ++i) {
    if (c.slots[i] == e) return static_cast<int>(i);
  }
  return -1;
}

bool criterion3() {
  TorusGraph g = build_lattice(LatticeKind::triangular, 4, 4);
  CycleFamily f = find_family(g);
  const size_t n = g.num_edges();
  std::vector<GhzChain> chains;
  for (const auto& c : f.cycles) chains.push_back(make_chain(c));
  auto image = [&](PauliWord p) {
    for (const auto& c : chains) p = image_exact(p, c);
    return p;
  };
  // (chain, index) of every chain edge.
  std::vector<std::pair<int, int>> where(n, {-1, -1});
  for (size_t k = 0; k < chains.size(); ++k) {
    for (size_t i = 0; i < chains[k].length(); ++i) where[chains[k].slots[i]] = {static_cast<int>(k), static_cast<int>(i)};
  }

  // B_p = X_j X_{j+1} X_a -> X_a Xb_{j-1} Xb_{j+1}.
  size_t plaq = 0, plaq_ok = 0;
  for (size_t fc = 0; fc < g.num_faces(); ++fc) {
    PauliWord bp = face_operator(g, static_cast<int>(fc));
    std::vector<size_t> off;
    std::vector<std::pair<int, int>> on;
    for (size_t e : bp.x().ones()) (where[e].first < 0 ? off.push_back(e) : on.push_back(where[e]));
    if (on.size() != 2 || on[0].first != on[1].first) continue;
    const GhzChain& c = chains[on[0].first];
    int j = std::min(on[0].second, on[1].second);
    if (std::abs(on[0].second - on[1].second) != 1 || j < 1 || j + 2 >= static_cast<int>(c.length())) continue;
    PauliWord expect = PauliWord::x_on(n, off);
    expect = pauli_multiply(expect, PauliWord::x_on(n, {c.slots[j - 1], c.slots[j + 1]}));
    ++plaq;
    plaq_ok += image(bp) == expect;
  }

  // A_v = Z_a' Z_b' Z_j Z_{j+1} Z_j' Z_{j'+1} -> Z_a' Z_b' Zb_j Zb_j'.
  size_t vert = 0, vert_ok = 0;
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    PauliWord av = vertex_operator(g, static_cast<int>(v));
    PauliWord expect = PauliWord::z_on(n, {});
    bool usable = true;
    size_t on_chains = 0;
    for (size_t k = 0; k < chains.size(); ++k) {
      const GhzChain& c = chains[k];
      for (size_t i = 0; i < c.length(); ++i) {
        if (c.cycle.vertices[i] != static_cast<int>(v)) continue;
        ++on_chains;
        if (i + 1 >= c.length()) usable = false;
        expect = pauli_multiply(expect, c.zbar(n, {i}));
      }
    }
    std::vector<size_t> off;
    for (size_t e : av.z().ones()) {
      if (where[e].first < 0) off.push_back(e);
    }
    if (!usable || on_chains == 0) continue;
    expect = pauli_multiply(expect, PauliWord::z_on(n, off));
    ++vert;
    vert_ok += image(av) == expect;
  }

  // Logical strings of each chain.
  size_t logical_ok = 0;
  for (const auto& c : chains) {
    PauliWord tx = PauliWord::x_on(n, c.slots), tz = PauliWord::z_on(n, c.slots);
    logical_ok += image_exact(tz, c) == c.zbar_parity(n, false);
    logical_ok += image_exact(pauli_multiply(tx, tz), c) == c.zbar_parity(n, true);
  }
  detail("plaquettes " + std::to_string(plaq_ok) + "/" + std::to_string(plaq));
  detail("vertices " + std::to_string(vert_ok) + "/" + std::to_string(vert));
  detail("logical strings " + std::to_string(logical_ok) + "/" + std::to_string(2 * chains.size()));
  return plaq > 0 && vert > 0 && plaq_ok == plaq && vert_ok == vert && logical_ok == 2 * chains.size();
}

bool criterion4() {
  Clock clock;
  size_t euler_ok = 0, dual_ok = 0, rewrite_ok = 0, ghz_runs = 0, ghz_ok = 0, purity_ok = 0;
  for (uint64_t seed = 0; seed < kEmbeddings; ++seed) {
    TorusGraph g = random_embedding(seed);
    long chi = static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) +
               static_cast<long>(g.num_faces());
    euler_ok += chi == 0;
    TorusGraph dd = dual_graph(dual_graph(g));
    dual_ok += dd.alpha_array() == g.alpha_array() && dd.sigma_array() == g.sigma_array();

    // Logicals on fundamental cycles with even overlap.
    std::optional<ToricCodeState> s;
    const size_t ne = g.num_edges();
    std::vector<BitVec> duals;
    for (const auto& d : fundamental_dual_cycles(g)) {
      BitVec b = edge_set(ne, d);
      if (!is_dual_contractible(g, b)) duals.push_back(b);
    }
    if (duals.size() >= 2) duals.push_back(duals[0] ^ duals[1]);
    for (const auto& c : fundamental_cycles(g)) {
      BitVec cp = edge_set(ne, c);
      if (s || is_contractible(g, cp)) continue;
      for (const auto& cd : duals) {
        if (!s && !is_dual_contractible(g, cd) && !cp.dot(cd)) s = toric_code_state(g, cp, cd);
      }
    }
    if (!s) continue;

    std::mt19937_64 rng(seed);
    StabilizerGroup cur = s->group;
    bool same = true;
    for (int k = 0; k < 8; ++k) {
      size_t c = rng() % ne, t = (c + 1 + rng() % (ne - 1)) % ne;
      StabilizerGroup next = conjugate_by_cnot(cur, c, t);
      same = same && next.size() == cur.size();
      for (size_t a = 0; a < cur.size(); ++a) {
        for (size_t b = a + 1; b < cur.size(); ++b) {
          same = same && symplectic_product(cur[a], cur[b]) == symplectic_product(next[a], next[b]);
        }
      }
      cur = next;
    }
    rewrite_ok += same;

    try {
      CycleFamily f = find_family(g, {8, 500, 20000});
      ++ghz_runs;
      ToricCodeState st = toric_code_state(g, f.cycles[0].edge_set, f.cycles[0].edge_set);
      DisentangleReport rep = disentangle(st, f).report;
      ghz_ok += rep.commutation_preserved && rep.rank_preserved;
    } catch (const NoFamilyError&) {
    } catch (const Error&) {
    }

    Region a, rest;
    for (size_t q = 0; q < ne; ++q) ((rng() & 1u) ? a : rest).push_back(q);
    purity_ok += entanglement_entropy(s->group, a) == entanglement_entropy(s->group, rest);
  }
  double t = clock.seconds();
  auto frac = [](size_t a, size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
  detail("euler " + frac(euler_ok, kEmbeddings) + ", dual involution " + frac(dual_ok, kEmbeddings));
  detail("cnot rewrites " + frac(rewrite_ok, kEmbeddings) + ", ghz rewrites " + frac(ghz_ok, ghz_runs));
  detail("purity " + frac(purity_ok, kEmbeddings));
  detail("time " + std::to_string(t) + " s");
  return euler_ok == kEmbeddings && dual_ok == kEmbeddings && rewrite_ok == kEmbeddings && ghz_ok == ghz_runs &&
         purity_ok == kEmbeddings && t < kBudget4;
}

bool criterion5() {
  bool ok = true;
  TorusGraph g = build_lattice(LatticeKind::square, 4, 4);
  CycleFamily f = find_family(g);
  ToricCodeState s = toric_code_state(g, f.cycles[0].edge_set, f.cycles[0].edge_set);
  Region disk;
  for (size_t e : g.face_boundary(0).ones()) disk.push_back(e);
  size_t sd = entanglement_entropy(s.group, disk);
  detail("plaquette disk entropy " + std::to_string(sd) + " (expected 3)");
  ok = ok && sd == 3;

  DisentangleReport rep = disentangle(s, f).report;
  size_t mi = rep.preimage_mutual_information.size() > 1 ? rep.preimage_mutual_information[0][1] : 0;
  detail("adjacent layer mutual information before disentangling " + std::to_string(mi) + " (expected >= 1)");
  ok = ok && mi >= 1;

  struct Case {
    LatticeKind kind;
    size_t l;
  };
  for (Case c : {Case{LatticeKind::triangular, 2}, Case{LatticeKind::triangular, 4}, Case{LatticeKind::square, 2},
                 Case{LatticeKind::square, 4}}) {
    Run r = pipeline(build_lattice(c.kind, c.l, c.l), false);
    size_t worst = 0;
    for (const auto& comp : r.report.components) worst = std::max(worst, comp.max_cut_entropy);
    bool pass = worst <= kMaxLadderCutEntropy;
    detail(std::string(lattice_kind_name(c.kind)) + " " + std::to_string(c.l) + "x" + std::to_string(c.l) +
           ": max ladder cut entropy " + std::to_string(worst) + (pass ? "" : " FAIL"));
    ok = ok && pass;
  }
  return ok;
}

bool criterion6() {
  Clock clock;
  TorusGraph g = build_lattice(LatticeKind::square, 3, 2);
  std::vector<Obstruction> obs;
  try {
    find_family(g);
    detail("square 3x2 unexpectedly has a family");
    return false;
  } catch (const NoFamilyError& e) {
    obs = e.obstructions();
  }
  size_t two_sided = 0;
  for (const auto& o : obs) two_sided += o.vertices.size();
  detail("obstruction cycles " + std::to_string(obs.size()) + ", two-sided vertices " + std::to_string(two_sided));
  CompletedFamily cf = complete_family(g, obs);
  bool fresh = true;
  for (const auto& st : cf.steps) {
    fresh = fresh && groups_equal(st.state.group,
                                  toric_code_state(st.state.graph, st.state.c_primal, st.state.c_dual).group);
  }
  detail("split states equal fresh toric code: " + std::to_string(fresh));
  DisentangleReport rep = disentangle(cf.state(), cf.family, true).report;
  bool c1 = rep.components.size() == cf.family.size() && ladders_match(rep) && mi_zero(rep);
  bool c2 = rep.oracle_run && rep.oracle_verified;
  detail("components " + std::to_string(rep.components.size()) + ", ladders " + std::to_string(ladders_match(rep)) +
         ", oracle " + std::to_string(c2));
  double t = clock.seconds();
  detail("time " + std::to_string(t) + " s");
  return fresh && c1 && c2 && t < kBudget6;
}

bool criterion7() {
  bool ok = true;
  TorusGraph g = build_lattice(LatticeKind::square, 4, 4);
  Errc got = Errc::verification;
  bool threw = false;
  try {
    check_topological(g, {0, 2, 4, 6});
  } catch (const Error& e) {
    threw = true;
    got = e.code();
  }
  detail(std::string("straight row: ") + (threw ? errc_name(got) : "accepted"));
  ok = ok && threw && got == Errc::not_dual_cycle;

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "tclayers_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string state = (dir / "s.json").string(), bad = (dir / "bad.json").string(),
              out = (dir / "r.json").string();
  auto cli = [](std::vector<std::string> args) {
    args.insert(args.begin(), "tclayers");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return tcl::cli::run(static_cast<int>(argv.size()), argv.data());
  };
  int rc = cli({"generate", "--lattice", "square", "--size", "2x2", "--state", "--out", state});
  std::ifstream in(state);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in);
  std::string g0 = doc["group"]["generators"][0];
  g0[0] = g0[0] == '+' ? '-' : '+';
  doc["group"]["generators"][0] = g0;
  std::ofstream(bad) << doc.dump(2) << "\n";
  int clean = cli({"disentangle", "--in", state, "--out", out});
  int tampered = cli({"disentangle", "--in", bad, "--out", out});
  fs::remove_all(dir);
  detail("untampered exit " + std::to_string(clean) + ", sign-tampered exit " + std::to_string(tampered));
  return ok && rc == 0 && clean == 0 && tampered == tcl::cli::kVerification;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
      {"tensor product into ladders", criterion1}, {"dense oracle equivalence", criterion2},
      {"worked rewrite cases", criterion3},        {"random embedding invariants", criterion4},
      {"long vs short range entropy", criterion5}, {"vertex split fallback", criterion6},
      {"negative controls", criterion7},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    bool pass = false;
    try {
      pass = criteria[i].second();
    } catch (const std::exception& e) {
      std::cout << "  error: " << e.what() << "\n";
    }
    std::cout << (pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << std::endl;
    failed += !pass;
  }
  return failed == 0 ? 0 : 1;
}
