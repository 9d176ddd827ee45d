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

#include "tcl/toric.h"

#include "tcl/error.h"

namespace tcl {

PauliWord vertex_operator(const TorusGraph& g, int v) {
  return PauliWord(BitVec(g.num_edges()), g.vertex_star(v));
}

PauliWord face_operator(const TorusGraph& g, int f) {
  return PauliWord(g.face_boundary(f), BitVec(g.num_edges()));
}

ToricCodeState toric_code_state(const TorusGraph& g, const BitVec& c_primal, const BitVec& c_dual) {
  const size_t ne = g.num_edges();
  if (c_primal.size() != ne || c_dual.size() != ne) throw Error(Errc::dimension, "edge set length mismatch");
  if (!is_cycle(g, c_primal)) throw Error(Errc::not_cycle, "T_x support is not a cycle");
  if (is_contractible(g, c_primal)) throw Error(Errc::contractible, "T_x support is contractible");
  if (!is_dual_cycle(g, c_dual)) throw Error(Errc::not_dual_cycle, "T_z support is not a dual cycle");
  if (is_dual_contractible(g, c_dual)) throw Error(Errc::contractible, "T_z support is dual-contractible");
  if (c_primal.dot(c_dual)) throw Error(Errc::odd_overlap, "T_x and T_z overlap on an odd number of edges");

  ToricCodeState s;
  s.graph = g;
  s.c_primal = c_primal;
  s.c_dual = c_dual;
  s.tx1 = PauliWord(c_primal, BitVec(ne));
  s.tz1 = PauliWord(BitVec(ne), c_dual);
  std::vector<PauliWord> gens;
  gens.reserve(ne);
  for (size_t v = 0; v + 1 < g.num_vertices(); ++v) gens.push_back(vertex_operator(g, static_cast<int>(v)));
  for (size_t f = 0; f + 1 < g.num_faces(); ++f) gens.push_back(face_operator(g, static_cast<int>(f)));
  gens.push_back(s.tx1);
  gens.push_back(s.tz1);
  s.group = make_group(ne, std::move(gens));
  if (!s.group.is_state()) throw Error(Errc::not_state_group, "toric code group is not a state group");
  auto [tx2, tz2] = logical_partners(s);
  s.tx2 = tx2;
  s.tz2 = tz2;
  return s;
}

std::array<PauliWord, 2> logical_partners(const ToricCodeState& s) {
  const TorusGraph& g = s.graph;
  const size_t ne = g.num_edges();
  std::optional<PauliWord> tx, tz;
  for (const auto& walk : fundamental_cycles(g)) {
    BitVec c = edge_set(ne, walk);
    if (c.dot(s.c_dual)) {
      tx = PauliWord(c, BitVec(ne));
      break;
    }
  }
  for (const auto& walk : fundamental_dual_cycles(g)) {
    BitVec c = edge_set(ne, walk);
    if (c.dot(s.c_primal)) {
      tz = PauliWord(BitVec(ne), c);
      break;
    }
  }
  // Fundamental cycles span the cycle space, so some member pairs oddly
  // with any non-trivial dual cycle.
  if (!tx || !tz) throw Error(Errc::verification, "no logical partner found");
  return {*tx, *tz};
}

LadderSpec ladder_group(size_t rungs) {
  if (rungs < 2) throw Error(Errc::range, "ladder needs at least 2 rungs");
  const size_t L = rungs, n = 3 * L;
  auto t = [L](size_t x) { return x % L; };
  auto b = [L](size_t x) { return L + x % L; };
  auto r = [L](size_t x) { return 2 * L + x % L; };
  std::vector<PauliWord> gens;
  for (size_t x = 0; x < L; ++x) gens.push_back(PauliWord::x_on(n, {t(x + L - 1), t(x), r(x)}));
  for (size_t x = 0; x + 1 < L; ++x) gens.push_back(PauliWord::x_on(n, {b(x + L - 1), b(x), r(x)}));
  for (size_t x = 0; x < L; ++x) gens.push_back(PauliWord::z_on(n, {t(x), b(x), r(x), r(x + 1)}));
  std::vector<size_t> top;
  for (size_t x = 0; x < L; ++x) top.push_back(t(x));
  LadderSpec spec;
  spec.rungs = L;
  spec.tz = PauliWord::z_on(n, top);
  gens.push_back(spec.tz);
  spec.group = make_group(n, std::move(gens));
  spec.layout.resize(n);
  for (size_t x = 0; x < L; ++x) {
    int c = static_cast<int>(x);
    spec.layout[t(x)] = {c, 0};
    spec.layout[r(x)] = {c, 1};
    spec.layout[b(x)] = {c, 2};
  }
  return spec;
}

}  // namespace tcl
