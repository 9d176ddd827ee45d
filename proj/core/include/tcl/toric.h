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

#ifndef TCL_TORIC_H
#define TCL_TORIC_H

#include <array>
#include <vector>

#include "tcl/stabilizer.h"
#include "tcl/torus_graph.h"

namespace tcl {

// A_v: Z on the edges at v. B_p: X on the boundary of face p.
PauliWord vertex_operator(const TorusGraph& g, int v);
PauliWord face_operator(const TorusGraph& g, int f);

/// Toric code ground state |G00> on a torus graph: one qubit per edge.
struct ToricCodeState {
  TorusGraph graph;
  BitVec c_primal, c_dual;
  // Generators: A_v for v < V-1, B_p for p < F-1, then T_x1, T_z1.
  StabilizerGroup group;
  PauliWord tx1, tz1, tx2, tz2;
};

// T_x1 = X on c_primal, T_z1 = Z on c_dual. Throws not_cycle,
// not_dual_cycle, contractible or odd_overlap.
ToricCodeState toric_code_state(const TorusGraph& g, const BitVec& c_primal, const BitVec& c_dual);

// First fundamental cycle meeting c_dual oddly and first fundamental dual
// cycle meeting c_primal oddly, as (X word, Z word).
std::array<PauliWord, 2> logical_partners(const ToricCodeState& s);

/// Periodic Kitaev ladder in checkerboard form. Qubits t(x) = x on the top
/// leg, b(x) = L + x on the bottom leg and r(x) = 2L + x on the rungs.
struct LadderSpec {
  size_t rungs = 0;
  // (column, row) per qubit, row 0 top leg, 1 rung, 2 bottom leg.
  std::vector<std::array<int, 2>> layout;
  StabilizerGroup group;
  PauliWord tz;
};

// Generators: X{t(x-1), t(x), r(x)} for all x, X{b(x-1), b(x), r(x)} for
// x < L-1, Z{t(x), b(x), r(x), r(x+1)} for all x, then T_z = Z on the top leg.
LadderSpec ladder_group(size_t rungs);

}  // namespace tcl

#endif
