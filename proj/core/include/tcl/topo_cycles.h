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

#ifndef TCL_TOPO_CYCLES_H
#define TCL_TOPO_CYCLES_H

#include <vector>

#include "tcl/error.h"
#include "tcl/toric.h"

namespace tcl {

enum class Side { up, down };
const char* side_name(Side s);

/// Simple even cycle that is also a dual cycle, non-contractible, and
/// meets every vertex from one side only.
///
/// Vertex v_i joins edges e_i and e_{i+1}. The up side of v_i is the
/// rotation arc counterclockwise from the outgoing dart to the incoming one,
/// i.e. the left of the direction of travel. Vertices of degree 2 are up.
struct TopoCycle {
  std::vector<int> edges;
  std::vector<int> vertices;
  // darts[i] is the dart of e_i leaving v_{i-1}.
  std::vector<int> darts;
  std::vector<Side> sides;
  BitVec edge_set;

  size_t length() const { return edges.size(); }
};

// Validates an ordered closed walk and returns it canonicalized: lowest edge
// first, then the lower of its two cycle neighbours. Throws not_closed,
// not_simple, contractible, not_dual_cycle, two_sided or odd_length, checked
// in that order.
TopoCycle check_topological(const TorusGraph& g, const std::vector<int>& edges);

// Off-cycle darts of v_i on each side, in rotation order.
std::array<std::vector<int>, 2> side_arcs(const TorusGraph& g, const TopoCycle& c, size_t i);

/// Edge-disjoint homologous topological cycles whose removal leaves primal
/// and dual graphs of maximum degree 2.
struct CycleFamily {
  std::vector<TopoCycle> cycles;
  size_t size() const { return cycles.size(); }
};

struct ResidualStats {
  size_t max_vertex_degree = 0;
  size_t max_face_degree = 0;
  // Connected components of the residual primal graph, isolated vertices
  // included.
  size_t components = 0;
};

ResidualStats family_residual(const TorusGraph& g, const std::vector<TopoCycle>& cycles);

// Throws overlap when two cycles share an edge, no_family when the cycles
// are not homologous or a residual degree exceeds 2.
CycleFamily make_family(const TorusGraph& g, std::vector<TopoCycle> cycles);

/// A cycle together with the vertices where it is two-sided.
struct Obstruction {
  std::vector<int> cycle;
  std::vector<int> vertices;
};

class NoFamilyError : public Error {
 public:
  NoFamilyError(const std::string& what, std::vector<Obstruction> obs)
      : Error(Errc::no_family, what), obstructions_(std::move(obs)) {}
  const std::vector<Obstruction>& obstructions() const { return obstructions_; }

 private:
  std::vector<Obstruction> obstructions_;
};

struct FamilySearchLimits {
  size_t max_cycle_length = 12;
  size_t max_candidates = 4000;
  size_t max_nodes = 200000;
};

// Translated seed on generated square (Lx == Ly) and triangular lattices,
// bounded backtracking otherwise. On failure throws NoFamilyError listing
// either a vertex-disjoint family that make_topological can complete (every
// two-sided vertex reported) or the cycle with fewest two-sided vertices.
CycleFamily find_family(const TorusGraph& g, const FamilySearchLimits& limits = {});

/// Bookkeeping for one vertex split. Old edge and dart ids are kept; the new
/// edge and its darts are appended.
struct SplitRecord {
  int vertex = -1;
  int new_vertex = -1;
  int new_edge = -1;
  std::vector<int> arc_kept, arc_moved;
};

struct SplitResult {
  TorusGraph graph;
  int new_edge = -1;
  SplitRecord record;
};

// Moves arc_moved to a new vertex joined to v by a new edge. Both arcs must
// be non-empty, contiguous in rotation order and together cover v; otherwise
// throws non_contiguous.
SplitResult split_vertex(const TorusGraph& g, int v, const std::vector<int>& arc_kept,
                         const std::vector<int>& arc_moved);

struct Cnot {
  size_t control, target;
  bool operator==(const Cnot& o) const { return control == o.control && target == o.target; }
};

struct Ancilla {
  size_t qubit;
  // Initial stabilizer, 'Z' (|0>) or 'X' (|+>).
  char basis;
};

struct ErResult {
  ToricCodeState state;
  std::vector<Cnot> cnots;
  std::vector<Ancilla> ancillas;
  std::vector<SplitRecord> splits;
  TopoCycle cycle;
};

/// Graph after splitting the obstruction vertices of one cycle, and the
/// lengthened cycle with each new edge placed after the vertex it came from.
struct SplitPlan {
  TorusGraph graph;
  std::vector<int> cycle;
  std::vector<SplitRecord> splits;
};

// Chooses for each obstruction which side keeps the incoming cycle dart so
// that the lengthened cycle is a dual cycle. Throws range (vertex not on the
// cycle or one-sided), odd_length or not_dual_cycle.
SplitPlan plan_splits(const TorusGraph& g, const std::vector<int>& cycle, const std::vector<int>& obstructions);

// Splits every obstruction vertex of `cycle` so that the cycle becomes
// topological, adding one ancilla qubit per split. Ancilla initialization
// (Z then X), CNOT arc (kept then moved) and orientation (ancilla as target
// then as control) are tried in that order and the first pattern whose
// output equals toric_code_state of the new graph is kept. For splits of
// lattices this is a |0> ancilla targeted by the kept edges.
ErResult make_topological(const ToricCodeState& state, const std::vector<int>& cycle,
                          const std::vector<int>& obstructions);

struct CompletedFamily {
  ToricCodeState before;
  std::vector<ErResult> steps;
  CycleFamily family;
  const ToricCodeState& state() const { return steps.empty() ? before : steps.back().state; }
};

// Runs make_topological for every obstruction cycle, starting from a toric
// code state on g with T_x on the first cycle and T_z on a dual cycle of g
// that becomes homologous to the split cycles.
CompletedFamily complete_family(const TorusGraph& g, const std::vector<Obstruction>& obstructions);

}  // namespace tcl

#endif
