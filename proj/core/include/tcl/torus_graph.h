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

#ifndef TCL_TORUS_GRAPH_H
#define TCL_TORUS_GRAPH_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcl/bits.h"

namespace tcl {

/// Coordinates and generator parameters attached to generated lattices.
struct Legend {
  std::string kind;
  size_t lx = 0, ly = 0;
  std::vector<std::array<double, 2>> coords;
};

/// Graph embedded in the torus, stored as a combinatorial map.
///
/// Darts come in pairs d, alpha(d) forming one edge; sigma(d) is the next
/// dart counterclockwise around vertex_of(d). Faces are the orbits of
/// phi = sigma o alpha, i.e. phi(d) = sigma(alpha(d)): walk along d, then
/// turn to the next dart counterclockwise from the way back. Faces are
/// numbered by their lowest dart and each orbit is stored starting there.
class TorusGraph {
 public:
  TorusGraph() = default;
  // Validates and derives faces. Throws not_involution, malformed,
  // not_torus or disconnected.
  TorusGraph(std::vector<int> alpha, std::vector<int> sigma, std::vector<int> vertex_of,
             std::vector<int> edge_of, std::optional<Legend> legend = std::nullopt);

  size_t num_darts() const { return alpha_.size(); }
  size_t num_edges() const { return alpha_.size() / 2; }
  size_t num_vertices() const { return vertex_darts_.size(); }
  size_t num_faces() const { return faces_.size(); }

  int alpha(int d) const { return alpha_[d]; }
  int sigma(int d) const { return sigma_[d]; }
  int phi(int d) const { return sigma_[alpha_[d]]; }
  int vertex_of(int d) const { return vertex_of_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }
  int face_of(int d) const { return face_of_[d]; }
  // Other endpoint when leaving along d.
  int head(int d) const { return vertex_of_[alpha_[d]]; }

  // Darts at v in counterclockwise order starting at the lowest one.
  const std::vector<int>& darts_at(int v) const { return vertex_darts_[v]; }
  // Darts of face f in walk order.
  const std::vector<int>& face(int f) const { return faces_[f]; }
  // The two darts of edge e, lower first.
  std::array<int, 2> edge_darts(int e) const { return edge_darts_[e]; }
  size_t degree(int v) const { return vertex_darts_[v].size(); }

  // Edge sets of one vertex star / one face boundary (edges met twice cancel).
  BitVec vertex_star(int v) const;
  BitVec face_boundary(int f) const;

  const std::vector<int>& alpha_array() const { return alpha_; }
  const std::vector<int>& sigma_array() const { return sigma_; }
  const std::vector<int>& vertex_array() const { return vertex_of_; }
  const std::vector<int>& edge_array() const { return edge_of_; }
  const std::optional<Legend>& legend() const { return legend_; }

  bool operator==(const TorusGraph& o) const;

 private:
  std::vector<int> alpha_, sigma_, vertex_of_, edge_of_, face_of_;
  std::vector<std::vector<int>> vertex_darts_, faces_;
  std::vector<std::array<int, 2>> edge_darts_;
  std::optional<Legend> legend_;
};

enum class LatticeKind { square, triangular, kagome, square_octagon };
std::optional<LatticeKind> lattice_kind_from_string(const std::string& s);
const char* lattice_kind_name(LatticeKind k);

// Periodic lattice on an lx by ly torus; see lattices.cpp for numbering.
TorusGraph build_lattice(LatticeKind kind, size_t lx, size_t ly);

// Small square or triangular lattice (2..4 cells a side) thinned by random
// deletions of edges between distinct faces and roughened by random edge
// subdivisions. Same seed, same graph. No legend.
TorusGraph random_embedding(uint64_t seed);

// Faces become vertices; darts, alpha and edge ids are kept.
TorusGraph dual_graph(const TorusGraph& g);

bool is_cycle(const TorusGraph& g, const BitVec& s);
bool is_dual_cycle(const TorusGraph& g, const BitVec& s);
// S must be a cycle; true iff it is a sum of face boundaries.
bool is_contractible(const TorusGraph& g, const BitVec& s);
// S must be a dual cycle; true iff it is a sum of vertex stars.
bool is_dual_contractible(const TorusGraph& g, const BitVec& s);

// Fundamental cycles of the BFS tree rooted at vertex 0, as ordered edge
// walks, one per non-tree edge in increasing edge id.
std::vector<std::vector<int>> fundamental_cycles(const TorusGraph& g);
std::vector<std::vector<int>> fundamental_dual_cycles(const TorusGraph& g);

BitVec edge_set(size_t num_edges, const std::vector<int>& edges);

/// Two independent non-contractible cycles with dual partners used to read
/// off Z2 coordinates by intersection parity.
class HomologyBasis {
 public:
  // Throws invalid_basis if either cycle is contractible or their sum is.
  HomologyBasis(const TorusGraph& g, const BitVec& c1, const BitVec& c2);
  std::array<bool, 2> classify(const BitVec& s) const;
  const std::array<BitVec, 2>& dual_partners() const { return partners_; }

 private:
  const TorusGraph* g_;
  std::array<BitVec, 2> partners_;
  // Inverse of the 2x2 intersection matrix.
  std::array<std::array<bool, 2>, 2> inv_;
};

std::array<bool, 2> homology_class(const TorusGraph& g, const BitVec& s, const BitVec& c1, const BitVec& c2);

// True when a xor b is contractible (a, b cycles).
bool homologous(const TorusGraph& g, const BitVec& a, const BitVec& b);

}  // namespace tcl

#endif
