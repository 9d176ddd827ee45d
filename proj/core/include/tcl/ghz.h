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

#ifndef TCL_GHZ_H
#define TCL_GHZ_H

#include <optional>
#include <vector>

#include "tcl/topo_cycles.h"

namespace tcl {

enum class Color { green, blue };
const char* color_name(Color c);

/// GHZ basis on one topological cycle.
///
/// Physical qubit i (1-based) is edge e_i. GHZ qubit m_i lives at vertex
/// v_i between e_i and e_{i+1} and reuses the slot of e_i. The basis state
/// |m> is sent to the joint eigenstate of g_i = Z_i Z_{i+1} (i < N) and
/// g_N = Z_N Z_1 X_1...X_N with eigenvalues (-1)^{m_i}, obtained by
/// projecting |+...+0>. Colors follow the side of v_i, up being green.
struct GhzChain {
  TopoCycle cycle;
  std::vector<size_t> slots;
  std::vector<Color> colors;

  size_t length() const { return slots.size(); }
  // g_1..g_N as words on n qubits.
  std::vector<PauliWord> stabilizers(size_t n) const;
  // Z on the given 0-based GHZ indices.
  PauliWord zbar(size_t n, const std::vector<size_t>& idx) const;
  PauliWord zbar_all(size_t n) const;
  // Z-bar on odd (1-based) or even GHZ indices.
  PauliWord zbar_parity(size_t n, bool even) const;
};

GhzChain make_chain(const TopoCycle& c);

// Literal rewrite: multiply by tx when P has X on qubit N, write the chain
// Z part through g_1..g_{N-1}, substitute X_j -> Xb_{j-1} Xb_j and
// g_i -> Zb_i. Throws odd_z_weight when the chain Z part has odd weight.
PauliWord rewrite_generator(const PauliWord& p, const GhzChain& chain, const PauliWord& tx);

// Exact conjugation U^dagger P U for the chain's basis change.
PauliWord image_exact(const PauliWord& p, const GhzChain& chain);

/// Physical-to-GHZ relabeling. Qubits not listed keep their slot.
struct Relabeling {
  struct Entry {
    size_t chain, index, slot;
    int vertex;
    Color color;
  };
  size_t n = 0;
  std::vector<Entry> ghz;
};

struct ComponentReport {
  std::vector<size_t> qubits;
  std::vector<size_t> generators;
  // Generated-from-geometry ladder reference equals the component group.
  bool reference_equal = false;
  // Qubit slots in ladder_group order t(0..r-1), b(0..r-1), r(0..r-1) when
  // the component has that shape and an alignment was found.
  std::optional<std::vector<size_t>> ladder_bijection;
  bool ladder_shape = false;
  size_t max_cut_entropy = 0;
  bool has_tz = false;
};

struct DisentangleReport {
  size_t num_qubits = 0;
  size_t family_size = 0;
  // The ladder_group alignment is only required on generated lattices.
  bool generated_lattice = false;
  std::vector<ComponentReport> components;
  std::vector<std::vector<size_t>> mutual_information;
  std::vector<std::vector<size_t>> preimage_mutual_information;
  bool commutation_preserved = false;
  bool rank_preserved = false;
  bool signs_ok = false;
  bool image_identities = false;
  bool color_split = false;
  bool oracle_run = false;
  bool oracle_verified = false;
  Relabeling relabeling;

  // Named pass/fail checks in a fixed order.
  std::vector<std::pair<std::string, bool>> verdicts() const;
  bool ok() const;
};

inline constexpr size_t kMaxLadderCutEntropy = 2;

struct DisentangleResult {
  StabilizerGroup group;
  std::vector<GhzChain> chains;
  Relabeling relabeling;
  DisentangleReport report;
};

struct VerifyOptions {
  // Group before the basis change; enables the preimage mutual information.
  const StabilizerGroup* input = nullptr;
  // Dense statevector checks; throws too_large above kDenseMaxQubits.
  bool oracle = false;
};

// Throws verification when a chain's X or Z string is not in the group,
// and any group validation error of the rewritten generators.
DisentangleResult disentangle(const ToricCodeState& state, const CycleFamily& family, bool oracle = false);

// Fills everything except the fields about the rewrite itself
// (commutation, rank, signs, identities, color split).
DisentangleReport verify_ladders(const TorusGraph& g, const StabilizerGroup& out, const CycleFamily& family,
                                 const Relabeling& relabeling, const VerifyOptions& opts = {});

}  // namespace tcl

#endif
