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

#ifndef TCL_STABILIZER_H
#define TCL_STABILIZER_H

#include <vector>

#include "tcl/gf2.h"
#include "tcl/pauli.h"

namespace tcl {

/// Independent, pairwise commuting signed generators. Construct through
/// make_group, which validates.
class StabilizerGroup {
 public:
  StabilizerGroup() = default;

  size_t n() const { return n_; }
  size_t size() const { return gens_.size(); }
  const std::vector<PauliWord>& generators() const { return gens_; }
  const PauliWord& operator[](size_t i) const { return gens_[i]; }
  bool is_state() const { return gens_.size() == n_; }

 private:
  friend StabilizerGroup make_group(size_t n, std::vector<PauliWord> gens);
  size_t n_ = 0;
  std::vector<PauliWord> gens_;
};

// Throws Error with anticommuting / dependent / minus_identity / dimension.
StabilizerGroup make_group(size_t n, std::vector<PauliWord> gens);

enum class Membership { member, member_with_wrong_sign, not_member };
const char* membership_name(Membership m);

/// Precomputed elimination over a group's generator rows for repeated
/// membership queries.
class GroupIndex {
 public:
  explicit GroupIndex(const StabilizerGroup& g);
  Membership classify(const PauliWord& p) const;
  // Generator combination producing p's bits, if any.
  std::optional<BitVec> express(const PauliWord& p) const;
  // Ordered product of the selected generators.
  PauliWord product(const BitVec& combo) const;

 private:
  StabilizerGroup g_;
  RowBasis basis_;
};

Membership is_member(const StabilizerGroup& g, const PauliWord& p);
bool groups_equal(const StabilizerGroup& a, const StabilizerGroup& b);

PauliWord conjugate_by_cnot(const PauliWord& p, size_t control, size_t target);
StabilizerGroup conjugate_by_cnot(const StabilizerGroup& g, size_t control, size_t target);

using Region = std::vector<size_t>;

// Entropy of the reduced state on A, in bits. Requires a state group.
size_t entanglement_entropy(const StabilizerGroup& g, const Region& a);
// S_A + S_B - S_AB for disjoint A, B.
size_t mutual_information(const StabilizerGroup& g, const Region& a, const Region& b);

struct SupportComponent {
  std::vector<size_t> qubits;
  std::vector<size_t> generators;
  // Qubit touched by no generator at all.
  bool free = false;
};

// Connected components of the generator/qubit incidence graph, ordered by
// lowest qubit.
std::vector<SupportComponent> support_components(const StabilizerGroup& g);

// Generators of one component re-indexed onto its qubit list.
StabilizerGroup restrict_group(const StabilizerGroup& g, const SupportComponent& c);

// Word on `n` qubits from a word on qubits.size() qubits, placing local
// qubit k at qubits[k].
PauliWord embed_word(const PauliWord& p, size_t n, const std::vector<size_t>& qubits);
// Inverse of embed_word; the word must be supported inside `qubits`.
PauliWord restrict_word(const PauliWord& p, const std::vector<size_t>& qubits);

}  // namespace tcl

#endif
