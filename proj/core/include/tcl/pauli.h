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

#ifndef TCL_PAULI_H
#define TCL_PAULI_H

#include <string>
#include <string_view>
#include <vector>

#include "tcl/bits.h"

namespace tcl {

/// A signed Hermitian Pauli operator on n qubits.
///
/// The word (x, z, s) denotes s * prod_q P_q where P_q is X, Z or Y when only
/// x, only z, or both bits are set. Y is taken as i*X*Z, so as an operator
/// the word equals s * i^{|x&z|} * X^x * Z^z with all X factors to the left.
/// Products are computed from this normal form, which fixes every sign.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(size_t n) : x_(n), z_(n) {}
  PauliWord(BitVec x, BitVec z, bool negative = false);

  static PauliWord x_on(size_t n, const std::vector<size_t>& qubits);
  static PauliWord z_on(size_t n, const std::vector<size_t>& qubits);
  // Parses "+X1Y3Z4" (1-indexed, "-" for negative sign, "+I" for identity).
  static PauliWord parse(std::string_view text, size_t n);

  size_t n() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  bool negative() const { return neg_; }
  int sign() const { return neg_ ? -1 : 1; }
  bool has_identity_bits() const { return x_.none() && z_.none(); }
  char factor(size_t q) const;
  size_t weight() const { return (x_ | z_).popcount(); }
  BitVec support() const { return x_ | z_; }
  // (x|z) as one row of length 2n.
  BitVec row() const { return x_.concat(z_); }

  PauliWord negated() const;
  PauliWord with_sign(bool negative) const;
  void set_factor(size_t q, char p);

  std::string str() const;

  bool operator==(const PauliWord& o) const {
    return neg_ == o.neg_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator!=(const PauliWord& o) const { return !(*this == o); }

 private:
  BitVec x_, z_;
  bool neg_ = false;
};

// 0 when p and q commute, 1 when they anticommute.
bool symplectic_product(const PauliWord& p, const PauliWord& q);

// Exact product p*q = i^k * w where w carries sign p.sign*q.sign. Returns k
// in 0..3 and stores w.
unsigned multiply_phase(const PauliWord& p, const PauliWord& q, PauliWord* w);

// Product with real phase; throws Errc::phase when p*q is not Hermitian.
PauliWord pauli_multiply(const PauliWord& p, const PauliWord& q);

}  // namespace tcl

#endif
