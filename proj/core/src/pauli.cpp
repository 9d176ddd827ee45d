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

#include "tcl/pauli.h"

#include <cctype>

#include "tcl/error.h"

namespace tcl {

PauliWord::PauliWord(BitVec x, BitVec z, bool negative)
    : x_(std::move(x)), z_(std::move(z)), neg_(negative) {
  if (x_.size() != z_.size()) throw Error(Errc::dimension, "x and z lengths differ");
}

PauliWord PauliWord::x_on(size_t n, const std::vector<size_t>& qubits) {
  return PauliWord(BitVec::from_indices(n, qubits), BitVec(n));
}

PauliWord PauliWord::z_on(size_t n, const std::vector<size_t>& qubits) {
  return PauliWord(BitVec(n), BitVec::from_indices(n, qubits));
}

PauliWord PauliWord::parse(std::string_view text, size_t n) {
  auto bad = [&](const char* why) {
    return Error(Errc::malformed, std::string(why) + " in pauli string '" + std::string(text) + "'");
  };
  if (text.empty() || (text[0] != '+' && text[0] != '-')) throw bad("missing sign");
  PauliWord w(n);
  w.neg_ = text[0] == '-';
  std::string_view rest = text.substr(1);
  if (rest == "I") return w;
  if (rest.empty()) throw bad("no factors");
  size_t i = 0;
  while (i < rest.size()) {
    char p = rest[i++];
    if (p != 'X' && p != 'Y' && p != 'Z') throw bad("unknown factor");
    size_t q = 0, digits = 0;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
      q = q * 10 + static_cast<size_t>(rest[i++] - '0');
      ++digits;
      if (q > (size_t{1} << 40)) throw bad("index overflow");
    }
    if (digits == 0 || q == 0) throw bad("bad qubit index");
    if (q > n) throw Error(Errc::range, "qubit " + std::to_string(q) + " beyond n=" + std::to_string(n));
    if (w.x_.get(q - 1) || w.z_.get(q - 1)) throw bad("repeated qubit");
    w.set_factor(q - 1, p);
  }
  return w;
}

char PauliWord::factor(size_t q) const {
  bool a = x_.get(q), b = z_.get(q);
  return a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
}

void PauliWord::set_factor(size_t q, char p) {
  x_.set(q, p == 'X' || p == 'Y');
  z_.set(q, p == 'Z' || p == 'Y');
}

PauliWord PauliWord::negated() const { return with_sign(!neg_); }

PauliWord PauliWord::with_sign(bool negative) const {
  PauliWord w = *this;
  w.neg_ = negative;
  return w;
}

std::string PauliWord::str() const {
  std::string s(1, neg_ ? '-' : '+');
  BitVec sup = support();
  if (sup.none()) return s + "I";
  for (size_t q : sup.ones()) {
    s += factor(q);
    s += std::to_string(q + 1);
  }
  return s;
}

bool symplectic_product(const PauliWord& p, const PauliWord& q) {
  if (p.n() != q.n()) throw Error(Errc::dimension, "symplectic product of different lengths");
  return (p.x().and_count(q.z()) + p.z().and_count(q.x())) & 1u;
}

unsigned multiply_phase(const PauliWord& p, const PauliWord& q, PauliWord* w) {
  if (p.n() != q.n()) throw Error(Errc::dimension, "product of different lengths");
  // (i^a X^xp Z^zp)(i^b X^xq Z^zq) = i^{a+b} (-1)^{zp.xq} X^x Z^z and
  // X^x Z^z = i^{-|x&z|} * (word with Y's).
  BitVec x = p.x() ^ q.x();
  BitVec z = p.z() ^ q.z();
  size_t k = p.x().and_count(p.z()) + q.x().and_count(q.z()) + 2 * p.z().and_count(q.x());
  k += 4 * x.size() - x.and_count(z);
  *w = PauliWord(std::move(x), std::move(z), p.negative() != q.negative());
  return static_cast<unsigned>(k & 3u);
}

PauliWord pauli_multiply(const PauliWord& p, const PauliWord& q) {
  PauliWord w;
  unsigned k = multiply_phase(p, q, &w);
  if (k & 1u) throw Error(Errc::phase, "imaginary product " + p.str() + " * " + q.str());
  return k == 2 ? w.negated() : w;
}

}  // namespace tcl
