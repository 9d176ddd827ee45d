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

#include "tcl/stabilizer.h"

#include <algorithm>
#include <numeric>

#include "tcl/error.h"

namespace tcl {

StabilizerGroup make_group(size_t n, std::vector<PauliWord> gens) {
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].n() != n) {
      throw Error(Errc::dimension, "generator " + std::to_string(i) + " has " +
                                       std::to_string(gens[i].n()) + " qubits, expected " +
                                       std::to_string(n));
    }
    if (gens[i].has_identity_bits()) {
      if (gens[i].negative()) throw Error(Errc::minus_identity, "generator " + std::to_string(i) + " is -I");
      throw Error(Errc::dependent, "generator " + std::to_string(i) + " is the identity");
    }
  }
  if (gens.size() > n) throw Error(Errc::dependent, "more generators than qubits");
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (symplectic_product(gens[i], gens[j])) {
        throw Error(Errc::anticommuting, "generators " + std::to_string(i) + " (" + gens[i].str() +
                                             ") and " + std::to_string(j) + " (" + gens[j].str() +
                                             ") anticommute");
      }
    }
  }
  RowBasis basis(2 * n, gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!basis.insert(gens[i].row())) {
      std::string dep;
      for (size_t k : basis.last_dependency()->ones()) dep += " " + std::to_string(k);
      throw Error(Errc::dependent, "generators {" + dep + " } multiply to +-I");
    }
  }
  StabilizerGroup g;
  g.n_ = n;
  g.gens_ = std::move(gens);
  return g;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::member_with_wrong_sign: return "member_with_wrong_sign";
    case Membership::not_member: return "not_member";
  }
  return "unknown";
}

GroupIndex::GroupIndex(const StabilizerGroup& g) : g_(g), basis_(2 * g.n(), g.size()) {
  for (const auto& w : g.generators()) basis_.insert(w.row());
}

std::optional<BitVec> GroupIndex::express(const PauliWord& p) const {
  if (p.n() != g_.n()) throw Error(Errc::dimension, "word length differs from group");
  return basis_.express(p.row());
}

PauliWord GroupIndex::product(const BitVec& combo) const {
  PauliWord acc(g_.n());
  for (size_t i : combo.ones()) acc = pauli_multiply(acc, g_[i]);
  return acc;
}

Membership GroupIndex::classify(const PauliWord& p) const {
  auto combo = express(p);
  if (!combo) return Membership::not_member;
  PauliWord w = product(*combo);
  return w.negative() == p.negative() ? Membership::member : Membership::member_with_wrong_sign;
}

Membership is_member(const StabilizerGroup& g, const PauliWord& p) {
  return GroupIndex(g).classify(p);
}

bool groups_equal(const StabilizerGroup& a, const StabilizerGroup& b) {
  if (a.n() != b.n()) throw Error(Errc::dimension, "groups on different qubit counts");
  if (a.size() != b.size()) return false;
  GroupIndex ib(b);
  for (const auto& w : a.generators()) {
    if (ib.classify(w) != Membership::member) return false;
  }
  return true;
}

PauliWord conjugate_by_cnot(const PauliWord& p, size_t c, size_t t) {
  if (c >= p.n() || t >= p.n()) throw Error(Errc::range, "cnot qubit out of range");
  if (c == t) throw Error(Errc::range, "cnot control equals target");
  // Conjugate factor by factor in the X-left normal form:
  // p = s i^{|x&z|} X^x Z^z and CNOT maps X_c -> X_c X_t, Z_t -> Z_c Z_t.
  size_t n = p.n();
  PauliWord xs(n), zs(n);
  for (size_t q : p.x().ones()) {
    PauliWord f = PauliWord::x_on(n, {q});
    if (q == c) f = PauliWord::x_on(n, {c, t});
    xs = pauli_multiply(xs, f);
  }
  for (size_t q : p.z().ones()) {
    PauliWord f = PauliWord::z_on(n, {q});
    if (q == t) f = PauliWord::z_on(n, {c, t});
    zs = pauli_multiply(zs, f);
  }
  // xs is pure X and zs pure Z, so X^a Z^b = i^{-|a&b|} * word.
  PauliWord w;
  unsigned k = multiply_phase(xs, zs, &w);
  k += static_cast<unsigned>(p.x().and_count(p.z()));
  k &= 3u;
  if (k & 1u) throw Error(Errc::phase, "cnot conjugation produced imaginary phase");
  bool neg = p.negative() != (k == 2);
  return w.with_sign(neg);
}

StabilizerGroup conjugate_by_cnot(const StabilizerGroup& g, size_t c, size_t t) {
  std::vector<PauliWord> out;
  out.reserve(g.size());
  for (const auto& w : g.generators()) out.push_back(conjugate_by_cnot(w, c, t));
  return make_group(g.n(), std::move(out));
}

namespace {

void check_region(const StabilizerGroup& g, const Region& a) {
  for (size_t q : a) {
    if (q >= g.n()) throw Error(Errc::range, "region qubit " + std::to_string(q) + " out of range");
  }
}

BitVec region_mask(size_t n, const Region& a) {
  BitVec m(n);
  for (size_t q : a) m.set(q);
  return m;
}

}  // namespace

size_t entanglement_entropy(const StabilizerGroup& g, const Region& a) {
  if (!g.is_state()) throw Error(Errc::not_state_group, "entropy needs n generators");
  check_region(g, a);
  size_t n = g.n();
  BitVec in_a = region_mask(n, a);
  BitVec out = in_a;
  for (size_t q = 0; q < n; ++q) out.flip(q);
  std::vector<size_t> keep = out.ones();
  RowBasis basis(2 * keep.size(), g.size());
  for (const auto& w : g.generators()) {
    BitVec r(2 * keep.size());
    for (size_t k = 0; k < keep.size(); ++k) {
      r.set(k, w.x().get(keep[k]));
      r.set(keep.size() + k, w.z().get(keep[k]));
    }
    basis.insert(r);
  }
  size_t size_a = in_a.popcount();
  // |A| - dim(S_A) with dim(S_A) = n - rank(projection onto complement).
  return size_a - (n - basis.rank());
}

size_t mutual_information(const StabilizerGroup& g, const Region& a, const Region& b) {
  check_region(g, a);
  check_region(g, b);
  BitVec ma = region_mask(g.n(), a), mb = region_mask(g.n(), b);
  if ((ma & mb).any()) throw Error(Errc::overlap, "regions overlap");
  Region ab = (ma | mb).ones();
  return entanglement_entropy(g, a) + entanglement_entropy(g, b) - entanglement_entropy(g, ab);
}

std::vector<SupportComponent> support_components(const StabilizerGroup& g) {
  size_t n = g.n();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(n, false);
  for (const auto& w : g.generators()) {
    auto sup = w.support().ones();
    for (size_t q : sup) touched[q] = true;
    for (size_t k = 1; k < sup.size(); ++k) {
      size_t a = find(sup[0]), b = find(sup[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<long> slot(n, -1);
  std::vector<SupportComponent> comps;
  for (size_t q = 0; q < n; ++q) {
    size_t r = find(q);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].qubits.push_back(q);
  }
  for (size_t i = 0; i < g.size(); ++i) {
    size_t q = g[i].support().next(0);
    comps[slot[find(q)]].generators.push_back(i);
  }
  for (size_t q = 0; q < n; ++q) {
    if (!touched[q]) comps[slot[find(q)]].free = true;
  }
  return comps;
}

PauliWord embed_word(const PauliWord& p, size_t n, const std::vector<size_t>& qubits) {
  BitVec x(n), z(n);
  for (size_t k = 0; k < qubits.size(); ++k) {
    x.set(qubits[k], p.x().get(k));
    z.set(qubits[k], p.z().get(k));
  }
  return PauliWord(std::move(x), std::move(z), p.negative());
}

PauliWord restrict_word(const PauliWord& p, const std::vector<size_t>& qubits) {
  size_t m = qubits.size();
  BitVec x(m), z(m);
  BitVec seen(p.n());
  for (size_t k = 0; k < m; ++k) {
    x.set(k, p.x().get(qubits[k]));
    z.set(k, p.z().get(qubits[k]));
    seen.set(qubits[k]);
  }
  if (p.support().and_count(seen) != p.weight()) throw Error(Errc::range, "word not supported inside region");
  return PauliWord(std::move(x), std::move(z), p.negative());
}

StabilizerGroup restrict_group(const StabilizerGroup& g, const SupportComponent& c) {
  std::vector<PauliWord> gens;
  for (size_t i : c.generators) gens.push_back(restrict_word(g[i], c.qubits));
  return make_group(c.qubits.size(), std::move(gens));
}

}  // namespace tcl
