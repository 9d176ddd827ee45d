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

#include "tcl/dense.h"

#include <bit>
#include <cmath>
#include <numeric>

#include "tcl/error.h"

namespace tcl {

namespace {

uint64_t low_mask(const BitVec& b) { return b.words().empty() ? 0 : b.words()[0]; }

Gi times_unit(Gi a, unsigned k) {
  switch (k & 3u) {
    case 0: return a;
    case 1: return {-a.im, a.re};
    case 2: return {-a.re, -a.im};
    default: return {a.im, -a.re};
  }
}

// Lowest basis index consistent with every Z-only member of g.
uint64_t seed_index(const StabilizerGroup& g) {
  size_t n = g.n(), m = g.size();
  RowBasis xb(n, m);
  std::vector<BitVec> combos;
  for (const auto& w : g.generators()) {
    if (!xb.insert(w.x())) combos.push_back(*xb.last_dependency());
  }
  GroupIndex idx(g);
  // Rows (z | rhs) of z.b = [sign < 0].
  std::vector<BitVec> rows;
  for (const auto& c : combos) {
    PauliWord zw = idx.product(c);
    BitVec r(n + 1);
    for (size_t q : zw.z().ones()) r.set(q);
    r.set(n, zw.negative());
    rows.push_back(r);
  }
  // Eliminate with the lowest column of each row as pivot; free variables
  // are zero, which minimises the index since every pivot only depends on
  // higher columns.
  std::vector<std::pair<size_t, BitVec>> piv;
  for (auto r : rows) {
    for (auto& [p, v] : piv) {
      if (r.get(p)) r ^= v;
    }
    size_t p = r.next(0);
    if (p >= n) {
      if (p == n) throw Error(Errc::verification, "inconsistent Z constraints");
      continue;
    }
    for (auto& [q, v] : piv) {
      if (v.get(p)) v ^= r;
    }
    piv.emplace_back(p, r);
  }
  // Resolve from the highest pivot down.
  std::sort(piv.begin(), piv.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  uint64_t b = 0;
  for (auto& [p, v] : piv) {
    bool val = v.get(n);
    for (size_t q = v.next(p + 1); q < n; q = v.next(q + 1)) val ^= (b >> q) & 1u;
    if (val) b |= uint64_t{1} << p;
  }
  return b;
}

}  // namespace

void apply_pauli(const PauliWord& p, std::vector<Gi>& v) {
  uint64_t x = low_mask(p.x()), z = low_mask(p.z());
  unsigned k = static_cast<unsigned>(std::popcount(x & z)) + (p.negative() ? 2u : 0u);
  std::vector<Gi> out(v.size());
  for (uint64_t b = 0; b < v.size(); ++b) {
    if (v[b].zero()) continue;
    unsigned kb = k + ((std::popcount(z & b) & 1) ? 2u : 0u);
    out[b ^ x] = times_unit(v[b], kb);
  }
  v.swap(out);
}

void reduce_common_factor(std::vector<Gi>& v) {
  int64_t g = 0;
  for (const auto& a : v) {
    g = std::gcd(g, a.re < 0 ? -a.re : a.re);
    g = std::gcd(g, a.im < 0 ? -a.im : a.im);
  }
  if (g <= 1) return;
  for (auto& a : v) {
    a.re /= g;
    a.im /= g;
  }
}

DenseState dense_statevector(const StabilizerGroup& g) {
  if (g.n() > kDenseMaxQubits) throw Error(Errc::too_large, "dense oracle limited to 20 qubits");
  if (!g.is_state()) throw Error(Errc::not_state_group, "dense oracle needs n generators");
  DenseState s;
  s.n = g.n();
  s.amp.assign(size_t{1} << g.n(), Gi{});
  s.amp[seed_index(g)] = Gi{1, 0};
  for (const auto& w : g.generators()) {
    std::vector<Gi> gv = s.amp;
    apply_pauli(w, gv);
    for (size_t b = 0; b < gv.size(); ++b) {
      s.amp[b].re += gv[b].re;
      s.amp[b].im += gv[b].im;
    }
    reduce_common_factor(s.amp);
  }
  bool any = false;
  for (const auto& a : s.amp) any = any || !a.zero();
  if (!any) throw Error(Errc::verification, "projection annihilated the seed state");
  return s;
}

std::vector<std::complex<double>> DenseState::normalized() const {
  double norm = 0;
  for (const auto& a : amp) norm += double(a.re) * double(a.re) + double(a.im) * double(a.im);
  norm = std::sqrt(norm);
  std::vector<std::complex<double>> out(amp.size());
  for (size_t b = 0; b < amp.size(); ++b) out[b] = {amp[b].re / norm, amp[b].im / norm};
  return out;
}

size_t DenseState::support_size() const {
  size_t c = 0;
  for (const auto& a : amp) c += !a.zero();
  return c;
}

bool same_ray(const DenseState& a, const DenseState& b, unsigned* unit) {
  if (a.n != b.n || a.amp.size() != b.amp.size()) return false;
  std::vector<Gi> va = a.amp, vb = b.amp;
  reduce_common_factor(va);
  reduce_common_factor(vb);
  size_t i0 = 0;
  while (i0 < va.size() && va[i0].zero()) ++i0;
  if (i0 == va.size() || vb[i0].zero()) return false;
  using W = __int128;
  Gi a0 = va[i0], b0 = vb[i0];
  for (size_t i = 0; i < va.size(); ++i) {
    // va[i] * b0 == vb[i] * a0
    W lr = W(va[i].re) * b0.re - W(va[i].im) * b0.im;
    W li = W(va[i].re) * b0.im + W(va[i].im) * b0.re;
    W rr = W(vb[i].re) * a0.re - W(vb[i].im) * a0.im;
    W ri = W(vb[i].re) * a0.im + W(vb[i].im) * a0.re;
    if (lr != rr || li != ri) return false;
  }
  // b0 * conj(a0) must be a positive multiple of a unit.
  W pr = W(b0.re) * a0.re + W(b0.im) * a0.im;
  W pi = W(b0.im) * a0.re - W(b0.re) * a0.im;
  unsigned k;
  if (pi == 0 && pr > 0) {
    k = 0;
  } else if (pr == 0 && pi > 0) {
    k = 1;
  } else if (pi == 0 && pr < 0) {
    k = 2;
  } else if (pr == 0 && pi < 0) {
    k = 3;
  } else {
    return false;
  }
  if (unit) *unit = k;
  return true;
}

DenseState tensor_embed(size_t n, const std::vector<std::pair<DenseState, std::vector<size_t>>>& parts) {
  if (n > kDenseMaxQubits) throw Error(Errc::too_large, "dense oracle limited to 20 qubits");
  DenseState s;
  s.n = n;
  s.amp.assign(size_t{1} << n, Gi{});
  s.amp[0] = Gi{1, 0};
  size_t placed = 0;
  for (const auto& [part, qubits] : parts) {
    if (qubits.size() != part.n) throw Error(Errc::dimension, "tensor part qubit list mismatch");
    std::vector<Gi> out(s.amp.size());
    for (uint64_t b = 0; b < s.amp.size(); ++b) {
      if (s.amp[b].zero()) continue;
      for (uint64_t l = 0; l < part.amp.size(); ++l) {
        const Gi& c = part.amp[l];
        if (c.zero()) continue;
        uint64_t idx = b;
        for (size_t k = 0; k < qubits.size(); ++k) {
          if ((l >> k) & 1u) idx |= uint64_t{1} << qubits[k];
        }
        Gi x = s.amp[b];
        out[idx] = Gi{x.re * c.re - x.im * c.im, x.re * c.im + x.im * c.re};
      }
    }
    s.amp.swap(out);
    reduce_common_factor(s.amp);
    placed += qubits.size();
  }
  if (placed != n) throw Error(Errc::dimension, "tensor parts do not cover all qubits");
  return s;
}

}  // namespace tcl
