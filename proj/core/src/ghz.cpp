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

#include "tcl/ghz.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "tcl/dense.h"

namespace tcl {

namespace {

// Folds words left to right, tracking the power of i.
class PhaseProduct {
 public:
  PhaseProduct(size_t n, bool negative, unsigned k) : acc_(BitVec(n), BitVec(n), negative), k_(k % 4) {}
  void mul(const PauliWord& w) {
    PauliWord out;
    k_ = (k_ + multiply_phase(acc_, w, &out)) % 4;
    acc_ = std::move(out);
  }
  PauliWord result() const {
    if (k_ % 2) throw Error(Errc::phase, "image is not Hermitian");
    return k_ == 2 ? acc_.negated() : acc_;
  }

 private:
  PauliWord acc_;
  unsigned k_;
};

BitVec chain_bits(const BitVec& b, const GhzChain& c) {
  BitVec r(c.length());
  for (size_t i = 0; i < c.length(); ++i) r.set(i, b.get(c.slots[i]));
  return r;
}

PauliWord x_word(size_t n, const BitVec& x) { return PauliWord(x, BitVec(n)); }
PauliWord z_word(size_t n, const BitVec& z) { return PauliWord(BitVec(n), z); }

}  // namespace

const char* color_name(Color c) { return c == Color::green ? "green" : "blue"; }

GhzChain make_chain(const TopoCycle& c) {
  GhzChain g;
  g.cycle = c;
  for (size_t i = 0; i < c.length(); ++i) {
    g.slots.push_back(static_cast<size_t>(c.edges[i]));
    g.colors.push_back(c.sides[i] == Side::up ? Color::green : Color::blue);
  }
  return g;
}

std::vector<PauliWord> GhzChain::stabilizers(size_t n) const {
  const size_t N = length();
  std::vector<PauliWord> g;
  for (size_t i = 0; i + 1 < N; ++i) g.push_back(PauliWord::z_on(n, {slots[i], slots[i + 1]}));
  g.push_back(pauli_multiply(PauliWord::z_on(n, {slots[N - 1], slots[0]}), PauliWord::x_on(n, slots)));
  return g;
}

PauliWord GhzChain::zbar(size_t n, const std::vector<size_t>& idx) const {
  BitVec z(n);
  for (size_t i : idx) z.flip(slots[i]);
  return z_word(n, z);
}

PauliWord GhzChain::zbar_all(size_t n) const { return PauliWord::z_on(n, slots); }

PauliWord GhzChain::zbar_parity(size_t n, bool even) const {
  std::vector<size_t> idx;
  // 1-based index i+1 is even when i is odd.
  for (size_t i = even ? 1 : 0; i < length(); i += 2) idx.push_back(i);
  return zbar(n, idx);
}

PauliWord image_exact(const PauliWord& p, const GhzChain& chain) {
  const size_t n = p.n(), N = chain.length();
  BitVec xc = chain_bits(p.x(), chain), zc = chain_bits(p.z(), chain);
  if (xc.none() && zc.none()) return p;
  if (zc.popcount() % 2) throw Error(Errc::odd_z_weight, "chain Z part has odd weight");

  BitVec xo = p.x(), zo = p.z();
  for (size_t s : chain.slots) {
    xo.set(s, false);
    zo.set(s, false);
  }
  // p = s i^k Xc Zc Xo Zo, since Xo and Zc act on different qubits.
  PhaseProduct out(n, p.negative(), static_cast<unsigned>(p.x().and_count(p.z())));
  if (xc.get(N - 1)) {
    // X_N = X_1...X_N * X_1...X_{N-1}, and X_1...X_N = g_1...g_N.
    out.mul(chain.zbar_all(n));
    for (size_t j = 0; j < N; ++j) xc.flip(j);
  }
  BitVec xb(n);
  for (size_t j : xc.ones()) {
    xb.flip(chain.slots[(j + N - 1) % N]);
    xb.flip(chain.slots[j]);
  }
  out.mul(x_word(n, xb));
  // Z part as prod g_i^{c_i}, i < N, with c_i the prefix parity.
  BitVec zb(n);
  bool c = false;
  for (size_t i = 0; i + 1 < N; ++i) {
    c ^= zc.get(i);
    if (c) zb.flip(chain.slots[i]);
  }
  out.mul(z_word(n, zb));
  out.mul(x_word(n, xo));
  out.mul(z_word(n, zo));
  return out.result();
}

PauliWord rewrite_generator(const PauliWord& p, const GhzChain& chain, const PauliWord& tx) {
  PauliWord q = p;
  if (q.x().get(chain.slots.back())) q = pauli_multiply(q, tx);
  if (q.x().get(chain.slots.back())) throw Error(Errc::range, "T_x does not cover the last chain qubit");
  return image_exact(q, chain);
}

std::vector<std::pair<std::string, bool>> DisentangleReport::verdicts() const {
  auto all = [this](auto pred) { return std::all_of(components.begin(), components.end(), pred); };
  bool mi_zero = true;
  for (const auto& row : mutual_information) {
    for (size_t v : row) mi_zero = mi_zero && v == 0;
  }
  std::vector<std::pair<std::string, bool>> v{
      {"component_count", components.size() == family_size},
      {"ladder_reference", all([](const ComponentReport& c) { return c.reference_equal; })},
      {"ladder_bijection",
       !generated_lattice || all([](const ComponentReport& c) { return !c.ladder_shape || c.ladder_bijection; })},
      {"cut_entropy", all([](const ComponentReport& c) { return c.max_cut_entropy <= kMaxLadderCutEntropy; })},
      {"tz_string", all([](const ComponentReport& c) { return c.has_tz; })},
      {"mutual_information_zero", mi_zero},
      {"commutation_preserved", commutation_preserved},
      {"rank_preserved", rank_preserved},
      {"signs_ok", signs_ok},
      {"image_identities", image_identities},
      {"color_split", color_split},
  };
  if (oracle_run) v.emplace_back("oracle", oracle_verified);
  return v;
}

bool DisentangleReport::ok() const {
  for (const auto& [name, pass] : verdicts()) {
    if (!pass) return false;
  }
  return true;
}

namespace {

struct Layout {
  std::vector<GhzChain> chains;
  BitVec family_edges;
  // (chain, index) of the GHZ qubit at each slot, when there is one.
  std::vector<std::optional<std::pair<size_t, size_t>>> ghz_at_slot;
};

Layout make_layout(const TorusGraph& g, const CycleFamily& family) {
  Layout l;
  l.family_edges = BitVec(g.num_edges());
  l.ghz_at_slot.resize(g.num_edges());
  for (size_t k = 0; k < family.size(); ++k) {
    l.chains.push_back(make_chain(family.cycles[k]));
    l.family_edges |= family.cycles[k].edge_set;
    for (size_t i = 0; i < l.chains[k].length(); ++i) l.ghz_at_slot[l.chains[k].slots[i]] = {{k, i}};
  }
  return l;
}

// Images of vertex and face operators written with local representatives,
// plus one-color Z strings of every chain.
std::vector<PauliWord> reference_words(const TorusGraph& g, const Layout& l) {
  const size_t n = g.num_edges();
  std::vector<PauliWord> out;
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    BitVec z(n);
    for (int d : g.darts_at(static_cast<int>(v))) {
      if (!l.family_edges.get(g.edge_of(d))) z.flip(g.edge_of(d));
    }
    for (const auto& c : l.chains) {
      for (size_t i = 0; i < c.length(); ++i) {
        if (c.cycle.vertices[i] == static_cast<int>(v)) z.flip(c.slots[i]);
      }
    }
    out.push_back(z_word(n, z));
  }
  for (size_t f = 0; f < g.num_faces(); ++f) {
    BitVec in_face = g.face_boundary(static_cast<int>(f));
    BitVec x(n);
    for (size_t e : in_face.ones()) {
      if (!l.family_edges.get(e)) x.flip(e);
    }
    for (const auto& c : l.chains) {
      const size_t N = c.length();
      for (size_t a = 0; a < N; ++a) {
        if (!in_face.get(c.slots[a]) || in_face.get(c.slots[(a + N - 1) % N])) continue;
        size_t b = a;
        while (in_face.get(c.slots[(b + 1) % N])) b = (b + 1) % N;
        x.flip(c.slots[(a + N - 1) % N]);
        x.flip(c.slots[b]);
      }
    }
    out.push_back(x_word(n, x));
  }
  for (const auto& c : l.chains) {
    for (Color col : {Color::green, Color::blue}) {
      std::vector<size_t> idx;
      for (size_t i = 0; i < c.length(); ++i) {
        if (c.colors[i] == col) idx.push_back(i);
      }
      if (!idx.empty()) out.push_back(c.zbar(n, idx));
    }
  }
  return out;
}

bool inside(const PauliWord& w, const BitVec& region) { return w.support().and_count(region) == w.weight(); }

// Off-family edges of a component, in walk order along the residual graph.
std::vector<size_t> residual_order(const TorusGraph& g, std::vector<size_t> edges) {
  std::sort(edges.begin(), edges.end());
  if (edges.empty()) return edges;
  std::map<size_t, std::vector<size_t>> nbr;
  for (size_t a : edges) {
    for (size_t b : edges) {
      if (a == b) continue;
      auto [a0, a1] = g.edge_darts(static_cast<int>(a));
      auto [b0, b1] = g.edge_darts(static_cast<int>(b));
      int va[2] = {g.vertex_of(a0), g.vertex_of(a1)}, vb[2] = {g.vertex_of(b0), g.vertex_of(b1)};
      bool touch = false;
      for (int x : va) {
        for (int y : vb) touch = touch || x == y;
      }
      if (touch) nbr[a].push_back(b);
    }
  }
  std::vector<size_t> order{edges[0]};
  std::vector<bool> used(g.num_edges(), false);
  used[edges[0]] = true;
  for (bool moved = true; moved;) {
    moved = false;
    for (size_t b : nbr[order.back()]) {
      if (!used[b]) {
        used[b] = true;
        order.push_back(b);
        moved = true;
        break;
      }
    }
  }
  if (order.size() != edges.size()) return edges;
  return order;
}

std::optional<std::vector<size_t>> find_ladder_bijection(const StabilizerGroup& local, const std::vector<size_t>& qubits,
                                                         const std::array<std::vector<size_t>, 2>& legs,
                                                         const std::vector<size_t>& rungs) {
  const size_t r = rungs.size();
  LadderSpec ref = ladder_group(r);
  std::map<size_t, size_t> local_of;
  for (size_t k = 0; k < qubits.size(); ++k) local_of[qubits[k]] = k;
  for (int swap = 0; swap < 2; ++swap) {
    const auto& t = legs[swap];
    const auto& b = legs[1 - swap];
    for (size_t sb = 0; sb < r; ++sb) {
      for (int db : {1, -1}) {
        for (size_t sr = 0; sr < r; ++sr) {
          for (int dr : {1, -1}) {
            std::vector<size_t> slots(3 * r), loc(3 * r);
            for (size_t x = 0; x < r; ++x) {
              long ib = (static_cast<long>(sb) + db * static_cast<long>(x)) % static_cast<long>(r);
              long ir = (static_cast<long>(sr) + dr * static_cast<long>(x)) % static_cast<long>(r);
              slots[x] = t[x];
              slots[r + x] = b[(ib + r) % r];
              slots[2 * r + x] = rungs[(ir + r) % r];
            }
            for (size_t q = 0; q < 3 * r; ++q) loc[q] = local_of.at(slots[q]);
            std::vector<PauliWord> gens;
            for (const auto& w : ref.group.generators()) gens.push_back(embed_word(w, 3 * r, loc));
            if (groups_equal(local, make_group(3 * r, std::move(gens)))) return slots;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Columns from a multi-source BFS over shared generators, seeded by the
// given leg qubits in order.
std::vector<long> bfs_columns(const StabilizerGroup& local, const std::vector<size_t>& legs_local) {
  const size_t m = local.n();
  std::vector<std::vector<size_t>> adj(m);
  for (const auto& w : local.generators()) {
    auto s = w.support().ones();
    for (size_t a : s) {
      for (size_t b : s) {
        if (a != b) adj[a].push_back(b);
      }
    }
  }
  std::vector<long> col(m, -1);
  std::deque<size_t> q;
  for (size_t c = 0; c < legs_local.size(); ++c) {
    col[legs_local[c]] = static_cast<long>(c);
    q.push_back(legs_local[c]);
  }
  while (!q.empty()) {
    size_t a = q.front();
    q.pop_front();
    for (size_t b : adj[a]) {
      if (col[b] < 0) {
        col[b] = col[a];
        q.push_back(b);
      }
    }
  }
  return col;
}

// Largest entropy over cyclic column windows of width at most r/2.
size_t max_cut_entropy(const StabilizerGroup& local, const std::vector<long>& col, size_t r) {
  const size_t m = local.n();
  if (r < 2) return 0;
  size_t best = 0;
  for (size_t s = 0; s < r; ++s) {
    for (size_t w = 1; w <= r / 2; ++w) {
      Region region;
      for (size_t a = 0; a < m; ++a) {
        if (col[a] < 0) continue;
        size_t off = (static_cast<size_t>(col[a]) + r - s) % r;
        if (off < w) region.push_back(a);
      }
      best = std::max(best, entanglement_entropy(local, region));
    }
  }
  return best;
}

// Applies U^dagger of one chain to a dense vector.
std::vector<Gi> apply_chain_inverse(const std::vector<Gi>& v, const GhzChain& c) {
  const size_t N = c.length();
  uint64_t mask = 0;
  for (size_t s : c.slots) mask |= uint64_t{1} << s;
  std::vector<Gi> out(v.size());
  for (uint64_t b = 0; b < v.size(); ++b) {
    uint64_t rest = b & ~mask;
    std::vector<bool> m(N), x(N);
    for (size_t i = 0; i < N; ++i) m[i] = (b >> c.slots[i]) & 1;
    x[N - 1] = false;
    for (size_t i = N - 1; i-- > 0;) x[i] = x[i + 1] ^ m[i];
    uint64_t bx = rest, bxb = rest;
    for (size_t i = 0; i < N; ++i) {
      if (x[i]) bx |= uint64_t{1} << c.slots[i];
      else bxb |= uint64_t{1} << c.slots[i];
    }
    // g_N |x> = Z_N Z_1 |not x>.
    bool neg = m[N - 1] ^ !x[0] ^ !x[N - 1];
    Gi a = v[bx], d = v[bxb];
    out[b] = neg ? Gi{a.re - d.re, a.im - d.im} : Gi{a.re + d.re, a.im + d.im};
  }
  return out;
}

}  // namespace

DisentangleReport verify_ladders(const TorusGraph& g, const StabilizerGroup& out, const CycleFamily& family,
                                 const Relabeling& relabeling, const VerifyOptions& opts) {
  if (out.n() != g.num_edges()) throw Error(Errc::dimension, "group and graph sizes differ");
  const size_t n = out.n();
  DisentangleReport rep;
  rep.num_qubits = n;
  rep.family_size = family.size();
  rep.relabeling = relabeling;
  rep.generated_lattice = g.legend() && lattice_kind_from_string(g.legend()->kind).has_value();
  Layout l = make_layout(g, family);
  std::vector<PauliWord> refs = reference_words(g, l);
  GroupIndex out_index(out);

  auto comps = support_components(out);
  for (const auto& sc : comps) {
    ComponentReport cr;
    cr.qubits = sc.qubits;
    cr.generators = sc.generators;
    BitVec region = BitVec::from_indices(n, sc.qubits);
    StabilizerGroup local = restrict_group(out, sc);

    RowBasis basis(2 * sc.qubits.size(), refs.size());
    std::vector<PauliWord> chosen;
    for (const auto& w : refs) {
      if (w.has_identity_bits() || !inside(w, region)) continue;
      PauliWord lw = restrict_word(w, sc.qubits);
      if (basis.insert(lw.row())) chosen.push_back(lw);
    }
    try {
      cr.reference_equal = chosen.size() == sc.qubits.size() && groups_equal(local, make_group(sc.qubits.size(), chosen));
    } catch (const Error&) {
      cr.reference_equal = false;
    }

    // Ladder shape: two one-color GHZ legs of equal length r and r rungs.
    std::map<std::pair<size_t, Color>, std::vector<size_t>> legs;
    std::vector<size_t> rungs;
    for (size_t q : sc.qubits) {
      if (auto at = l.ghz_at_slot[q]) {
        legs[{at->first, l.chains[at->first].colors[at->second]}].push_back(q);
      } else {
        rungs.push_back(q);
      }
    }
    for (auto& [key, qs] : legs) {
      std::sort(qs.begin(), qs.end(), [&](size_t a, size_t b) {
        return l.ghz_at_slot[a]->second < l.ghz_at_slot[b]->second;
      });
    }
    size_t r = rungs.size();
    if (legs.size() == 2 && r >= 2 && legs.begin()->second.size() == r && std::next(legs.begin())->second.size() == r) {
      cr.ladder_shape = true;
      cr.ladder_bijection = find_ladder_bijection(local, sc.qubits,
                                                  {legs.begin()->second, std::next(legs.begin())->second},
                                                  residual_order(g, rungs));
    }

    std::map<size_t, size_t> local_of;
    for (size_t k = 0; k < sc.qubits.size(); ++k) local_of[sc.qubits[k]] = k;
    std::vector<size_t> first_legs;
    if (!legs.empty()) {
      size_t first_chain = legs.begin()->first.first;
      std::vector<size_t> qs;
      for (const auto& [key, v] : legs) {
        if (key.first == first_chain) qs.insert(qs.end(), v.begin(), v.end());
      }
      std::sort(qs.begin(), qs.end(), [&](size_t a, size_t b) {
        return l.ghz_at_slot[a]->second < l.ghz_at_slot[b]->second;
      });
      for (size_t q : qs) first_legs.push_back(local_of[q]);
    }
    std::vector<long> cols;
    size_t ncols = 0;
    if (cr.ladder_bijection) {
      const auto& bij = *cr.ladder_bijection;
      ncols = bij.size() / 3;
      cols.assign(sc.qubits.size(), -1);
      for (size_t q = 0; q < bij.size(); ++q) cols[local_of[bij[q]]] = static_cast<long>(q % ncols);
    } else {
      cols = bfs_columns(local, first_legs);
      ncols = first_legs.size();
    }
    cr.max_cut_entropy = max_cut_entropy(local, cols, ncols);

    for (const auto& c : l.chains) {
      for (Color col : {Color::green, Color::blue}) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < c.length(); ++i) {
          if (c.colors[i] == col) idx.push_back(i);
        }
        if (idx.empty()) continue;
        PauliWord z = c.zbar(n, idx);
        if (inside(z, region) && out_index.classify(z) == Membership::member) cr.has_tz = true;
      }
    }
    rep.components.push_back(std::move(cr));
  }

  const size_t m = comps.size();
  rep.mutual_information.assign(m, std::vector<size_t>(m, 0));
  if (opts.input) rep.preimage_mutual_information.assign(m, std::vector<size_t>(m, 0));
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = a + 1; b < m; ++b) {
      rep.mutual_information[a][b] = rep.mutual_information[b][a] =
          mutual_information(out, comps[a].qubits, comps[b].qubits);
      if (opts.input) {
        rep.preimage_mutual_information[a][b] = rep.preimage_mutual_information[b][a] =
            mutual_information(*opts.input, comps[a].qubits, comps[b].qubits);
      }
    }
  }

  if (opts.oracle) {
    if (n > kDenseMaxQubits) throw Error(Errc::too_large, "oracle refuses n > " + std::to_string(kDenseMaxQubits));
    rep.oracle_run = true;
    DenseState dout = dense_statevector(out);
    std::vector<std::pair<DenseState, std::vector<size_t>>> parts;
    for (const auto& sc : comps) parts.emplace_back(dense_statevector(restrict_group(out, sc)), sc.qubits);
    bool ok = same_ray(dout, tensor_embed(n, parts));
    if (opts.input) {
      DenseState din = dense_statevector(*opts.input);
      for (const auto& c : l.chains) din.amp = apply_chain_inverse(din.amp, c);
      ok = ok && same_ray(dout, din);
    }
    rep.oracle_verified = ok;
  }
  return rep;
}

DisentangleResult disentangle(const ToricCodeState& state, const CycleFamily& family, bool oracle) {
  const TorusGraph& g = state.graph;
  const size_t n = state.group.n();
  DisentangleResult res;
  for (const auto& c : family.cycles) {
    if (c.edge_set.size() != n) throw Error(Errc::dimension, "family belongs to another graph");
    res.chains.push_back(make_chain(c));
  }
  const size_t M = res.chains.size();
  bool signs_ok = true;

  // Bring X and Z of every chain into the generating set.
  std::vector<PauliWord> gens = state.group.generators();
  std::vector<bool> exchanged(gens.size(), false);
  std::vector<size_t> t_at(M), u_at(M);
  for (size_t k = 0; k < M; ++k) {
    const auto& slots = res.chains[k].slots;
    for (int which = 0; which < 2; ++which) {
      PauliWord w = which == 0 ? PauliWord::x_on(n, slots) : PauliWord::z_on(n, slots);
      GroupIndex idx(make_group(n, gens));
      auto combo = idx.express(w);
      if (!combo) {
        throw Error(Errc::verification, std::string(which == 0 ? "X" : "Z") + " string of chain " +
                                            std::to_string(k) + " is not in the group");
      }
      PauliWord elem = idx.product(*combo);
      if (elem.negative()) signs_ok = false;
      size_t j = gens.size();
      for (size_t i : combo->ones()) {
        if (!exchanged[i]) j = i;
      }
      if (j == gens.size()) throw Error(Errc::verification, "chain strings are dependent");
      gens[j] = elem;
      exchanged[j] = true;
      (which == 0 ? t_at : u_at)[k] = j;
    }
  }
  std::vector<PauliWord> img_t(M);
  for (size_t k = 0; k < M; ++k) {
    img_t[k] = image_exact(gens[t_at[k]], res.chains[k]);
    gens[t_at[k]] = pauli_multiply(gens[t_at[k]], gens[u_at[k]]);
  }

  std::vector<PauliWord> images;
  images.reserve(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    PauliWord q = gens[j];
    for (const auto& c : res.chains) q = image_exact(q, c);
    if (!exchanged[j]) {
      for (size_t k = 0; k < M; ++k) {
        const auto& c = res.chains[k];
        PauliWord alt = pauli_multiply(q, img_t[k]);
        size_t wq = chain_bits(q.z(), c).popcount(), wa = chain_bits(alt.z(), c).popcount();
        if (wa < wq || (wa == wq && q.z().get(c.slots.back()) && !alt.z().get(c.slots.back()))) q = alt;
      }
    }
    images.push_back(std::move(q));
  }

  bool comm = true;
  for (size_t a = 0; a < gens.size(); ++a) {
    for (size_t b = a + 1; b < gens.size(); ++b) {
      comm = comm && symplectic_product(gens[a], gens[b]) == symplectic_product(images[a], images[b]);
    }
  }
  for (const auto& w : images) signs_ok = signs_ok && !w.negative();
  res.group = make_group(n, images);

  bool identities = true;
  for (const auto& c : res.chains) {
    PauliWord tx = PauliWord::x_on(n, c.slots), tz = PauliWord::z_on(n, c.slots);
    PauliWord gprod(n);
    for (const auto& w : c.stabilizers(n)) gprod = pauli_multiply(gprod, w);
    identities = identities && image_exact(tx, c) == c.zbar_all(n) && image_exact(gprod, c) == c.zbar_all(n) &&
                 image_exact(tz, c) == c.zbar_parity(n, false) &&
                 image_exact(pauli_multiply(tx, tz), c) == c.zbar_parity(n, true);
  }

  bool colors = true;
  for (size_t j = 0; j < images.size(); ++j) {
    if (exchanged[j]) continue;
    for (const auto& c : res.chains) {
      BitVec sup = chain_bits(images[j].support(), c);
      std::vector<size_t> on = sup.ones();
      for (size_t i : on) colors = colors && c.colors[i] == c.colors[on[0]];
    }
  }

  res.relabeling.n = n;
  for (size_t k = 0; k < M; ++k) {
    const auto& c = res.chains[k];
    for (size_t i = 0; i < c.length(); ++i) {
      res.relabeling.ghz.push_back({k, i, c.slots[i], c.cycle.vertices[i], c.colors[i]});
    }
  }

  VerifyOptions vo{&state.group, oracle};
  res.report = verify_ladders(g, res.group, family, res.relabeling, vo);
  res.report.commutation_preserved = comm;
  res.report.rank_preserved = res.group.size() == state.group.size();
  res.report.signs_ok = signs_ok;
  res.report.image_identities = identities;
  res.report.color_split = colors;
  return res;
}

}  // namespace tcl
