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

#include "tcl/torus_graph.h"

#include <algorithm>
#include <numeric>
#include <queue>

#include "tcl/error.h"
#include "tcl/gf2.h"

namespace tcl {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

bool connected(size_t n, const std::vector<std::pair<int, int>>& links) {
  if (n == 0) return true;
  Dsu d(n);
  size_t parts = n;
  for (auto [a, b] : links) parts -= d.unite(a, b);
  return parts == 1;
}

}  // namespace

TorusGraph::TorusGraph(std::vector<int> alpha, std::vector<int> sigma, std::vector<int> vertex_of,
                       std::vector<int> edge_of, std::optional<Legend> legend)
    : alpha_(std::move(alpha)),
      sigma_(std::move(sigma)),
      vertex_of_(std::move(vertex_of)),
      edge_of_(std::move(edge_of)),
      legend_(std::move(legend)) {
  const size_t nd = alpha_.size();
  if (nd == 0 || nd % 2) throw Error(Errc::malformed, "dart count must be even and positive");
  if (sigma_.size() != nd || vertex_of_.size() != nd || edge_of_.size() != nd) {
    throw Error(Errc::malformed, "dart arrays have different lengths");
  }
  auto in_range = [nd](int d) { return d >= 0 && static_cast<size_t>(d) < nd; };
  for (size_t d = 0; d < nd; ++d) {
    if (!in_range(alpha_[d]) || !in_range(sigma_[d])) throw Error(Errc::malformed, "dart index out of range");
    if (alpha_[d] == static_cast<int>(d)) throw Error(Errc::not_involution, "alpha fixes dart " + std::to_string(d));
    if (alpha_[alpha_[d]] != static_cast<int>(d)) throw Error(Errc::not_involution, "alpha is not an involution");
  }
  std::vector<int> seen(nd, 0);
  for (size_t d = 0; d < nd; ++d) {
    if (seen[sigma_[d]]++) throw Error(Errc::malformed, "sigma is not a permutation");
  }

  // Vertices: sigma orbits, which must carry one distinct id each.
  std::vector<int> orbit_of(nd, -1);
  std::vector<std::vector<int>> orbits;
  for (size_t d0 = 0; d0 < nd; ++d0) {
    if (orbit_of[d0] >= 0) continue;
    std::vector<int> orb;
    for (int d = static_cast<int>(d0); orbit_of[d] < 0; d = sigma_[d]) {
      orbit_of[d] = static_cast<int>(orbits.size());
      orb.push_back(d);
    }
    orbits.push_back(std::move(orb));
  }
  const size_t nv = orbits.size();
  vertex_darts_.assign(nv, {});
  for (auto& orb : orbits) {
    int v = vertex_of_[orb[0]];
    if (v < 0 || static_cast<size_t>(v) >= nv) throw Error(Errc::malformed, "vertex id out of range");
    for (int d : orb) {
      if (vertex_of_[d] != v) throw Error(Errc::malformed, "vertex_of differs along a rotation");
    }
    if (!vertex_darts_[v].empty()) throw Error(Errc::malformed, "two rotations share vertex id " + std::to_string(v));
    vertex_darts_[v] = std::move(orb);
  }

  const size_t ne = nd / 2;
  edge_darts_.assign(ne, {-1, -1});
  for (size_t d = 0; d < nd; ++d) {
    int e = edge_of_[d];
    if (e < 0 || static_cast<size_t>(e) >= ne) throw Error(Errc::malformed, "edge id out of range");
    if (edge_of_[alpha_[d]] != e) throw Error(Errc::malformed, "edge_of differs across alpha");
    auto& slot = edge_darts_[e];
    if (slot[0] < 0) {
      slot[0] = static_cast<int>(d);
    } else if (slot[1] < 0) {
      slot[1] = static_cast<int>(d);
    } else {
      throw Error(Errc::malformed, "edge id " + std::to_string(e) + " used by more than two darts");
    }
  }

  face_of_.assign(nd, -1);
  for (size_t d0 = 0; d0 < nd; ++d0) {
    if (face_of_[d0] >= 0) continue;
    std::vector<int> orb;
    for (int d = static_cast<int>(d0); face_of_[d] < 0; d = phi(d)) {
      face_of_[d] = static_cast<int>(faces_.size());
      orb.push_back(d);
    }
    faces_.push_back(std::move(orb));
  }

  long chi = static_cast<long>(nv) - static_cast<long>(ne) + static_cast<long>(faces_.size());
  if (chi != 0) {
    throw Error(Errc::not_torus, "not a torus embedding: V-E+F = " + std::to_string(chi));
  }
  std::vector<std::pair<int, int>> vl, fl;
  for (size_t d = 0; d < nd; ++d) {
    vl.emplace_back(vertex_of_[d], vertex_of_[alpha_[d]]);
    fl.emplace_back(face_of_[d], face_of_[alpha_[d]]);
  }
  if (!connected(nv, vl)) throw Error(Errc::disconnected, "graph is disconnected");
  if (!connected(faces_.size(), fl)) throw Error(Errc::disconnected, "dual graph is disconnected");
  if (legend_ && !legend_->coords.empty() && legend_->coords.size() != nv) {
    throw Error(Errc::malformed, "legend has wrong number of coordinates");
  }
}

BitVec TorusGraph::vertex_star(int v) const {
  BitVec s(num_edges());
  for (int d : vertex_darts_[v]) s.flip(edge_of_[d]);
  return s;
}

BitVec TorusGraph::face_boundary(int f) const {
  BitVec s(num_edges());
  for (int d : faces_[f]) s.flip(edge_of_[d]);
  return s;
}

bool TorusGraph::operator==(const TorusGraph& o) const {
  if (alpha_ != o.alpha_ || sigma_ != o.sigma_ || vertex_of_ != o.vertex_of_ || edge_of_ != o.edge_of_) {
    return false;
  }
  if (legend_.has_value() != o.legend_.has_value()) return false;
  if (!legend_) return true;
  return legend_->kind == o.legend_->kind && legend_->lx == o.legend_->lx && legend_->ly == o.legend_->ly &&
         legend_->coords == o.legend_->coords;
}

TorusGraph dual_graph(const TorusGraph& g) {
  const size_t nd = g.num_darts();
  std::vector<int> sigma(nd), vert(nd);
  for (size_t d = 0; d < nd; ++d) {
    sigma[d] = g.phi(static_cast<int>(d));
    vert[d] = g.face_of(static_cast<int>(d));
  }
  return TorusGraph(g.alpha_array(), std::move(sigma), std::move(vert), g.edge_array());
}

bool is_cycle(const TorusGraph& g, const BitVec& s) {
  if (s.size() != g.num_edges()) throw Error(Errc::dimension, "edge set length mismatch");
  std::vector<unsigned> deg(g.num_vertices(), 0);
  for (size_t d = 0; d < g.num_darts(); ++d) {
    if (s.get(g.edge_of(static_cast<int>(d)))) ++deg[g.vertex_of(static_cast<int>(d))];
  }
  return std::all_of(deg.begin(), deg.end(), [](unsigned c) { return c % 2 == 0; });
}

bool is_dual_cycle(const TorusGraph& g, const BitVec& s) {
  if (s.size() != g.num_edges()) throw Error(Errc::dimension, "edge set length mismatch");
  std::vector<unsigned> deg(g.num_faces(), 0);
  for (size_t d = 0; d < g.num_darts(); ++d) {
    if (s.get(g.edge_of(static_cast<int>(d)))) ++deg[g.face_of(static_cast<int>(d))];
  }
  return std::all_of(deg.begin(), deg.end(), [](unsigned c) { return c % 2 == 0; });
}

bool is_contractible(const TorusGraph& g, const BitVec& s) {
  if (!is_cycle(g, s)) throw Error(Errc::not_cycle, "edge set is not a cycle");
  RowBasis b(g.num_edges(), g.num_faces());
  for (size_t f = 0; f < g.num_faces(); ++f) b.insert(g.face_boundary(static_cast<int>(f)));
  return b.contains(s);
}

bool is_dual_contractible(const TorusGraph& g, const BitVec& s) {
  if (!is_dual_cycle(g, s)) throw Error(Errc::not_cycle, "edge set is not a dual cycle");
  RowBasis b(g.num_edges(), g.num_vertices());
  for (size_t v = 0; v < g.num_vertices(); ++v) b.insert(g.vertex_star(static_cast<int>(v)));
  return b.contains(s);
}

BitVec edge_set(size_t num_edges, const std::vector<int>& edges) {
  BitVec s(num_edges);
  for (int e : edges) {
    if (e < 0 || static_cast<size_t>(e) >= num_edges) throw Error(Errc::range, "edge id out of range");
    s.flip(e);
  }
  return s;
}

std::vector<std::vector<int>> fundamental_cycles(const TorusGraph& g) {
  const size_t nv = g.num_vertices();
  std::vector<int> parent_dart(nv, -1), depth(nv, -1);
  std::vector<bool> tree(g.num_edges(), false);
  std::queue<int> q;
  depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int d : g.darts_at(v)) {
      int w = g.head(d);
      if (depth[w] >= 0) continue;
      depth[w] = depth[v] + 1;
      parent_dart[w] = d;
      tree[g.edge_of(d)] = true;
      q.push(w);
    }
  }
  std::vector<std::vector<int>> out;
  for (size_t e = 0; e < g.num_edges(); ++e) {
    if (tree[e]) continue;
    int d = g.edge_darts(static_cast<int>(e))[0];
    int u = g.vertex_of(d), w = g.head(d);
    // Walk: w up to the common ancestor, down to u, then e back to w.
    std::vector<int> up_w, up_u;
    int a = w, b = u;
    while (depth[a] > depth[b]) {
      up_w.push_back(g.edge_of(parent_dart[a]));
      a = g.vertex_of(parent_dart[a]);
    }
    while (depth[b] > depth[a]) {
      up_u.push_back(g.edge_of(parent_dart[b]));
      b = g.vertex_of(parent_dart[b]);
    }
    while (a != b) {
      up_w.push_back(g.edge_of(parent_dart[a]));
      a = g.vertex_of(parent_dart[a]);
      up_u.push_back(g.edge_of(parent_dart[b]));
      b = g.vertex_of(parent_dart[b]);
    }
    std::vector<int> cyc = up_w;
    cyc.insert(cyc.end(), up_u.rbegin(), up_u.rend());
    cyc.push_back(static_cast<int>(e));
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::vector<int>> fundamental_dual_cycles(const TorusGraph& g) {
  return fundamental_cycles(dual_graph(g));
}

bool homologous(const TorusGraph& g, const BitVec& a, const BitVec& b) { return is_contractible(g, a ^ b); }

HomologyBasis::HomologyBasis(const TorusGraph& g, const BitVec& c1, const BitVec& c2) : g_(&g) {
  for (const BitVec* c : {&c1, &c2}) {
    if (!is_cycle(g, *c)) throw Error(Errc::invalid_basis, "basis element is not a cycle");
    if (is_contractible(g, *c)) throw Error(Errc::invalid_basis, "basis element is contractible");
  }
  if (is_contractible(g, c1 ^ c2)) throw Error(Errc::invalid_basis, "basis cycles are homologous");
  const size_t ne = g.num_edges();
  std::vector<BitVec> picked;
  std::vector<std::array<bool, 2>> pairs;
  for (const auto& walk : fundamental_dual_cycles(g)) {
    BitVec d = edge_set(ne, walk);
    std::array<bool, 2> p{c1.dot(d), c2.dot(d)};
    if (!p[0] && !p[1]) continue;
    if (!pairs.empty() && p == pairs[0]) continue;
    picked.push_back(d);
    pairs.push_back(p);
    if (picked.size() == 2) break;
  }
  if (picked.size() < 2) throw Error(Errc::invalid_basis, "no dual partners found");
  partners_ = {picked[0], picked[1]};
  // M[i][j] = <c_i, d_j>; invert over GF(2).
  bool m00 = pairs[0][0], m10 = pairs[0][1], m01 = pairs[1][0], m11 = pairs[1][1];
  // det = 1 since columns are independent and nonzero.
  inv_ = {{{m11, m01}, {m10, m00}}};
}

std::array<bool, 2> HomologyBasis::classify(const BitVec& s) const {
  if (!is_cycle(*g_, s)) throw Error(Errc::not_cycle, "edge set is not a cycle");
  bool v0 = s.dot(partners_[0]), v1 = s.dot(partners_[1]);
  // a = v * M^{-1}
  return {static_cast<bool>((v0 & inv_[0][0]) ^ (v1 & inv_[1][0])),
          static_cast<bool>((v0 & inv_[0][1]) ^ (v1 & inv_[1][1]))};
}

std::array<bool, 2> homology_class(const TorusGraph& g, const BitVec& s, const BitVec& c1, const BitVec& c2) {
  return HomologyBasis(g, c1, c2).classify(s);
}

}  // namespace tcl
