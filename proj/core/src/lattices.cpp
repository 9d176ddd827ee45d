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

// Lattice numbering. Cells are indexed c = y*lx + x.
//
//   square          vertex c; edges 2c (to x+1), 2c+1 (to y+1)
//   triangular      vertex c; edges 3c (to x+1), 3c+1 (to y+1), 3c+2 (to x+1,y+1)
//   kagome          vertices 3c+{A,B,C}; edges 6c+{AB, BC, CA, B-A(x+1), C-A(y+1), B-C(x+1,y-1)}
//   square_octagon  vertices 4c+{N,E,S,W}; edges 6c+{NE, ES, SW, WN, E-W(x+1), N-S(y+1)}
//
// Edge e has darts 2e (from its first listed endpoint) and 2e+1. Rotations
// are counterclockwise by direction angle in the unwrapped plane.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tcl/error.h"
#include "tcl/torus_graph.h"

namespace tcl {

namespace {

using Pt = std::array<double, 2>;

class Builder {
 public:
  Builder(size_t lx, size_t ly, size_t per_cell, Pt a1, Pt a2, std::vector<Pt> offsets)
      : lx_(lx), ly_(ly), k_(per_cell), a1_(a1), a2_(a2), off_(std::move(offsets)) {}

  int index(long x, long y, size_t k) const {
    long wx = ((x % static_cast<long>(lx_)) + lx_) % lx_;
    long wy = ((y % static_cast<long>(ly_)) + ly_) % ly_;
    return static_cast<int>(k_ * (wy * lx_ + wx) + k);
  }
  Pt pos(long x, long y, size_t k) const {
    return {x * a1_[0] + y * a2_[0] + off_[k][0], x * a1_[1] + y * a2_[1] + off_[k][1]};
  }

  void add(long x1, long y1, size_t k1, long x2, long y2, size_t k2) {
    Pt p = pos(x1, y1, k1), q = pos(x2, y2, k2);
    ends_.push_back({index(x1, y1, k1), index(x2, y2, k2)});
    angle_.push_back(std::atan2(q[1] - p[1], q[0] - p[0]));
    angle_.push_back(std::atan2(p[1] - q[1], p[0] - q[0]));
  }

  TorusGraph build(const char* kind) const {
    const size_t ne = ends_.size(), nd = 2 * ne, nv = k_ * lx_ * ly_;
    std::vector<int> alpha(nd), sigma(nd), vert(nd), edge(nd);
    std::vector<std::vector<int>> at(nv);
    for (size_t e = 0; e < ne; ++e) {
      for (int s = 0; s < 2; ++s) {
        int d = static_cast<int>(2 * e + s);
        alpha[d] = d ^ 1;
        vert[d] = ends_[e][s];
        edge[d] = static_cast<int>(e);
        at[vert[d]].push_back(d);
      }
    }
    for (auto& ds : at) {
      std::stable_sort(ds.begin(), ds.end(), [&](int a, int b) { return angle_[a] < angle_[b]; });
      for (size_t i = 0; i < ds.size(); ++i) sigma[ds[i]] = ds[(i + 1) % ds.size()];
    }
    Legend legend{kind, lx_, ly_, {}};
    legend.coords.resize(nv);
    for (size_t y = 0; y < ly_; ++y) {
      for (size_t x = 0; x < lx_; ++x) {
        for (size_t k = 0; k < k_; ++k) legend.coords[index(x, y, k)] = pos(x, y, k);
      }
    }
    return TorusGraph(std::move(alpha), std::move(sigma), std::move(vert), std::move(edge), std::move(legend));
  }

 private:
  size_t lx_, ly_, k_;
  Pt a1_, a2_;
  std::vector<Pt> off_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<double> angle_;
};

}  // namespace

std::optional<LatticeKind> lattice_kind_from_string(const std::string& s) {
  if (s == "square") return LatticeKind::square;
  if (s == "triangular") return LatticeKind::triangular;
  if (s == "kagome") return LatticeKind::kagome;
  if (s == "square_octagon" || s == "square-octagon") return LatticeKind::square_octagon;
  return std::nullopt;
}

const char* lattice_kind_name(LatticeKind k) {
  switch (k) {
    case LatticeKind::square:
      return "square";
    case LatticeKind::triangular:
      return "triangular";
    case LatticeKind::kagome:
      return "kagome";
    case LatticeKind::square_octagon:
      return "square_octagon";
  }
  return "?";
}

TorusGraph build_lattice(LatticeKind kind, size_t lx, size_t ly) {
  if (lx < 2 || ly < 2) throw Error(Errc::range, "lattice sides must be at least 2");
  const long LX = static_cast<long>(lx), LY = static_cast<long>(ly);
  switch (kind) {
    case LatticeKind::square:
    case LatticeKind::triangular: {
      Builder b(lx, ly, 1, {1, 0}, {0, 1}, {{0, 0}});
      for (long y = 0; y < LY; ++y) {
        for (long x = 0; x < LX; ++x) {
          b.add(x, y, 0, x + 1, y, 0);
          b.add(x, y, 0, x, y + 1, 0);
          if (kind == LatticeKind::triangular) b.add(x, y, 0, x + 1, y + 1, 0);
        }
      }
      return b.build(lattice_kind_name(kind));
    }
    case LatticeKind::kagome: {
      const double h = std::sqrt(3.0) / 2;
      Builder b(lx, ly, 3, {1, 0}, {0.5, h}, {{0, 0}, {0.5, 0}, {0.25, h / 2}});
      for (long y = 0; y < LY; ++y) {
        for (long x = 0; x < LX; ++x) {
          b.add(x, y, 0, x, y, 1);
          b.add(x, y, 1, x, y, 2);
          b.add(x, y, 2, x, y, 0);
          b.add(x, y, 1, x + 1, y, 0);
          b.add(x, y, 2, x, y + 1, 0);
          b.add(x, y, 1, x + 1, y - 1, 2);
        }
      }
      return b.build("kagome");
    }
    case LatticeKind::square_octagon: {
      const double s = 0.3;
      Builder b(lx, ly, 4, {1, 0}, {0, 1}, {{0, s}, {s, 0}, {0, -s}, {-s, 0}});
      for (long y = 0; y < LY; ++y) {
        for (long x = 0; x < LX; ++x) {
          b.add(x, y, 0, x, y, 1);
          b.add(x, y, 1, x, y, 2);
          b.add(x, y, 2, x, y, 3);
          b.add(x, y, 3, x, y, 0);
          b.add(x, y, 1, x + 1, y, 3);
          b.add(x, y, 0, x, y + 1, 2);
        }
      }
      return b.build("square_octagon");
    }
  }
  throw Error(Errc::range, "unknown lattice kind");
}

namespace {

// Mutable map with dead darts marked by alpha == -1.
struct LooseMap {
  std::vector<int> alpha, sigma, vertex_of;
  int num_vertices = 0;

  std::vector<int> faces() const {
    std::vector<int> f(alpha.size(), -1);
    int next = 0;
    for (size_t d = 0; d < alpha.size(); ++d) {
      if (alpha[d] < 0 || f[d] >= 0) continue;
      for (int x = static_cast<int>(d); f[x] < 0; x = sigma[alpha[x]]) f[x] = next;
      ++next;
    }
    return f;
  }

  void unlink(int x) {
    int p = x;
    while (sigma[p] != x) p = sigma[p];
    sigma[p] = sigma[x];
    alpha[x] = -1;
  }

  void remove_edge(int d) {
    int a = alpha[d];
    unlink(d);
    unlink(a);
  }

  void subdivide(int d) {
    int a = alpha[d];
    int n0 = static_cast<int>(alpha.size()), n1 = n0 + 1;
    int w = num_vertices++;
    alpha.push_back(d);
    alpha.push_back(a);
    sigma.push_back(n1);
    sigma.push_back(n0);
    vertex_of.push_back(w);
    vertex_of.push_back(w);
    alpha[d] = n0;
    alpha[a] = n1;
  }

  TorusGraph compact() const {
    std::vector<int> id(alpha.size(), -1);
    int k = 0;
    for (size_t d = 0; d < alpha.size(); ++d) {
      if (alpha[d] < 0 || id[d] >= 0) continue;
      id[d] = 2 * k;
      id[alpha[d]] = 2 * k + 1;
      ++k;
    }
    std::vector<int> al(2 * k), sg(2 * k), vo(2 * k), eo(2 * k);
    for (size_t d = 0; d < alpha.size(); ++d) {
      if (id[d] < 0) continue;
      al[id[d]] = id[alpha[d]];
      sg[id[d]] = id[sigma[d]];
      vo[id[d]] = vertex_of[d];
      eo[id[d]] = id[d] / 2;
    }
    return TorusGraph(std::move(al), std::move(sg), std::move(vo), std::move(eo));
  }
};

}  // namespace

TorusGraph random_embedding(uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](size_t lo, size_t hi) { return std::uniform_int_distribution<size_t>(lo, hi)(rng); };
  LatticeKind kind = pick(0, 1) ? LatticeKind::triangular : LatticeKind::square;
  TorusGraph base = build_lattice(kind, pick(2, 4), pick(2, 4));
  LooseMap m{base.alpha_array(), base.sigma_array(), base.vertex_array(), static_cast<int>(base.num_vertices())};

  size_t deletions = pick(0, base.num_edges() / 3);
  size_t subdivisions = pick(0, 3);
  while (deletions + subdivisions > 0) {
    bool del = deletions > 0 && (subdivisions == 0 || pick(0, 1));
    std::vector<int> live;
    for (size_t d = 0; d < m.alpha.size(); ++d) {
      if (m.alpha[d] > static_cast<int>(d)) live.push_back(static_cast<int>(d));
    }
    if (del) {
      --deletions;
      auto f = m.faces();
      std::vector<int> ok;
      for (int d : live) {
        if (f[d] != f[m.alpha[d]]) ok.push_back(d);
      }
      if (ok.empty()) continue;
      m.remove_edge(ok[pick(0, ok.size() - 1)]);
    } else {
      --subdivisions;
      m.subdivide(live[pick(0, live.size() - 1)]);
    }
  }
  return m.compact();
}

}  // namespace tcl
