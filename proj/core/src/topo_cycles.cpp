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

#include "tcl/topo_cycles.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "tcl/gf2.h"

namespace tcl {

namespace {

// Forward darts of the closed walk along `edges` leaving vertex_of(start).
std::optional<std::vector<int>> trace_from(const TorusGraph& g, const std::vector<int>& edges, int start) {
  std::vector<int> darts{start};
  int cur = g.head(start);
  for (size_t i = 1; i < edges.size(); ++i) {
    auto [a, b] = g.edge_darts(edges[i]);
    int d = g.vertex_of(a) == cur ? a : (g.vertex_of(b) == cur ? b : -1);
    if (d < 0) return std::nullopt;
    darts.push_back(d);
    cur = g.head(d);
  }
  if (cur != g.vertex_of(start)) return std::nullopt;
  return darts;
}

std::optional<std::vector<int>> trace_walk(const TorusGraph& g, const std::vector<int>& edges) {
  if (edges.empty()) return std::nullopt;
  for (int e : edges) {
    if (e < 0 || static_cast<size_t>(e) >= g.num_edges()) throw Error(Errc::range, "edge id out of range");
  }
  for (int start : g.edge_darts(edges[0])) {
    if (auto w = trace_from(g, edges, start)) return w;
  }
  return std::nullopt;
}

// Off-cycle darts at a vertex entered by din and left by dout: {up, down}.
std::array<std::vector<int>, 2> arcs_at(const TorusGraph& g, int din, int dout) {
  std::array<std::vector<int>, 2> a;
  for (int x = g.sigma(dout); x != din; x = g.sigma(x)) a[0].push_back(x);
  for (int x = g.sigma(din); x != dout; x = g.sigma(x)) a[1].push_back(x);
  return a;
}

BitVec face_parity(const TorusGraph& g, const BitVec& s) {
  BitVec p(g.num_faces());
  for (size_t d = 0; d < g.num_darts(); ++d) {
    if (s.get(g.edge_of(static_cast<int>(d)))) p.flip(g.face_of(static_cast<int>(d)));
  }
  return p;
}

// Split choice per listed walk position (false: incoming dart moves, true:
// outgoing dart moves) making the lengthened cycle a dual cycle.
std::optional<std::vector<bool>> split_options(const TorusGraph& g, const std::vector<int>& darts,
                                               const std::vector<size_t>& positions) {
  const size_t n = darts.size(), nf = g.num_faces();
  BitVec s(g.num_edges());
  for (int d : darts) s.flip(g.edge_of(d));
  BitVec b = face_parity(g, s);
  BitMatrix m(0, nf);
  for (size_t i : positions) {
    int din = g.alpha(darts[i]), dout = darts[(i + 1) % n];
    BitVec fa(nf), fb(nf);
    fa.flip(g.face_of(din));
    fa.flip(g.face_of(dout));
    fb.flip(g.face_of(g.sigma(dout)));
    fb.flip(g.face_of(g.sigma(din)));
    b ^= fa;
    m.append_row(fa ^ fb);
  }
  if (positions.empty()) {
    if (b.any()) return std::nullopt;
    return std::vector<bool>{};
  }
  auto x = solve(m, b);
  if (!x) return std::nullopt;
  std::vector<bool> out;
  for (size_t j = 0; j < positions.size(); ++j) out.push_back(x->get(j));
  return out;
}

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

bool residual_ok(const TorusGraph& g, const BitVec& used) {
  std::vector<unsigned> vd(g.num_vertices(), 0), fd(g.num_faces(), 0);
  for (size_t d = 0; d < g.num_darts(); ++d) {
    if (used.get(g.edge_of(static_cast<int>(d)))) continue;
    if (++vd[g.vertex_of(static_cast<int>(d))] > 2) return false;
    if (++fd[g.face_of(static_cast<int>(d))] > 2) return false;
  }
  return true;
}

// Simple cycles of bounded length as forward dart walks, each edge set
// reported once. `keep` may veto the pair (din, dout) at a vertex.
class CycleEnumerator {
 public:
  using Visit = std::function<void(const std::vector<int>&)>;
  using Keep = std::function<bool(int din, int dout)>;

  CycleEnumerator(const TorusGraph& g, size_t max_len, size_t max_nodes, Keep keep)
      : g_(g), max_len_(max_len), max_nodes_(max_nodes), keep_(std::move(keep)), on_(g.num_vertices(), false) {}

  void run(const Visit& visit) {
    for (size_t s = 0; s < g_.num_vertices() && nodes_ < max_nodes_; ++s) {
      start_ = static_cast<int>(s);
      on_[s] = true;
      dfs(start_, visit);
      on_[s] = false;
    }
  }

 private:
  void dfs(int v, const Visit& visit) {
    if (++nodes_ > max_nodes_ || path_.size() >= max_len_) return;
    for (int d : g_.darts_at(v)) {
      if (!path_.empty() && g_.edge_of(d) == g_.edge_of(path_.back())) continue;
      if (!path_.empty() && !keep_(g_.alpha(path_.back()), d)) continue;
      int w = g_.head(d);
      if (w == start_) {
        if (path_.empty()) continue;
        if (!keep_(g_.alpha(d), path_.front())) continue;
        path_.push_back(d);
        BitVec s(g_.num_edges());
        for (int x : path_) s.flip(g_.edge_of(x));
        if (seen_.insert(s).second) visit(path_);
        path_.pop_back();
      } else if (w > start_ && !on_[w]) {
        on_[w] = true;
        path_.push_back(d);
        dfs(w, visit);
        path_.pop_back();
        on_[w] = false;
      }
    }
  }

  const TorusGraph& g_;
  size_t max_len_, max_nodes_, nodes_ = 0;
  Keep keep_;
  std::vector<bool> on_;
  std::vector<int> path_;
  int start_ = 0;
  std::unordered_set<BitVec> seen_;
};

std::vector<int> walk_edges(const TorusGraph& g, const std::vector<int>& darts) {
  std::vector<int> e;
  for (int d : darts) e.push_back(g.edge_of(d));
  return e;
}

std::optional<CycleFamily> constructive_family(const TorusGraph& g) {
  const auto& lg = g.legend();
  if (!lg) return std::nullopt;
  const size_t lx = lg->lx, ly = lg->ly, cells = lx * ly;
  if (cells == 0 || g.num_vertices() != cells) return std::nullopt;
  std::vector<std::vector<int>> walks;
  auto cell = [lx, ly](size_t x, size_t y) { return static_cast<int>((y % ly) * lx + x % lx); };
  if (lg->kind == "triangular" && g.num_edges() == 3 * cells) {
    // Zigzag of vertical and diagonal edges between rows y and y+1.
    for (size_t y = 0; y < ly; ++y) {
      std::vector<int> w;
      for (size_t k = 0; k < lx; ++k) {
        size_t x = (lx - k) % lx;
        w.push_back(3 * cell(x, y) + 1);
        w.push_back(3 * cell(x + lx - 1, y) + 2);
      }
      walks.push_back(std::move(w));
    }
  } else if (lg->kind == "square" && lx == ly && g.num_edges() == 2 * cells) {
    // Staircase: right, up, right, up, ... translated along x.
    for (size_t x0 = 0; x0 < lx; ++x0) {
      std::vector<int> w;
      for (size_t y = 0; y < ly; ++y) {
        w.push_back(2 * cell(x0 + y, y));
        w.push_back(2 * cell(x0 + y + 1, y) + 1);
      }
      walks.push_back(std::move(w));
    }
  } else {
    return std::nullopt;
  }
  try {
    std::vector<TopoCycle> cycles;
    for (const auto& w : walks) cycles.push_back(check_topological(g, w));
    return make_family(g, std::move(cycles));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<CycleFamily> search_family(const TorusGraph& g, const FamilySearchLimits& lim, const RowBasis& faces) {
  std::vector<TopoCycle> cand;
  CycleEnumerator en(g, lim.max_cycle_length, lim.max_nodes, [&g](int din, int dout) {
    auto a = arcs_at(g, din, dout);
    return a[0].empty() || a[1].empty();
  });
  en.run([&](const std::vector<int>& walk) {
    if (cand.size() >= lim.max_candidates) return;
    try {
      cand.push_back(check_topological(g, walk_edges(g, walk)));
    } catch (const Error&) {
    }
  });
  std::stable_sort(cand.begin(), cand.end(),
                   [](const TopoCycle& a, const TopoCycle& b) { return a.length() < b.length(); });

  std::vector<size_t> chosen;
  size_t nodes = 0;
  std::function<bool(size_t, const BitVec&)> rec = [&](size_t from, const BitVec& used) {
    if (++nodes > lim.max_nodes) return false;
    if (!chosen.empty() && residual_ok(g, used)) return true;
    for (size_t j = from; j < cand.size(); ++j) {
      if (cand[j].edge_set.and_count(used)) continue;
      if (!chosen.empty() && !faces.contains(cand[j].edge_set ^ cand[chosen[0]].edge_set)) continue;
      chosen.push_back(j);
      if (rec(j + 1, used | cand[j].edge_set)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0, BitVec(g.num_edges()))) return std::nullopt;
  std::vector<TopoCycle> cycles;
  for (size_t j : chosen) cycles.push_back(cand[j]);
  return make_family(g, std::move(cycles));
}

struct PlainCycle {
  std::vector<int> darts;
  BitVec edges;
  BitVec verts;
  std::vector<size_t> two_sided;
  bool splittable = true;
};

// Vertex-disjoint homologous family that vertex splits turn into a family.
std::vector<Obstruction> obstruction_search(const TorusGraph& g, const FamilySearchLimits& lim,
                                            const RowBasis& faces) {
  std::vector<PlainCycle> cand;
  CycleEnumerator en(g, lim.max_cycle_length, lim.max_nodes, [](int, int) { return true; });
  en.run([&](const std::vector<int>& walk) {
    if (cand.size() >= lim.max_candidates) return;
    PlainCycle c{walk, BitVec(g.num_edges()), BitVec(g.num_vertices()), {}, true};
    for (int d : walk) {
      c.edges.flip(g.edge_of(d));
      c.verts.set(g.head(d));
    }
    if (faces.contains(c.edges)) return;
    for (size_t i = 0; i < walk.size(); ++i) {
      auto a = arcs_at(g, g.alpha(walk[i]), walk[(i + 1) % walk.size()]);
      if (!a[0].empty() && !a[1].empty()) c.two_sided.push_back(i);
      if (std::max(a[0].size(), a[1].size()) > 2) c.splittable = false;
    }
    if ((walk.size() + c.two_sided.size()) % 2) c.splittable = false;
    if (c.splittable && !split_options(g, walk, c.two_sided)) c.splittable = false;
    cand.push_back(std::move(c));
  });
  std::stable_sort(cand.begin(), cand.end(),
                   [](const PlainCycle& a, const PlainCycle& b) { return a.darts.size() < b.darts.size(); });

  auto as_obstruction = [&g](const PlainCycle& c) {
    Obstruction o;
    o.cycle = walk_edges(g, c.darts);
    for (size_t i : c.two_sided) o.vertices.push_back(g.head(c.darts[i]));
    return o;
  };
  auto family_ok = [&](const std::vector<size_t>& fam, const BitVec& used, const BitVec& covered) {
    std::vector<unsigned> fd(g.num_faces(), 0);
    for (size_t d = 0; d < g.num_darts(); ++d) {
      if (!used.get(g.edge_of(static_cast<int>(d))) && ++fd[g.face_of(static_cast<int>(d))] > 2) return false;
    }
    for (size_t v = 0; v < g.num_vertices(); ++v) {
      if (!covered.get(v) && g.degree(static_cast<int>(v)) > 2) return false;
    }
    return !fam.empty();
  };

  std::vector<size_t> chosen;
  size_t nodes = 0;
  std::function<bool(size_t, const BitVec&, const BitVec&)> rec = [&](size_t from, const BitVec& used,
                                                                      const BitVec& covered) {
    if (++nodes > lim.max_nodes) return false;
    if (family_ok(chosen, used, covered)) return true;
    for (size_t j = from; j < cand.size(); ++j) {
      const PlainCycle& c = cand[j];
      if (!c.splittable || c.verts.and_count(covered)) continue;
      if (!chosen.empty() && !faces.contains(c.edges ^ cand[chosen[0]].edges)) continue;
      chosen.push_back(j);
      if (rec(j + 1, used | c.edges, covered | c.verts)) return true;
      chosen.pop_back();
    }
    return false;
  };
  std::vector<Obstruction> out;
  if (rec(0, BitVec(g.num_edges()), BitVec(g.num_vertices()))) {
    for (size_t j : chosen) out.push_back(as_obstruction(cand[j]));
    return out;
  }
  const PlainCycle* best = nullptr;
  for (const auto& c : cand) {
    if (c.two_sided.empty()) continue;
    if (!best || c.two_sided.size() < best->two_sided.size()) best = &c;
  }
  if (!best && !cand.empty()) best = &cand.front();
  if (best) out.push_back(as_obstruction(*best));
  return out;
}

}  // namespace

const char* side_name(Side s) { return s == Side::up ? "up" : "down"; }

TopoCycle check_topological(const TorusGraph& g, const std::vector<int>& edges) {
  auto walk = trace_walk(g, edges);
  if (!walk) throw Error(Errc::not_closed, "edges do not form a closed walk");
  const size_t n = edges.size();
  std::vector<int> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  bool repeated_edge = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  std::vector<int> verts;
  for (int d : *walk) verts.push_back(g.head(d));
  std::sort(verts.begin(), verts.end());
  bool repeated_vertex = std::adjacent_find(verts.begin(), verts.end()) != verts.end();
  if (n < 2 || repeated_edge || repeated_vertex) throw Error(Errc::not_simple, "walk is not a simple cycle");

  BitVec s = edge_set(g.num_edges(), edges);
  if (is_contractible(g, s)) throw Error(Errc::contractible, "cycle is contractible");
  if (!is_dual_cycle(g, s)) throw Error(Errc::not_dual_cycle, "cycle is not a dual cycle");

  // Canonical start and direction.
  size_t k = std::min_element(edges.begin(), edges.end()) - edges.begin();
  std::vector<int> fwd(n), bwd(n);
  for (size_t i = 0; i < n; ++i) {
    fwd[i] = edges[(k + i) % n];
    bwd[i] = edges[(k + n - i) % n];
  }
  std::vector<int> darts;
  if (n > 2) {
    darts = *trace_walk(g, fwd[1] < bwd[1] ? fwd : bwd);
  } else {
    darts = *trace_from(g, fwd, g.edge_darts(fwd[0])[0]);
  }

  TopoCycle c;
  c.darts = darts;
  c.edge_set = s;
  for (size_t i = 0; i < n; ++i) {
    c.edges.push_back(g.edge_of(darts[i]));
    c.vertices.push_back(g.head(darts[i]));
    auto a = arcs_at(g, g.alpha(darts[i]), darts[(i + 1) % n]);
    if (!a[0].empty() && !a[1].empty()) {
      throw Error(Errc::two_sided, "vertex " + std::to_string(c.vertices.back()) + " has edges on both sides");
    }
    c.sides.push_back(a[1].empty() ? Side::up : Side::down);
  }
  if (n % 2) throw Error(Errc::odd_length, "cycle length is odd");
  return c;
}

std::array<std::vector<int>, 2> side_arcs(const TorusGraph& g, const TopoCycle& c, size_t i) {
  return arcs_at(g, g.alpha(c.darts[i]), c.darts[(i + 1) % c.length()]);
}

ResidualStats family_residual(const TorusGraph& g, const std::vector<TopoCycle>& cycles) {
  BitVec used(g.num_edges());
  for (const auto& c : cycles) used |= c.edge_set;
  std::vector<size_t> vd(g.num_vertices(), 0), fd(g.num_faces(), 0);
  Dsu dsu(g.num_vertices());
  size_t comps = g.num_vertices();
  for (size_t d = 0; d < g.num_darts(); ++d) {
    int dd = static_cast<int>(d);
    if (used.get(g.edge_of(dd))) continue;
    ++vd[g.vertex_of(dd)];
    ++fd[g.face_of(dd)];
    comps -= dsu.unite(g.vertex_of(dd), g.head(dd));
  }
  ResidualStats r;
  r.max_vertex_degree = vd.empty() ? 0 : *std::max_element(vd.begin(), vd.end());
  r.max_face_degree = fd.empty() ? 0 : *std::max_element(fd.begin(), fd.end());
  r.components = comps;
  return r;
}

CycleFamily make_family(const TorusGraph& g, std::vector<TopoCycle> cycles) {
  if (cycles.empty()) throw Error(Errc::no_family, "empty family");
  BitVec used(g.num_edges());
  for (const auto& c : cycles) {
    if (c.edge_set.size() != g.num_edges()) throw Error(Errc::dimension, "cycle belongs to another graph");
    if (c.edge_set.and_count(used)) throw Error(Errc::overlap, "family cycles share an edge");
    used |= c.edge_set;
    if (!homologous(g, c.edge_set, cycles[0].edge_set)) {
      throw Error(Errc::no_family, "family cycles are not homologous");
    }
  }
  ResidualStats r = family_residual(g, cycles);
  if (r.max_vertex_degree > 2 || r.max_face_degree > 2) {
    throw Error(Errc::no_family, "residual degree " + std::to_string(std::max(r.max_vertex_degree, r.max_face_degree)) +
                                     " exceeds 2");
  }
  return CycleFamily{std::move(cycles)};
}

CycleFamily find_family(const TorusGraph& g, const FamilySearchLimits& limits) {
  if (auto f = constructive_family(g)) return *f;
  RowBasis faces(g.num_edges(), g.num_faces());
  for (size_t f = 0; f < g.num_faces(); ++f) faces.insert(g.face_boundary(static_cast<int>(f)));
  if (auto f = search_family(g, limits, faces)) return *f;
  throw NoFamilyError("no family of topological cycles found", obstruction_search(g, limits, faces));
}

SplitResult split_vertex(const TorusGraph& g, int v, const std::vector<int>& arc_kept,
                         const std::vector<int>& arc_moved) {
  if (v < 0 || static_cast<size_t>(v) >= g.num_vertices()) throw Error(Errc::range, "vertex out of range");
  if (arc_kept.empty() || arc_moved.empty()) throw Error(Errc::non_contiguous, "both arcs must be non-empty");
  if (arc_kept.size() + arc_moved.size() != g.degree(v)) {
    throw Error(Errc::non_contiguous, "arcs do not cover the vertex");
  }
  auto chain = [&](const std::vector<int>& a, int next) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] < 0 || static_cast<size_t>(a[i]) >= g.num_darts() || g.vertex_of(a[i]) != v) return false;
      int want = i + 1 < a.size() ? a[i + 1] : next;
      if (g.sigma(a[i]) != want) return false;
    }
    return true;
  };
  if (!chain(arc_kept, arc_moved.front()) || !chain(arc_moved, arc_kept.front())) {
    throw Error(Errc::non_contiguous, "arcs are not contiguous in rotation order");
  }

  std::vector<int> alpha = g.alpha_array(), sigma = g.sigma_array(), vert = g.vertex_array(), edge = g.edge_array();
  const int na = static_cast<int>(g.num_darts()), nb = na + 1;
  const int ne = static_cast<int>(g.num_edges()), nv = static_cast<int>(g.num_vertices());
  alpha.push_back(nb);
  alpha.push_back(na);
  edge.push_back(ne);
  edge.push_back(ne);
  vert.push_back(v);
  vert.push_back(nv);
  sigma.push_back(arc_kept.front());
  sigma.push_back(arc_moved.front());
  sigma[arc_kept.back()] = na;
  sigma[arc_moved.back()] = nb;
  for (int d : arc_moved) vert[d] = nv;

  std::optional<Legend> legend = g.legend();
  if (legend) {
    legend->kind = "custom";
    if (!legend->coords.empty()) legend->coords.push_back(legend->coords[v]);
  }
  SplitResult r{TorusGraph(std::move(alpha), std::move(sigma), std::move(vert), std::move(edge), std::move(legend)),
                ne, SplitRecord{v, nv, ne, arc_kept, arc_moved}};
  return r;
}

namespace {

PauliWord extend(const PauliWord& p, size_t n) {
  std::vector<size_t> q(p.n());
  std::iota(q.begin(), q.end(), 0);
  return embed_word(p, n, q);
}

BitVec extend(const BitVec& b, size_t n) {
  BitVec r(n);
  for (size_t i : b.ones()) r.set(i);
  return r;
}

}  // namespace

SplitPlan plan_splits(const TorusGraph& g, const std::vector<int>& cycle, const std::vector<int>& obstructions) {
  auto walk = trace_walk(g, cycle);
  if (!walk) throw Error(Errc::not_closed, "edges do not form a closed walk");
  const size_t n = walk->size();
  std::vector<size_t> positions;
  for (int v : obstructions) {
    size_t i = 0;
    while (i < n && g.head((*walk)[i]) != v) ++i;
    if (i == n) throw Error(Errc::range, "obstruction vertex " + std::to_string(v) + " is not on the cycle");
    auto a = arcs_at(g, g.alpha((*walk)[i]), (*walk)[(i + 1) % n]);
    if (a[0].empty() || a[1].empty()) {
      throw Error(Errc::range, "obstruction vertex " + std::to_string(v) + " is one-sided");
    }
    positions.push_back(i);
  }
  if ((n + positions.size()) % 2) throw Error(Errc::odd_length, "split cycle would have odd length");
  auto opts = split_options(g, *walk, positions);
  if (!opts) throw Error(Errc::not_dual_cycle, "no split choice makes the cycle a dual cycle");

  SplitPlan plan{g, {}, {}};
  std::vector<int> inserted(n, -1);
  for (size_t j = 0; j < positions.size(); ++j) {
    size_t i = positions[j];
    int din = g.alpha((*walk)[i]), dout = (*walk)[(i + 1) % n];
    auto a = arcs_at(g, din, dout);
    std::vector<int> kept, moved;
    if (!(*opts)[j]) {
      kept.push_back(dout);
      kept.insert(kept.end(), a[0].begin(), a[0].end());
      moved.push_back(din);
      moved.insert(moved.end(), a[1].begin(), a[1].end());
    } else {
      kept = a[0];
      kept.push_back(din);
      moved = a[1];
      moved.push_back(dout);
    }
    // Rotations at other vertices are untouched by earlier splits.
    SplitResult s = split_vertex(plan.graph, obstructions[j], kept, moved);
    plan.graph = std::move(s.graph);
    plan.splits.push_back(s.record);
    inserted[i] = s.new_edge;
  }
  for (size_t i = 0; i < n; ++i) {
    plan.cycle.push_back(cycle[i]);
    if (inserted[i] >= 0) plan.cycle.push_back(inserted[i]);
  }
  return plan;
}

ErResult make_topological(const ToricCodeState& state, const std::vector<int>& cycle,
                          const std::vector<int>& obstructions) {
  ErResult r;
  r.state = state;
  if (obstructions.empty()) {
    r.cycle = check_topological(state.graph, cycle);
    return r;
  }
  SplitPlan plan = plan_splits(state.graph, cycle, obstructions);
  for (const SplitRecord& rec : plan.splits) {
    SplitResult s = split_vertex(r.state.graph, rec.vertex, rec.arc_kept, rec.arc_moved);
    const TorusGraph& g2 = s.graph;
    const size_t n2 = g2.num_edges();
    const size_t anc = static_cast<size_t>(s.new_edge);

    BitVec cp = extend(r.state.c_primal, n2), cd = extend(r.state.c_dual, n2);
    size_t deg = 0;
    for (int d : g2.darts_at(rec.vertex)) deg += cp.get(g2.edge_of(d));
    if (deg % 2) cp.flip(anc);
    ToricCodeState target = toric_code_state(g2, cp, cd);

    auto odd_edges = [&](const std::vector<int>& arc) {
      BitVec b(n2);
      for (int d : arc) b.flip(g2.edge_of(d));
      return b.ones();
    };
    std::optional<std::pair<std::vector<Cnot>, char>> found;
    for (char basis : {'Z', 'X'}) {
      for (const auto* arc : {&rec.arc_kept, &rec.arc_moved}) {
        for (bool anc_target : {true, false}) {
          if (found) break;
          std::vector<Cnot> cn;
          for (size_t e : odd_edges(*arc)) cn.push_back(anc_target ? Cnot{e, anc} : Cnot{anc, e});
          std::vector<PauliWord> gens;
          for (const auto& w : r.state.group.generators()) gens.push_back(extend(w, n2));
          gens.push_back(basis == 'Z' ? PauliWord::z_on(n2, {anc}) : PauliWord::x_on(n2, {anc}));
          for (auto& w : gens) {
            for (const Cnot& c : cn) w = conjugate_by_cnot(w, c.control, c.target);
          }
          try {
            if (groups_equal(make_group(n2, std::move(gens)), target.group)) found.emplace(cn, basis);
          } catch (const Error&) {
          }
        }
      }
    }
    if (!found) throw Error(Errc::verification, "no CNOT pattern reproduces the split toric code");
    r.cnots.insert(r.cnots.end(), found->first.begin(), found->first.end());
    r.ancillas.push_back({anc, found->second});
    r.splits.push_back(s.record);
    r.state = std::move(target);
  }
  r.cycle = check_topological(r.state.graph, plan.cycle);
  return r;
}

CompletedFamily complete_family(const TorusGraph& g, const std::vector<Obstruction>& obstructions) {
  if (obstructions.empty()) throw Error(Errc::no_family, "no obstruction cycles to complete");
  TorusGraph last = g;
  std::vector<std::vector<int>> lengthened;
  for (const auto& o : obstructions) {
    SplitPlan p = plan_splits(last, o.cycle, o.vertices);
    last = std::move(p.graph);
    lengthened.push_back(std::move(p.cycle));
  }
  const BitVec target = edge_set(last.num_edges(), lengthened[0]);
  RowBasis stars(last.num_edges(), last.num_vertices());
  for (size_t v = 0; v < last.num_vertices(); ++v) stars.insert(last.vertex_star(static_cast<int>(v)));

  // Dual homology has four classes; two independent fundamental dual cycles
  // and their sum reach all non-trivial ones.
  std::vector<BitVec> basis;
  for (const auto& w : fundamental_dual_cycles(g)) {
    BitVec d = edge_set(g.num_edges(), w);
    if (is_dual_contractible(g, d)) continue;
    if (!basis.empty() && is_dual_contractible(g, d ^ basis[0])) continue;
    basis.push_back(d);
    if (basis.size() == 2) break;
  }
  if (basis.size() == 2) basis.push_back(basis[0] ^ basis[1]);
  std::optional<BitVec> cd;
  for (const BitVec& d : basis) {
    if (stars.contains(extend(d, last.num_edges()) ^ target)) {
      cd = d;
      break;
    }
  }
  if (!cd) throw Error(Errc::verification, "no dual cycle of the input graph matches the split cycles");

  CompletedFamily out;
  out.before = toric_code_state(g, edge_set(g.num_edges(), obstructions[0].cycle), *cd);
  for (const auto& o : obstructions) {
    out.steps.push_back(make_topological(out.state(), o.cycle, o.vertices));
  }
  std::vector<TopoCycle> cycles;
  for (const auto& c : lengthened) cycles.push_back(check_topological(out.state().graph, c));
  out.family = make_family(out.state().graph, std::move(cycles));
  return out;
}

}  // namespace tcl
