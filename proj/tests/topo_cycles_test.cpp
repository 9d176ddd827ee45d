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

#include <gtest/gtest.h>

#include <algorithm>

#include "tcl/error.h"
#include "tcl/topo_cycles.h"

namespace tcl {
namespace {

Errc cycle_error(const TorusGraph& g, const std::vector<int>& edges) {
  try {
    check_topological(g, edges);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::verification;
}

long euler(const TorusGraph& g) {
  return static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) + static_cast<long>(g.num_faces());
}

TEST(CheckTopologicalTest, RejectsStraightSquareRow) {
  TorusGraph g = build_lattice(LatticeKind::square, 4, 4);
  EXPECT_EQ(cycle_error(g, {0, 2, 4, 6}), Errc::not_dual_cycle);
}

TEST(CheckTopologicalTest, ErrorKinds) {
  TorusGraph g = build_lattice(LatticeKind::square, 4, 4);
  EXPECT_EQ(cycle_error(g, {0, 2, 4}), Errc::not_closed);
  EXPECT_EQ(cycle_error(g, {0}), Errc::not_closed);
  std::vector<int> face;
  for (int d : g.face(0)) face.push_back(g.edge_of(d));
  EXPECT_EQ(cycle_error(g, face), Errc::contractible);
  EXPECT_EQ(cycle_error(g, {0, 2, 4, 6, 0, 2, 4, 6}), Errc::not_simple);

  TorusGraph sq = build_lattice(LatticeKind::square, 3, 2);
  try {
    find_family(sq);
    FAIL() << "expected no family";
  } catch (const NoFamilyError& e) {
    ASSERT_FALSE(e.obstructions().empty());
    EXPECT_THROW(check_topological(sq, e.obstructions()[0].cycle), Error);
  }
}

TEST(CheckTopologicalTest, CanonicalFormIgnoresStartAndDirection) {
  TorusGraph g = build_lattice(LatticeKind::triangular, 4, 4);
  CycleFamily f = find_family(g);
  for (const auto& c : f.cycles) {
    std::vector<int> e = c.edges;
    std::rotate(e.begin(), e.begin() + 3, e.end());
    EXPECT_EQ(check_topological(g, e).edges, c.edges);
    std::reverse(e.begin(), e.end());
    TopoCycle r = check_topological(g, e);
    EXPECT_EQ(r.edges, c.edges);
    EXPECT_EQ(r.vertices, c.vertices);
    EXPECT_EQ(r.sides, c.sides);
    EXPECT_EQ(c.edges[0], *std::min_element(c.edges.begin(), c.edges.end()));
  }
}

TEST(CheckTopologicalTest, SidesSplitTheStar) {
  TorusGraph g = build_lattice(LatticeKind::triangular, 4, 4);
  TopoCycle c = find_family(g).cycles[0];
  for (size_t i = 0; i < c.length(); ++i) {
    auto arcs = side_arcs(g, c, i);
    EXPECT_EQ(arcs[0].size() + arcs[1].size() + 2, g.degree(c.vertices[i]));
    EXPECT_TRUE(arcs[0].empty() || arcs[1].empty());
    EXPECT_EQ(c.sides[i], arcs[0].empty() && !arcs[1].empty() ? Side::down : Side::up);
  }
}

struct FamilyCase {
  LatticeKind kind;
  size_t l, m, length;
};

class FindFamilyTest : public ::testing::TestWithParam<FamilyCase> {};

TEST_P(FindFamilyTest, HomologousEdgeDisjointAndThin) {
  const FamilyCase p = GetParam();
  TorusGraph g = build_lattice(p.kind, p.l, p.l);
  CycleFamily f = find_family(g);
  ASSERT_EQ(f.size(), p.m);
  BitVec used(g.num_edges());
  for (const auto& c : f.cycles) {
    EXPECT_EQ(c.length(), p.length);
    EXPECT_EQ(used.and_count(c.edge_set), 0u);
    used ^= c.edge_set;
    EXPECT_TRUE(homologous(g, c.edge_set, f.cycles[0].edge_set));
  }
  ResidualStats r = family_residual(g, f.cycles);
  EXPECT_LE(r.max_vertex_degree, 2u);
  EXPECT_LE(r.max_face_degree, 2u);
}

INSTANTIATE_TEST_SUITE_P(Lattices, FindFamilyTest,
                         ::testing::Values(FamilyCase{LatticeKind::triangular, 2, 2, 4},
                                           FamilyCase{LatticeKind::triangular, 4, 4, 8},
                                           FamilyCase{LatticeKind::square, 2, 2, 4},
                                           FamilyCase{LatticeKind::square, 4, 4, 8}));

TEST(FindFamilyTest, TriangularResidualHasOneComponentPerCycle) {
  TorusGraph g = build_lattice(LatticeKind::triangular, 4, 4);
  CycleFamily f = find_family(g);
  EXPECT_EQ(family_residual(g, f.cycles).components, f.size());
}

TEST(FindFamilyTest, KagomeReportsObstruction) {
  TorusGraph g = build_lattice(LatticeKind::kagome, 2, 2);
  try {
    find_family(g);
    FAIL() << "expected no family";
  } catch (const NoFamilyError& e) {
    EXPECT_EQ(e.code(), Errc::no_family);
    EXPECT_FALSE(e.obstructions().empty());
  }
}

TEST(MakeFamilyTest, RejectsOverlapAndMixedClasses) {
  TorusGraph g = build_lattice(LatticeKind::triangular, 4, 4);
  CycleFamily f = find_family(g);
  EXPECT_THROW(make_family(g, {f.cycles[0], f.cycles[0]}), Error);
  try {
    make_family(g, {f.cycles[0]});
    FAIL() << "a single cycle leaves thick residual";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_family);
  }
}

TEST(SplitVertexTest, KeepsTorusAndIds) {
  TorusGraph g = build_lattice(LatticeKind::square, 3, 3);
  auto d = g.darts_at(4);
  SplitResult s = split_vertex(g, 4, {d[0], d[1]}, {d[2], d[3]});
  EXPECT_EQ(s.graph.num_edges(), g.num_edges() + 1);
  EXPECT_EQ(s.graph.num_vertices(), g.num_vertices() + 1);
  EXPECT_EQ(euler(s.graph), 0);
  EXPECT_EQ(s.new_edge, static_cast<int>(g.num_edges()));
  EXPECT_EQ(s.record.new_vertex, static_cast<int>(g.num_vertices()));
  for (size_t e = 0; e < g.num_edges(); ++e) {
    EXPECT_EQ(s.graph.edge_darts(static_cast<int>(e)), g.edge_darts(static_cast<int>(e)));
  }
  EXPECT_EQ(s.graph.vertex_of(d[2]), s.record.new_vertex);
  EXPECT_THROW(split_vertex(g, 4, {d[0], d[2]}, {d[1], d[3]}), Error);
  EXPECT_THROW(split_vertex(g, 4, {d[0], d[1], d[2], d[3]}, {}), Error);
}

// Square 3x2 has no family; every wrap cycle there has two-sided vertices.
TEST(ErTest, CompletedStateIsFreshToricCode) {
  TorusGraph g = build_lattice(LatticeKind::square, 3, 2);
  std::vector<Obstruction> obs;
  try {
    find_family(g);
    FAIL() << "expected no family";
  } catch (const NoFamilyError& e) {
    obs = e.obstructions();
  }
  CompletedFamily cf = complete_family(g, obs);
  ASSERT_EQ(cf.steps.size(), obs.size());
  for (const auto& step : cf.steps) {
    ToricCodeState fresh = toric_code_state(step.state.graph, step.state.c_primal, step.state.c_dual);
    EXPECT_TRUE(groups_equal(step.state.group, fresh.group));
    EXPECT_EQ(step.ancillas.size(), step.splits.size());
    for (const auto& a : step.ancillas) {
      EXPECT_EQ(a.basis, 'Z');
      for (const auto& c : step.cnots) {
        if (c.control == a.qubit || c.target == a.qubit) EXPECT_EQ(c.target, a.qubit);
      }
    }
  }
  const ToricCodeState& s = cf.state();
  EXPECT_EQ(euler(s.graph), 0);
  EXPECT_EQ(cf.family.size(), obs.size());
  for (const auto& c : cf.family.cycles) EXPECT_NO_THROW(check_topological(s.graph, c.edges));
}

TEST(ErTest, PlanRejectsVertexOffCycle) {
  TorusGraph g = build_lattice(LatticeKind::square, 3, 2);
  try {
    find_family(g);
  } catch (const NoFamilyError& e) {
    const auto& o = e.obstructions()[0];
    int off = 0;
    while (std::count(o.vertices.begin(), o.vertices.end(), off) ||
           std::any_of(o.cycle.begin(), o.cycle.end(), [&](int ed) {
             auto d = g.edge_darts(ed);
             return g.vertex_of(d[0]) == off || g.vertex_of(d[1]) == off;
           })) {
      ++off;
    }
    EXPECT_THROW(plan_splits(g, o.cycle, {off}), Error);
  }
}

}  // namespace
}  // namespace tcl
