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

#include <map>

#include "tcl/error.h"
#include "tcl/torus_graph.h"

namespace tcl {
namespace {

long euler(const TorusGraph& g) {
  return static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) + static_cast<long>(g.num_faces());
}

Errc graph_error(std::vector<int> alpha, std::vector<int> sigma, std::vector<int> vertex_of, std::vector<int> edge_of) {
  try {
    TorusGraph g(std::move(alpha), std::move(sigma), std::move(vertex_of), std::move(edge_of));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::verification;
}

// Square lattice edges: 2c to x+1 and 2c+1 to y+1, c = y*lx + x.
std::vector<int> row_cycle(size_t lx, size_t y) {
  std::vector<int> e;
  for (size_t x = 0; x < lx; ++x) e.push_back(static_cast<int>(2 * (y * lx + x)));
  return e;
}

std::vector<int> column_cycle(size_t lx, size_t ly, size_t x) {
  std::vector<int> e;
  for (size_t y = 0; y < ly; ++y) e.push_back(static_cast<int>(2 * (y * lx + x) + 1));
  return e;
}

struct Counts {
  LatticeKind kind;
  size_t l, v, e, f, degree;
};

class LatticeCountsTest : public ::testing::TestWithParam<Counts> {};

TEST_P(LatticeCountsTest, SizesAndEuler) {
  const Counts c = GetParam();
  TorusGraph g = build_lattice(c.kind, c.l, c.l);
  EXPECT_EQ(g.num_vertices(), c.v);
  EXPECT_EQ(g.num_edges(), c.e);
  EXPECT_EQ(g.num_faces(), c.f);
  EXPECT_EQ(euler(g), 0);
  for (size_t v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(g.degree(static_cast<int>(v)), c.degree);
  ASSERT_TRUE(g.legend().has_value());
  EXPECT_EQ(g.legend()->coords.size(), c.v);
}

INSTANTIATE_TEST_SUITE_P(
    Lattices, LatticeCountsTest,
    ::testing::Values(Counts{LatticeKind::square, 2, 4, 8, 4, 4}, Counts{LatticeKind::square, 4, 16, 32, 16, 4},
                      Counts{LatticeKind::triangular, 2, 4, 12, 8, 6},
                      Counts{LatticeKind::triangular, 4, 16, 48, 32, 6},
                      Counts{LatticeKind::kagome, 2, 12, 24, 12, 4},
                      Counts{LatticeKind::square_octagon, 2, 16, 24, 8, 3}));

TEST(LatticeTest, FaceSizes) {
  TorusGraph sq = build_lattice(LatticeKind::square, 3, 3);
  for (size_t f = 0; f < sq.num_faces(); ++f) EXPECT_EQ(sq.face(static_cast<int>(f)).size(), 4u);
  TorusGraph so = build_lattice(LatticeKind::square_octagon, 2, 2);
  size_t squares = 0, octagons = 0;
  for (size_t f = 0; f < so.num_faces(); ++f) {
    size_t k = so.face(static_cast<int>(f)).size();
    squares += k == 4;
    octagons += k == 8;
  }
  EXPECT_EQ(squares, 4u);
  EXPECT_EQ(octagons, 4u);
}

TEST(LatticeTest, KindNamesAndSizeLimits) {
  EXPECT_EQ(lattice_kind_from_string("triangular"), LatticeKind::triangular);
  EXPECT_EQ(lattice_kind_from_string("square-octagon"), LatticeKind::square_octagon);
  EXPECT_FALSE(lattice_kind_from_string("hexagonal").has_value());
  EXPECT_STREQ(lattice_kind_name(LatticeKind::kagome), "kagome");
  EXPECT_THROW(build_lattice(LatticeKind::square, 1, 3), Error);
  EXPECT_EQ(build_lattice(LatticeKind::square, 3, 2).num_edges(), 12u);
}

TEST(TorusGraphTest, RejectsBadMaps) {
  // alpha(0) = 0
  EXPECT_EQ(graph_error({0, 1}, {0, 1}, {0, 0}, {0, 0}), Errc::not_involution);
  // One edge, two vertices: a sphere.
  EXPECT_EQ(graph_error({1, 0}, {0, 1}, {0, 1}, {0, 0}), Errc::not_torus);
  EXPECT_EQ(graph_error({1, 0}, {0}, {0, 1}, {0, 0}), Errc::malformed);
}

TEST(TorusGraphTest, DualOfDualIsOriginal) {
  for (auto kind : {LatticeKind::square, LatticeKind::triangular, LatticeKind::kagome, LatticeKind::square_octagon}) {
    TorusGraph g = build_lattice(kind, 3, 2);
    TorusGraph d = dual_graph(g);
    EXPECT_EQ(d.num_vertices(), g.num_faces());
    EXPECT_EQ(d.num_faces(), g.num_vertices());
    EXPECT_EQ(euler(d), 0);
    TorusGraph dd = dual_graph(d);
    EXPECT_EQ(dd.alpha_array(), g.alpha_array());
    EXPECT_EQ(dd.sigma_array(), g.sigma_array());
    // Vertex ids may be renumbered; the partition of darts may not.
    std::map<int, int> relabel;
    for (size_t d = 0; d < g.num_darts(); ++d) {
      auto it = relabel.emplace(g.vertex_of(static_cast<int>(d)), dd.vertex_of(static_cast<int>(d))).first;
      EXPECT_EQ(it->second, dd.vertex_of(static_cast<int>(d)));
    }
    EXPECT_EQ(relabel.size(), g.num_vertices());
  }
}

TEST(TorusGraphTest, StarsAndFacesAreContractible) {
  TorusGraph g = build_lattice(LatticeKind::triangular, 3, 3);
  for (size_t f = 0; f < g.num_faces(); ++f) {
    BitVec b = g.face_boundary(static_cast<int>(f));
    EXPECT_TRUE(is_cycle(g, b));
    EXPECT_TRUE(is_contractible(g, b));
  }
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    BitVec s = g.vertex_star(static_cast<int>(v));
    EXPECT_TRUE(is_dual_cycle(g, s));
    EXPECT_TRUE(is_dual_contractible(g, s));
  }
}

TEST(TorusGraphTest, HomologyOfRowsAndColumns) {
  TorusGraph g = build_lattice(LatticeKind::square, 3, 3);
  const size_t ne = g.num_edges();
  BitVec r0 = edge_set(ne, row_cycle(3, 0)), r2 = edge_set(ne, row_cycle(3, 2));
  BitVec c1 = edge_set(ne, column_cycle(3, 3, 1));
  EXPECT_TRUE(is_cycle(g, r0));
  EXPECT_FALSE(is_contractible(g, r0));
  EXPECT_TRUE(homologous(g, r0, r2));
  EXPECT_FALSE(homologous(g, r0, c1));
  HomologyBasis basis(g, r0, c1);
  EXPECT_EQ(basis.classify(r2), (std::array<bool, 2>{true, false}));
  EXPECT_EQ(basis.classify(r2 ^ edge_set(ne, column_cycle(3, 3, 0))), (std::array<bool, 2>{true, true}));
  EXPECT_EQ(basis.classify(g.face_boundary(0)), (std::array<bool, 2>{false, false}));
  EXPECT_THROW(HomologyBasis(g, r0, r2), Error);
}

TEST(TorusGraphTest, FundamentalCycles) {
  for (auto kind : {LatticeKind::square, LatticeKind::kagome}) {
    TorusGraph g = build_lattice(kind, 3, 3);
    auto cycles = fundamental_cycles(g);
    EXPECT_EQ(cycles.size(), g.num_edges() - g.num_vertices() + 1);
    size_t wrapping = 0;
    for (const auto& c : cycles) {
      BitVec b = edge_set(g.num_edges(), c);
      ASSERT_TRUE(is_cycle(g, b));
      wrapping += !is_contractible(g, b);
    }
    EXPECT_GE(wrapping, 2u);
    auto duals = fundamental_dual_cycles(g);
    EXPECT_EQ(duals.size(), g.num_edges() - g.num_faces() + 1);
    for (const auto& c : duals) EXPECT_TRUE(is_dual_cycle(g, edge_set(g.num_edges(), c)));
  }
}

TEST(TorusGraphTest, RandomEmbeddingIsDeterministic) {
  EXPECT_EQ(random_embedding(17), random_embedding(17));
  EXPECT_EQ(euler(random_embedding(17)), 0);
  EXPECT_FALSE(random_embedding(17).legend().has_value());
}

}  // namespace
}  // namespace tcl
