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

#include "tcl/error.h"
#include "tcl/io.h"

namespace tcl {
namespace {

Errc load_error(std::string_view text) {
  try {
    load_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::verification;
}

TEST(IoTest, GraphRoundTrip) {
  for (auto kind : {LatticeKind::square, LatticeKind::kagome}) {
    TorusGraph g = build_lattice(kind, 3, 2);
    std::string text = save_graph(g);
    EXPECT_EQ(document_kind(text), "graph");
    TorusGraph back = load_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(save_graph(back), text);
  }
  TorusGraph r = random_embedding(3);
  EXPECT_EQ(load_graph(save_graph(r)), r);
}

TEST(IoTest, RejectsMalformedDocuments) {
  EXPECT_EQ(load_error("{"), Errc::malformed);
  EXPECT_EQ(load_error("[]"), Errc::malformed);
  EXPECT_EQ(load_error(R"({"schema_version": 1, "kind": "graph"})"), Errc::malformed);
  EXPECT_EQ(load_error(R"({"schema_version": 99, "darts": 2, "alpha": [1, 0], "sigma": [0, 1],
                          "vertex_of": [0, 0], "edge_of": [0, 0]})"),
            Errc::malformed);
  EXPECT_EQ(load_error(R"({"darts": 2, "alpha": "x", "sigma": [0, 1], "vertex_of": [0, 0], "edge_of": [0, 0]})"),
            Errc::malformed);
  // Valid JSON, but a sphere.
  EXPECT_EQ(load_error(R"({"darts": 2, "alpha": [1, 0], "sigma": [0, 1], "vertex_of": [0, 1], "edge_of": [0, 0]})"),
            Errc::not_torus);
}

TEST(IoTest, GroupRoundTrip) {
  StabilizerGroup g = make_group(3, {PauliWord::parse("+X1X2", 3), PauliWord::parse("-Z1Z2Y3", 3)});
  std::string text = save_group(g);
  EXPECT_NE(text.find("\"schema_version\": 1"), std::string::npos);
  StabilizerGroup back = load_group(text);
  EXPECT_EQ(back.generators(), g.generators());
}

TEST(IoTest, FamilyRoundTripAndTamper) {
  TorusGraph g = build_lattice(LatticeKind::triangular, 4, 4);
  CycleFamily f = find_family(g);
  std::string text = save_family(f);
  CycleFamily back = load_family(g, text);
  ASSERT_EQ(back.size(), f.size());
  for (size_t k = 0; k < f.size(); ++k) EXPECT_EQ(back.cycles[k].edges, f.cycles[k].edges);

  std::string wrong_side = text;
  size_t pos = wrong_side.find("\"up\"");
  ASSERT_NE(pos, std::string::npos);
  wrong_side.replace(pos, 4, "\"down\"");
  EXPECT_THROW(load_family(g, wrong_side), Error);

  std::string bad_edge = text;
  pos = bad_edge.find("\"edges\": [");
  bad_edge.insert(pos + 10, "\n 47,");
  EXPECT_THROW(load_family(g, bad_edge), Error);
}

TEST(IoTest, StateRoundTrip) {
  TorusGraph g = build_lattice(LatticeKind::square, 2, 2);
  CycleFamily f = find_family(g);
  ToricCodeState s = toric_code_state(g, f.cycles[0].edge_set, f.cycles[0].edge_set);
  std::string text = save_state(s);
  EXPECT_EQ(document_kind(text), "state");
  ToricCodeState back = load_state(text);
  EXPECT_TRUE(groups_equal(back.group, s.group));
  EXPECT_EQ(back.c_primal, s.c_primal);
  EXPECT_EQ(load_graph(text), g);
}

TEST(IoTest, ObstructionsRoundTrip) {
  std::vector<Obstruction> obs{{{0, 1, 2}, {4}}, {{5, 6}, {}}};
  auto back = load_obstructions(save_obstructions(obs));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].cycle, obs[0].cycle);
  EXPECT_EQ(back[0].vertices, obs[0].vertices);
  EXPECT_TRUE(back[1].vertices.empty());
}

TEST(IoTest, ReportIsDeterministic) {
  TorusGraph g = build_lattice(LatticeKind::square, 2, 2);
  CycleFamily f = find_family(g);
  ToricCodeState s = toric_code_state(g, f.cycles[0].edge_set, f.cycles[0].edge_set);
  std::string a = save_report(disentangle(s, f).report);
  std::string b = save_report(disentangle(s, f).report);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"verdicts\""), std::string::npos);
  EXPECT_EQ(a.find("time"), std::string::npos);
}

TEST(DotTest, CyclesAndDualOverlay) {
  TorusGraph g = build_lattice(LatticeKind::square, 2, 2);
  std::string plain = to_dot(g);
  EXPECT_EQ(plain.rfind("graph torus {", 0), 0u);
  EXPECT_EQ(plain.find("cycle="), std::string::npos);
  EXPECT_EQ(plain.find("graph dual"), std::string::npos);
  DotOptions opts;
  opts.cycles = {{0, 3}};
  opts.dual = true;
  std::string marked = to_dot(g, opts);
  EXPECT_NE(marked.find("label=\"e0\", cycle=0"), std::string::npos);
  EXPECT_NE(marked.find("graph dual {"), std::string::npos);
  opts.cycles = {{99}};
  EXPECT_THROW(to_dot(g, opts), Error);
  std::string lad = ladder_to_dot(ladder_group(3));
  EXPECT_NE(lad.find("q8"), std::string::npos);
}

}  // namespace
}  // namespace tcl
