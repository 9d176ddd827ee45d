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

#ifndef TCL_IO_H
#define TCL_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "tcl/ghz.h"

namespace tcl {

inline constexpr int kSchemaVersion = 1;

// All loaders throw Error(malformed) on schema violations and the usual
// validation errors on bad content.

std::string save_graph(const TorusGraph& g);
TorusGraph load_graph(std::string_view json);

std::string save_group(const StabilizerGroup& g);
StabilizerGroup load_group(std::string_view json);

std::string save_family(const CycleFamily& f);
// Edges are validated with check_topological and make_family. Optional
// "sides" must match when the edges are already in canonical order.
CycleFamily load_family(const TorusGraph& g, std::string_view json);

std::string save_obstructions(const std::vector<Obstruction>& obs);
// Read back as stored, without validation.
std::vector<Obstruction> load_obstructions(std::string_view json);

// Graph, group and the supports of T_x and T_z.
std::string save_state(const ToricCodeState& s);
// The group is taken as stored, so a modified document yields a modified
// state; the logical words are rebuilt from the stored supports.
ToricCodeState load_state(std::string_view json);

// Document kind ("graph", "state", ...) or empty when absent.
std::string document_kind(std::string_view json);

std::string save_report(const DisentangleReport& r);

struct EntropyResult {
  std::vector<Region> regions;
  std::vector<size_t> entropy;
  // Pairwise, symmetric, zero diagonal.
  std::vector<std::vector<size_t>> mutual_information;
};
std::string save_entropy(const EntropyResult& e);

struct DotOptions {
  std::vector<std::vector<int>> cycles;
  bool dual = false;
};
// Undirected graph with one node per vertex and one edge per edge id; cycle
// edges carry cycle=<k> and a color. With dual set a second graph holds the
// dual, edge ids unchanged.
std::string to_dot(const TorusGraph& g, const DotOptions& opts = {});
std::string ladder_to_dot(const LadderSpec& l);

}  // namespace tcl

#endif
