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

#ifndef TCL_ERROR_H
#define TCL_ERROR_H

#include <stdexcept>
#include <string>

namespace tcl {

enum class Errc {
  dimension,
  phase,
  range,
  anticommuting,
  dependent,
  minus_identity,
  not_state_group,
  too_large,
  malformed,
  not_involution,
  not_torus,
  disconnected,
  not_cycle,
  invalid_basis,
  not_closed,
  not_simple,
  not_dual_cycle,
  contractible,
  two_sided,
  odd_length,
  non_contiguous,
  no_family,
  odd_overlap,
  odd_z_weight,
  overlap,
  verification,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace tcl

#endif
