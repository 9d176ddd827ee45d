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

#include "tcl/error.h"

namespace tcl {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::dimension: return "dimension";
    case Errc::phase: return "phase";
    case Errc::range: return "range";
    case Errc::anticommuting: return "anticommuting";
    case Errc::dependent: return "dependent";
    case Errc::minus_identity: return "minus_identity";
    case Errc::not_state_group: return "not_state_group";
    case Errc::too_large: return "too_large";
    case Errc::malformed: return "malformed";
    case Errc::not_involution: return "not_involution";
    case Errc::not_torus: return "not_torus";
    case Errc::disconnected: return "disconnected";
    case Errc::not_cycle: return "not_cycle";
    case Errc::invalid_basis: return "invalid_basis";
    case Errc::not_closed: return "not_closed";
    case Errc::not_simple: return "not_simple";
    case Errc::not_dual_cycle: return "not_dual_cycle";
    case Errc::contractible: return "contractible";
    case Errc::two_sided: return "two_sided";
    case Errc::odd_length: return "odd_length";
    case Errc::non_contiguous: return "non_contiguous";
    case Errc::no_family: return "no_family";
    case Errc::odd_overlap: return "odd_overlap";
    case Errc::odd_z_weight: return "odd_z_weight";
    case Errc::overlap: return "overlap";
    case Errc::verification: return "verification";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace tcl
