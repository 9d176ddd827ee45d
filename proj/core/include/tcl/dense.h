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

#ifndef TCL_DENSE_H
#define TCL_DENSE_H

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "tcl/stabilizer.h"

namespace tcl {

// Gaussian integer amplitude.
struct Gi {
  int64_t re = 0, im = 0;
  bool zero() const { return re == 0 && im == 0; }
  bool operator==(const Gi& o) const { return re == o.re && im == o.im; }
};

inline constexpr size_t kDenseMaxQubits = 20;

/// Exact unnormalized statevector. Qubit q is bit q of the basis index.
struct DenseState {
  size_t n = 0;
  std::vector<Gi> amp;

  std::vector<std::complex<double>> normalized() const;
  size_t support_size() const;
};

// The state fixed by every generator. Built as prod_i (1 + s_i g_i) applied
// to the lowest-index basis state with nonzero overlap. Throws too_large
// for n > 20 and not_state_group when the group is not maximal.
DenseState dense_statevector(const StabilizerGroup& g);

// v <- P v, exact.
void apply_pauli(const PauliWord& p, std::vector<Gi>& v);

// Divides every amplitude by the gcd of all real and imaginary parts.
void reduce_common_factor(std::vector<Gi>& v);

// True when b = c * a for some c = i^k * r, r > 0. Stores k in *unit.
bool same_ray(const DenseState& a, const DenseState& b, unsigned* unit = nullptr);

// Tensor product, placing local qubit k of parts[j] at parts[j].second[k].
DenseState tensor_embed(size_t n, const std::vector<std::pair<DenseState, std::vector<size_t>>>& parts);

}  // namespace tcl

#endif
