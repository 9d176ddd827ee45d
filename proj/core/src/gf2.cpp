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

#include "tcl/gf2.h"

#include "tcl/error.h"

namespace tcl {

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::from_rows(size_t cols, std::vector<BitVec> rows) {
  BitMatrix m;
  m.cols_ = cols;
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

void BitMatrix::append_row(BitVec r) {
  if (r.size() != cols_) throw Error(Errc::dimension, "row length mismatch");
  rows_.push_back(std::move(r));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (size_t r = 0; r < rows(); ++r) {
    for (size_t c : rows_[r].ones()) t.set(c, r);
  }
  return t;
}

RowBasis::RowBasis(size_t cols, size_t max_rows) : cols_(cols), max_rows_(max_rows) {}

bool RowBasis::insert(const BitVec& row) {
  if (row.size() != cols_) throw Error(Errc::dimension, "row length mismatch");
  if (inserted_ >= max_rows_) throw Error(Errc::range, "row basis capacity exceeded");
  BitVec v = row;
  BitVec combo(max_rows_);
  combo.flip(inserted_);
  for (const auto& e : basis_) {
    if (v.get(e.pivot)) {
      v ^= e.v;
      combo ^= e.combo;
    }
  }
  ++inserted_;
  size_t p = v.next(0);
  if (p == v.size()) {
    last_dep_ = combo;
    return false;
  }
  last_dep_.reset();
  basis_.push_back({std::move(v), std::move(combo), p});
  return true;
}

BitVec RowBasis::reduce(const BitVec& row) const {
  BitVec v = row;
  for (const auto& e : basis_) {
    if (v.get(e.pivot)) v ^= e.v;
  }
  return v;
}

std::optional<BitVec> RowBasis::express(const BitVec& row) const {
  if (row.size() != cols_) throw Error(Errc::dimension, "row length mismatch");
  BitVec v = row;
  BitVec combo(max_rows_);
  for (const auto& e : basis_) {
    if (v.get(e.pivot)) {
      v ^= e.v;
      combo ^= e.combo;
    }
  }
  if (v.any()) return std::nullopt;
  return combo;
}

bool RowBasis::contains(const BitVec& v) const { return reduce(v).none(); }

size_t rank(const BitMatrix& m) {
  RowBasis b(m.cols(), m.rows());
  for (size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
  return b.rank();
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b) {
  if (b.size() != m.cols()) throw Error(Errc::dimension, "right-hand side length mismatch");
  RowBasis basis(m.cols(), m.rows());
  for (size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis.express(b);
}

std::vector<BitVec> left_kernel(const BitMatrix& m) {
  RowBasis basis(m.cols(), m.rows());
  std::vector<BitVec> out;
  for (size_t r = 0; r < m.rows(); ++r) {
    if (!basis.insert(m.row(r))) out.push_back(*basis.last_dependency());
  }
  return out;
}

}  // namespace tcl
