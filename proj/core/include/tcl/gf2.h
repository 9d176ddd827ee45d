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

#ifndef TCL_GF2_H
#define TCL_GF2_H

#include <optional>
#include <vector>

#include "tcl/bits.h"

namespace tcl {

/// Dense row-major matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols);
  static BitMatrix from_rows(size_t cols, std::vector<BitVec> rows);

  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  bool get(size_t r, size_t c) const { return rows_[r].get(c); }
  void set(size_t r, size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVec& row(size_t r) const { return rows_[r]; }
  BitVec& row(size_t r) { return rows_[r]; }
  void append_row(BitVec r);
  BitMatrix transpose() const;

 private:
  size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// Echelon basis grown one row at a time. Every stored vector remembers which
/// inserted rows it combines, so membership queries return a combination of
/// the original rows. Rows are reduced in insertion order and the pivot of a
/// new basis vector is its lowest set column, so results only depend on the
/// order rows were inserted.
class RowBasis {
 public:
  RowBasis(size_t cols, size_t max_rows);

  // Returns true if `row` was independent of all earlier rows. The row gets
  // the next insertion index either way.
  bool insert(const BitVec& row);
  // Combination of inserted rows summing to v, or nullopt when v is outside
  // the span. Only rows that were independent when inserted are used.
  std::optional<BitVec> express(const BitVec& v) const;
  bool contains(const BitVec& v) const;
  // v reduced against the basis; zero iff v is in the span.
  BitVec reduce(const BitVec& v) const;
  size_t rank() const { return basis_.size(); }
  size_t inserted() const { return inserted_; }
  // For a dependent insertion, the combination that produced zero.
  const std::optional<BitVec>& last_dependency() const { return last_dep_; }

 private:
  struct Entry {
    BitVec v;
    BitVec combo;
    size_t pivot;
  };
  size_t cols_, max_rows_, inserted_ = 0;
  std::vector<Entry> basis_;
  std::optional<BitVec> last_dep_;
};

size_t rank(const BitMatrix& m);

// Some x with sum_i x_i * row_i(m) == b, or nullopt. b has length m.cols().
// Free variables are zero: only the leftmost maximal independent set of rows
// is used, which makes the representative unique.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b);

// Basis of {x : sum_i x_i row_i == 0}, one vector per dependent row in order.
std::vector<BitVec> left_kernel(const BitMatrix& m);

}  // namespace tcl

#endif
