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

#ifndef TCL_BITS_H
#define TCL_BITS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace tcl {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are
/// always zero so word-level comparisons are exact.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n);
  static BitVec from_indices(size_t n, const std::vector<size_t>& ones);

  size_t size() const { return n_; }
  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(size_t i, bool v = true);
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
  void clear();

  BitVec& operator^=(const BitVec& o);
  BitVec& operator&=(const BitVec& o);
  BitVec& operator|=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  bool operator<(const BitVec& o) const;

  size_t popcount() const;
  bool any() const;
  bool none() const { return !any(); }
  // Parity of the bitwise AND.
  bool dot(const BitVec& o) const;
  size_t and_count(const BitVec& o) const;
  // Index of the lowest set bit at or after `from`, or size() when none.
  size_t next(size_t from) const;
  std::vector<size_t> ones() const;

  // Concatenation and slicing, used to build (x|z) rows.
  BitVec concat(const BitVec& o) const;
  BitVec slice(size_t begin, size_t len) const;

  const std::vector<uint64_t>& words() const { return w_; }
  size_t hash() const;

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace tcl

template <>
struct std::hash<tcl::BitVec> {
  size_t operator()(const tcl::BitVec& b) const { return b.hash(); }
};

#endif
