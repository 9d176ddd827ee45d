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

#include "tcl/bits.h"

#include <bit>
#include <cassert>

namespace tcl {

BitVec::BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

BitVec BitVec::from_indices(size_t n, const std::vector<size_t>& ones) {
  BitVec b(n);
  for (size_t i : ones) b.flip(i);
  return b;
}

void BitVec::set(size_t i, bool v) {
  uint64_t m = uint64_t{1} << (i & 63);
  if (v) {
    w_[i >> 6] |= m;
  } else {
    w_[i >> 6] &= ~m;
  }
}

void BitVec::clear() {
  for (auto& w : w_) w = 0;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  assert(n_ == o.n_);
  for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
  assert(n_ == o.n_);
  for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
  assert(n_ == o.n_);
  for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

bool BitVec::operator<(const BitVec& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return w_ < o.w_;
}

size_t BitVec::popcount() const {
  size_t c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool BitVec::any() const {
  for (auto w : w_) {
    if (w) return true;
  }
  return false;
}

bool BitVec::dot(const BitVec& o) const { return and_count(o) & 1u; }

size_t BitVec::and_count(const BitVec& o) const {
  assert(n_ == o.n_);
  size_t c = 0;
  for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
  return c;
}

size_t BitVec::next(size_t from) const {
  if (from >= n_) return n_;
  size_t k = from >> 6;
  uint64_t w = w_[k] & (~uint64_t{0} << (from & 63));
  while (true) {
    if (w) return (k << 6) + std::countr_zero(w);
    if (++k >= w_.size()) return n_;
    w = w_[k];
  }
}

std::vector<size_t> BitVec::ones() const {
  std::vector<size_t> out;
  for (size_t i = next(0); i < n_; i = next(i + 1)) out.push_back(i);
  return out;
}

BitVec BitVec::concat(const BitVec& o) const {
  BitVec r(n_ + o.n_);
  for (size_t i = next(0); i < n_; i = next(i + 1)) r.flip(i);
  for (size_t i = o.next(0); i < o.n_; i = o.next(i + 1)) r.flip(n_ + i);
  return r;
}

BitVec BitVec::slice(size_t begin, size_t len) const {
  BitVec r(len);
  for (size_t i = next(begin); i < begin + len && i < n_; i = next(i + 1)) r.flip(i - begin);
  return r;
}

size_t BitVec::hash() const {
  size_t h = n_ * 0x9e3779b97f4a7c15ull;
  for (auto w : w_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

}  // namespace tcl
