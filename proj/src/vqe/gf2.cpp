// Copyright 2026 The vqe-taper Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "vqe/gf2.hpp"

#include <bit>

#include "vqe/error.hpp"

namespace vqe::gf2 {

bool BitRow::is_zero() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

int BitRow::leading() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  }
  return -1;
}

bool BitRow::dot(const BitRow& other) const noexcept {
  int parity = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) parity ^= std::popcount(words_[i] & other.words_[i]) & 1;
  return parity != 0;
}

BitRow& BitRow::operator^=(const BitRow& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitRow::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int c = 0; c < n_; ++c) {
    if (get(c)) s[static_cast<std::size_t>(c)] = '1';
  }
  return s;
}

bool operator<(const BitRow& a, const BitRow& b) noexcept {
  // the first differing column decides; column 0 is most significant
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const auto diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const auto low = diff & (~diff + 1);
    return (b.words_[i] & low) != 0;
  }
  return false;
}

BitRow from_symplectic(const SymplecticVector& v) {
  const int m = v.num_qubits();
  BitRow row(2 * m);
  for (int q = 1; q <= m; ++q) {
    if (v.x(q)) row.set(q - 1);
    if (v.z(q)) row.set(m + q - 1);
  }
  return row;
}

SymplecticVector to_symplectic(const BitRow& row, int m) {
  if (row.size() != 2 * m) fail(ErrorCode::Dimension, "bit row length is not 2m");
  std::uint64_t x = 0, z = 0;
  for (int q = 1; q <= m; ++q) {
    if (row.get(q - 1)) x |= qubit_bit(m, q);
    if (row.get(m + q - 1)) z |= qubit_bit(m, q);
  }
  return {m, x, z};
}

std::vector<BitRow> rref(std::vector<BitRow> rows, int ncols) {
  std::size_t rank = 0;
  for (int col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::vector<BitRow> nullspace(const std::vector<BitRow>& rows, int ncols) {
  const auto echelon = rref(rows, ncols);
  std::vector<int> pivot_of_row;
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (const auto& r : echelon) {
    const int p = r.leading();
    pivot_of_row.push_back(p);
    is_pivot[static_cast<std::size_t>(p)] = true;
  }
  std::vector<BitRow> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    BitRow v(ncols);
    v.set(free);
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if (echelon[i].get(free)) v.set(pivot_of_row[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitRow reduce(BitRow v, const std::vector<BitRow>& echelon) {
  for (const auto& r : echelon) {
    if (v.get(r.leading())) v ^= r;
  }
  return v;
}

}  // namespace vqe::gf2
