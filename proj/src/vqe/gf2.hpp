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
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vqe/pauli.hpp"

namespace vqe::gf2 {

/// Fixed-length bit row over GF(2). Column 0 is the leftmost (most
/// significant) bit, so rows compare like the binary numbers they spell.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] bool get(int c) const noexcept {
    return (words_[static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1U;
  }
  void set(int c, bool v = true) noexcept {
    auto& w = words_[static_cast<std::size_t>(c) / 64];
    const auto bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(int c) noexcept { words_[static_cast<std::size_t>(c) / 64] ^= std::uint64_t{1} << (c % 64); }
  [[nodiscard]] bool is_zero() const noexcept;
  /// Leftmost set column, or -1.
  [[nodiscard]] int leading() const noexcept;
  /// Ordinary GF(2) dot product.
  [[nodiscard]] bool dot(const BitRow& other) const noexcept;
  BitRow& operator^=(const BitRow& other) noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BitRow&, const BitRow&) = default;
  friend BitRow operator^(BitRow a, const BitRow& b) noexcept { return a ^= b; }
  /// Numeric order with column 0 most significant.
  friend bool operator<(const BitRow& a, const BitRow& b) noexcept;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// (a_x | a_z) as a 2m-column row: columns 0..m-1 hold a_x for qubits 1..m.
BitRow from_symplectic(const SymplecticVector& v);
SymplecticVector to_symplectic(const BitRow& row, int m);

/// Fully reduced row echelon form with leftmost pivots; zero rows dropped.
/// Rows come back ordered by pivot column, ascending.
std::vector<BitRow> rref(std::vector<BitRow> rows, int ncols);

/// Basis of {v : row . v = 0 for every row}, one vector per free column in
/// ascending column order.
std::vector<BitRow> nullspace(const std::vector<BitRow>& rows, int ncols);

/// Reduces v against a fully reduced echelon basis (as returned by rref):
/// the result is the smallest element of the coset v + span(basis).
BitRow reduce(BitRow v, const std::vector<BitRow>& echelon);

inline bool in_span(const BitRow& v, const std::vector<BitRow>& echelon) {
  return reduce(v, echelon).is_zero();
}

}  // namespace vqe::gf2
