// Copyright 2026 The prngforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRNGFORGE_GF2_HPP_
#define PRNGFORGE_GF2_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace prngforge {

/// 256-bit vector over GF(2). Bit b lives in word b / 64 at position b % 64.
using Gf2Vector256 = std::array<std::uint64_t, 4>;

inline bool get_bit(const Gf2Vector256& v, std::size_t b) noexcept {
  return (v[b >> 6] >> (b & 63)) & 1;
}

inline void flip_bit(Gf2Vector256& v, std::size_t b) noexcept {
  v[b >> 6] ^= std::uint64_t{1} << (b & 63);
}

/// Dense 256x256 matrix over GF(2), stored as 256 row vectors. y = M x has
/// bit i equal to the parity of row_i AND x.
class BitMatrix256 {
 public:
  static constexpr std::size_t kDim = 256;

  BitMatrix256() = default;

  static BitMatrix256 identity() noexcept {
    BitMatrix256 m;
    for (std::size_t i = 0; i < kDim; ++i) flip_bit(m.rows_[i], i);
    return m;
  }

  bool get(std::size_t row, std::size_t col) const noexcept {
    return get_bit(rows_[row], col);
  }
  void set(std::size_t row, std::size_t col, bool value) noexcept {
    if (get(row, col) != value) flip_bit(rows_[row], col);
  }
  const Gf2Vector256& row(std::size_t i) const noexcept { return rows_[i]; }

  Gf2Vector256 apply(const Gf2Vector256& x) const noexcept {
    Gf2Vector256 y{};
    for (std::size_t i = 0; i < kDim; ++i) {
      const Gf2Vector256& r = rows_[i];
      const int parity = std::popcount((r[0] & x[0]) ^ (r[1] & x[1]) ^
                                       (r[2] & x[2]) ^ (r[3] & x[3])) &
                         1;
      y[i >> 6] |= static_cast<std::uint64_t>(parity) << (i & 63);
    }
    return y;
  }

  /// Row i of (A B) is the XOR of the rows of B selected by row i of A.
  friend BitMatrix256 operator*(const BitMatrix256& a,
                                const BitMatrix256& b) noexcept {
    BitMatrix256 c;
    for (std::size_t i = 0; i < kDim; ++i) {
      Gf2Vector256 acc{};
      for (std::size_t w = 0; w < 4; ++w) {
        std::uint64_t bits = a.rows_[i][w];
        while (bits != 0) {
          const std::size_t k = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const Gf2Vector256& r = b.rows_[k];
          acc[0] ^= r[0];
          acc[1] ^= r[1];
          acc[2] ^= r[2];
          acc[3] ^= r[3];
        }
      }
      c.rows_[i] = acc;
    }
    return c;
  }

  /// Square-and-multiply power; power(0) is the identity.
  BitMatrix256 power(std::uint64_t exponent) const {
    BitMatrix256 result = identity();
    BitMatrix256 base = *this;
    while (exponent != 0) {
      if (exponent & 1) result = result * base;
      exponent >>= 1;
      if (exponent != 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const BitMatrix256&, const BitMatrix256&) = default;

 private:
  std::array<Gf2Vector256, kDim> rows_{};
};

}  // namespace prngforge

#endif  // PRNGFORGE_GF2_HPP_
