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

// Reference evaluation of the generator recurrences for tests.
//
// Everything is arbitrary-precision arithmetic: shifts are products or
// quotients by powers of two, reductions are explicit remainders, and the
// xorshift transition is also available as a dense GF(2) matrix assembled
// from its shift matrices entry by entry. None of it shares code with the
// library beyond plain seed values.

#ifndef PRNGFORGE_TESTS_ORACLE_REFERENCE_HPP_
#define PRNGFORGE_TESTS_ORACLE_REFERENCE_HPP_

#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prngforge::oracle {

using Big = boost::multiprecision::cpp_int;

inline Big pow2(unsigned k) { return Big(1) << k; }

inline const Big& word_modulus() {
  static const Big m = pow2(32);
  return m;
}

inline Big shl(const Big& x, unsigned k) { return (x * pow2(k)) % word_modulus(); }
inline Big shr(const Big& x, unsigned k) { return x / pow2(k); }

inline std::uint32_t to_u32(const Big& x) { return x.convert_to<std::uint32_t>(); }

/// x' = (a x + c) mod b, c' = floor((a x + c) / b).
struct MwcRef {
  Big a, x, c, b;

  MwcRef(std::uint32_t multiplier, std::uint32_t x0, std::uint32_t c0,
         unsigned base_bits = 16)
      : a(multiplier), x(x0), c(c0), b(pow2(base_bits)) {}

  Big next() {
    const Big t = a * x + c;
    x = t % b;
    c = t / b;
    return x;
  }
};

/// Two lanes, hi lane value times 2^16 plus lo lane value.
struct CombinedMwcRef {
  MwcRef hi, lo;

  std::uint32_t next() {
    const Big h = hi.next();
    const Big l = lo.next();
    return to_u32(h * pow2(16) + l);
  }
};

inline CombinedMwcRef cmwc_from_words(std::uint32_t a_hi, std::uint32_t a_lo,
                                      std::uint32_t hi_word,
                                      std::uint32_t lo_word) {
  return {MwcRef(a_hi, hi_word % 65536, hi_word / 65536),
          MwcRef(a_lo, lo_word % 65536, lo_word / 65536)};
}

/// v_n = (I+L^9)(I+L^13) v_{n-1} + (I+L^7) v_{n-4} + (I+R^3) v_{n-5}
///     + (I+R^10) v_{n-7} + (I+L^24)(I+R^7) v_{n-8}.
struct XorShiftRef {
  std::deque<Big> hist;  // oldest first

  explicit XorShiftRef(const std::array<std::uint32_t, 8>& seed) {
    for (std::uint32_t w : seed) hist.emplace_back(w);
  }

  std::uint32_t next() {
    const auto at = [&](unsigned back) -> const Big& {
      return hist[hist.size() - back];
    };
    Big t = at(1) ^ shl(at(1), 13);
    Big y = t ^ shl(t, 9);
    y ^= at(4) ^ shl(at(4), 7);
    y ^= at(5) ^ shr(at(5), 3);
    y ^= at(7) ^ shr(at(7), 10);
    t = at(8) ^ shr(at(8), 7);
    y ^= t ^ shl(t, 24);
    hist.pop_front();
    hist.push_back(y);
    return to_u32(y);
  }
};

/// Three xorshifts applied in the order L^13, R^17, L^5.
struct Shr3Ref {
  Big y;
  explicit Shr3Ref(std::uint32_t seed) : y(seed) {}

  std::uint32_t next() {
    y ^= shl(y, 13);
    y ^= shr(y, 17);
    y ^= shl(y, 5);
    return to_u32(y);
  }
};

/// X' = (a X + c) mod 2^32.
struct LcgRef {
  Big x, a, c;
  explicit LcgRef(std::uint32_t seed, std::uint32_t mul = 69069,
                  std::uint32_t inc = 1234567)
      : x(seed), a(mul), c(inc) {}

  std::uint32_t next() {
    x = (a * x + c) % word_modulus();
    return to_u32(x);
  }
};

/// ((mwc xor lcg) + shr3) mod 2^32.
struct KissRef {
  CombinedMwcRef mwc;
  Shr3Ref shr3;
  LcgRef lcg;

  std::uint32_t next() {
    const Big m(mwc.next());
    const Big l(lcg.next());
    const Big s(shr3.next());
    return to_u32(((m ^ l) + s) % word_modulus());
  }
};

// --- dense GF(2) model of the xorshift transition ---------------------------

/// Square 0/1 matrix, entry (i, j) maps input bit j to output bit i.
class DenseGf2 {
 public:
  explicit DenseGf2(std::size_t n) : n_(n), m_(n * n, 0) {}

  static DenseGf2 identity(std::size_t n) {
    DenseGf2 m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Left shift by k on one w-bit word: output bit i takes input bit i - k.
  static DenseGf2 left(std::size_t w, unsigned k) {
    DenseGf2 m(w);
    for (std::size_t i = k; i < w; ++i) m.at(i, i - k) = 1;
    return m;
  }

  static DenseGf2 right(std::size_t w, unsigned k) {
    DenseGf2 m(w);
    for (std::size_t i = 0; i + k < w; ++i) m.at(i, i + k) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  std::uint8_t& at(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }

  friend DenseGf2 operator+(const DenseGf2& a, const DenseGf2& b) {
    DenseGf2 r(a.n_);
    for (std::size_t i = 0; i < a.m_.size(); ++i) r.m_[i] = a.m_[i] ^ b.m_[i];
    return r;
  }

  friend DenseGf2 operator*(const DenseGf2& a, const DenseGf2& b) {
    DenseGf2 r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k)
        if (a.at(i, k))
          for (std::size_t j = 0; j < a.n_; ++j) r.at(i, j) ^= b.at(k, j);
    return r;
  }

  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& x) const {
    std::vector<std::uint8_t> y(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) y[i] ^= at(i, j) & x[j];
    return y;
  }

  friend bool operator==(const DenseGf2&, const DenseGf2&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> m_;
};

/// 256x256 one-step map on the age-ordered state (word 0 oldest, bit 32i+b
/// is bit b of word i): words shift down by one and the newest word is
/// sum_j A_j v_{n-j}.
inline DenseGf2 xorshift_transition_dense() {
  constexpr std::size_t w = 32;
  const DenseGf2 I = DenseGf2::identity(w);
  const auto L = [&](unsigned k) { return DenseGf2::left(w, k); };
  const auto R = [&](unsigned k) { return DenseGf2::right(w, k); };
  // Coefficient of v_{n-j}, stored at age index 8 - j.
  std::array<DenseGf2, 8> coeff{DenseGf2(w), DenseGf2(w), DenseGf2(w),
                                DenseGf2(w), DenseGf2(w), DenseGf2(w),
                                DenseGf2(w), DenseGf2(w)};
  coeff[7] = (I + L(9)) * (I + L(13));  // v_{n-1}
  coeff[4] = I + L(7);                  // v_{n-4}
  coeff[3] = I + R(3);                  // v_{n-5}
  coeff[1] = I + R(10);                 // v_{n-7}
  coeff[0] = (I + L(24)) * (I + R(7));  // v_{n-8}

  DenseGf2 t(8 * w);
  for (std::size_t word = 0; word < 7; ++word)
    for (std::size_t b = 0; b < w; ++b) t.at(word * w + b, (word + 1) * w + b) = 1;
  for (std::size_t src = 0; src < 8; ++src)
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j)
        t.at(7 * w + i, src * w + j) = coeff[src].at(i, j);
  return t;
}

inline std::vector<std::uint8_t> words_to_bits(
    const std::array<std::uint32_t, 8>& words) {
  std::vector<std::uint8_t> bits(256);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t b = 0; b < 32; ++b) bits[32 * i + b] = (words[i] >> b) & 1;
  return bits;
}

inline std::array<std::uint32_t, 8> bits_to_words(
    const std::vector<std::uint8_t>& bits) {
  std::array<std::uint32_t, 8> words{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t b = 0; b < 32; ++b)
      words[i] |= static_cast<std::uint32_t>(bits[32 * i + b]) << b;
  return words;
}

// --- primality by trial division -------------------------------------------

inline bool prime_by_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace prngforge::oracle

#endif  // PRNGFORGE_TESTS_ORACLE_REFERENCE_HPP_
