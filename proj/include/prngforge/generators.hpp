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

// Generator state types and their step functions.
//
// Every generator here is a plain value: copying a generator forks the
// stream, comparing two generators compares their complete state. None of
// them touch global state, so independent instances can be stepped from
// different threads freely. A single instance must not be stepped
// concurrently.

#ifndef PRNGFORGE_GENERATORS_HPP_
#define PRNGFORGE_GENERATORS_HPP_

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <variant>

namespace prngforge {

// ---------------------------------------------------------------------------
// Multiply-with-carry

inline constexpr unsigned kMwcBaseBits = 16;
inline constexpr std::uint32_t kMwcMask = (1u << kMwcBaseBits) - 1;

inline constexpr std::uint16_t kDefaultMwcHiMultiplier = 36969;
inline constexpr std::uint16_t kDefaultMwcLoMultiplier = 18000;

struct MwcDigit {
  std::uint32_t x;
  std::uint32_t carry;

  friend bool operator==(const MwcDigit&, const MwcDigit&) = default;
};

/// One multiply-with-carry step in base 2^base_bits (base_bits <= 16):
/// t = a*x + c, x' = t mod base, c' = t / base. Exposed for small-base
/// analysis; MwcLane is the production 16-bit form.
constexpr MwcDigit mwc_step(std::uint32_t multiplier, std::uint32_t x,
                            std::uint32_t carry, unsigned base_bits) noexcept {
  const std::uint32_t t = multiplier * x + carry;
  return {t & ((1u << base_bits) - 1), t >> base_bits};
}

/// A single 16-bit multiply-with-carry lane.
///
/// Valid states satisfy carry < multiplier and avoid the two fixed points
/// (0, 0) and (2^16 - 1, multiplier - 1). The multiplier must make
/// multiplier * 2^16 - 1 a safeprime. Under those conditions the carry
/// bound is preserved by every step.
class MwcLane {
 public:
  using result_type = std::uint16_t;

  /// Throws Error{invalid_multiplier | absorbing_state | invalid_seed}.
  MwcLane(std::uint16_t multiplier, std::uint16_t x, std::uint16_t carry);

  /// Seed word layout: x in bits 15..0, carry in bits 31..16.
  static MwcLane from_seed_word(std::uint16_t multiplier, std::uint32_t word);
  static bool is_valid_seed_word(std::uint16_t multiplier,
                                 std::uint32_t word) noexcept;

  std::uint16_t next() noexcept {
    const std::uint32_t t = multiplier_ * x_ + carry_;
    x_ = t & kMwcMask;
    carry_ = t >> kMwcBaseBits;
    return static_cast<std::uint16_t>(x_);
  }
  std::uint16_t operator()() noexcept { return next(); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  std::uint16_t multiplier() const noexcept {
    return static_cast<std::uint16_t>(multiplier_);
  }
  std::uint16_t x() const noexcept { return static_cast<std::uint16_t>(x_); }
  std::uint16_t carry() const noexcept {
    return static_cast<std::uint16_t>(carry_);
  }
  std::uint32_t seed_word() const noexcept { return (carry_ << 16) | x_; }

  friend bool operator==(const MwcLane&, const MwcLane&) = default;

 private:
  std::uint32_t multiplier_;
  std::uint32_t x_;
  std::uint32_t carry_;
};

/// Two MWC lanes with distinct multipliers. The high lane supplies output
/// bits 31..16 and the low lane bits 15..0.
class CombinedMwc {
 public:
  using result_type = std::uint32_t;

  /// Throws Error{invalid_multiplier} when the multipliers coincide.
  CombinedMwc(MwcLane hi, MwcLane lo);

  /// Lanes seeded from two seed words with the 36969/18000 multipliers.
  static CombinedMwc with_default_multipliers(std::uint32_t hi_word,
                                              std::uint32_t lo_word);

  std::uint32_t next() noexcept {
    const std::uint32_t h = hi_.next();
    const std::uint32_t l = lo_.next();
    return (h << 16) | l;
  }
  std::uint32_t operator()() noexcept { return next(); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  const MwcLane& hi() const noexcept { return hi_; }
  const MwcLane& lo() const noexcept { return lo_; }

  friend bool operator==(const CombinedMwc&, const CombinedMwc&) = default;

 private:
  MwcLane hi_;
  MwcLane lo_;
};

// ---------------------------------------------------------------------------
// XorShift, r = 8 words of w = 32 bits, s = 7 xorshifts.

/// Eight-word xorshift generator with period 2^256 - 1:
///
///   v_n = (I+L^9)(I+L^13) v_{n-1} + (I+L^7) v_{n-4} + (I+R^3) v_{n-5}
///       + (I+R^10) v_{n-7} + (I+L^24)(I+R^7) v_{n-8}
///
/// Matrix products act on column vectors, so the rightmost factor is applied
/// first. The state is a circular buffer; words()[cursor()] is v_{n-8}, the
/// oldest word, and is overwritten by the new output.
class XorShift256 {
 public:
  using result_type = std::uint32_t;
  using Words = std::array<std::uint32_t, 8>;

  /// Throws Error{zero_state} for the all-zero vector and
  /// Error{invalid_argument} for a cursor outside [0, 8).
  explicit XorShift256(const Words& words, unsigned cursor = 0);

  std::uint32_t next() noexcept {
    std::uint32_t t = v_[(k_ + 7) & 7];
    t ^= t << 13;
    std::uint32_t y = t ^ (t << 9);
    t = v_[(k_ + 4) & 7];
    y ^= t ^ (t << 7);
    t = v_[(k_ + 3) & 7];
    y ^= t ^ (t >> 3);
    t = v_[(k_ + 1) & 7];
    y ^= t ^ (t >> 10);
    t = v_[k_];
    t ^= t >> 7;
    y ^= t ^ (t << 24);
    v_[k_] = y;
    k_ = (k_ + 1) & 7;
    return y;
  }
  std::uint32_t operator()() noexcept { return next(); }

  /// Eight outputs with the circular buffer unrolled into straight-line
  /// code. Identical to eight calls of next(). Throws
  /// Error{misaligned_cursor} unless cursor() == 0.
  Words next_block();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  const Words& words() const noexcept { return v_; }
  unsigned cursor() const noexcept { return k_; }

  friend bool operator==(const XorShift256&, const XorShift256&) = default;

 private:
  Words v_;
  unsigned k_;
};

// ---------------------------------------------------------------------------
// KISS components

/// Single-word xorshift with shifts 13, 17, 5. Zero is a fixed point and
/// rejected at construction.
class Shr3 {
 public:
  using result_type = std::uint32_t;

  explicit Shr3(std::uint32_t y);

  std::uint32_t next() noexcept {
    y_ ^= y_ << 13;
    y_ ^= y_ >> 17;
    y_ ^= y_ << 5;
    return y_;
  }
  std::uint32_t operator()() noexcept { return next(); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  std::uint32_t value() const noexcept { return y_; }

  friend bool operator==(const Shr3&, const Shr3&) = default;

 private:
  std::uint32_t y_;
};

inline constexpr std::uint32_t kLcgMultiplier = 69069;
inline constexpr std::uint32_t kLcgIncrement = 1234567;

/// X' = (a X + c) mod 2^32; the modulus is the integer wraparound.
class Lcg {
 public:
  using result_type = std::uint32_t;

  explicit Lcg(std::uint32_t x, std::uint32_t multiplier = kLcgMultiplier,
               std::uint32_t increment = kLcgIncrement) noexcept
      : x_(x), a_(multiplier), c_(increment) {}

  std::uint32_t next() noexcept {
    x_ = a_ * x_ + c_;
    return x_;
  }
  std::uint32_t operator()() noexcept { return next(); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  std::uint32_t value() const noexcept { return x_; }
  std::uint32_t multiplier() const noexcept { return a_; }
  std::uint32_t increment() const noexcept { return c_; }

  friend bool operator==(const Lcg&, const Lcg&) = default;

 private:
  std::uint32_t x_;
  std::uint32_t a_;
  std::uint32_t c_;
};

/// Output = ((mwc ^ lcg) + shr3) mod 2^32 with all three stepped once.
constexpr std::uint32_t kiss_combine(std::uint32_t mwc, std::uint32_t lcg,
                                     std::uint32_t shr3) noexcept {
  return (mwc ^ lcg) + shr3;
}

class Kiss {
 public:
  using result_type = std::uint32_t;

  Kiss(CombinedMwc mwc, Shr3 shr3, Lcg lcg) noexcept
      : mwc_(mwc), shr3_(shr3), lcg_(lcg) {}

  std::uint32_t next() noexcept {
    const std::uint32_t m = mwc_.next();
    const std::uint32_t l = lcg_.next();
    const std::uint32_t s = shr3_.next();
    return kiss_combine(m, l, s);
  }
  std::uint32_t operator()() noexcept { return next(); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  const CombinedMwc& mwc() const noexcept { return mwc_; }
  const Shr3& shr3() const noexcept { return shr3_; }
  const Lcg& lcg() const noexcept { return lcg_; }

  friend bool operator==(const Kiss&, const Kiss&) = default;

 private:
  CombinedMwc mwc_;
  Shr3 shr3_;
  Lcg lcg_;
};

// ---------------------------------------------------------------------------

/// Maps a 32-bit word into [0, 1) in single precision. Only the top 24 bits
/// are used: scaling the full word would round 2^32 - 1 up to 1.0f.
constexpr float to_uniform(std::uint32_t v) noexcept {
  return static_cast<float>(v >> 8) * (1.0f / 16777216.0f);
}

// ---------------------------------------------------------------------------
// Kind-erased generator

enum class GeneratorKind { mwc, xorshift256, kiss, lcg, shr3 };

inline constexpr std::array<GeneratorKind, 5> kAllGeneratorKinds = {
    GeneratorKind::mwc, GeneratorKind::xorshift256, GeneratorKind::kiss,
    GeneratorKind::lcg, GeneratorKind::shr3};

/// Short names as used on the command line: mwc, xorshift, kiss, lcg, shr3.
std::string_view kind_name(GeneratorKind kind) noexcept;

/// Accepts the short names plus "xorshift256". Throws Error{invalid_argument}.
GeneratorKind parse_generator_kind(std::string_view name);

/// Only the F2-linear xorshift and the LCG admit cheap jump-ahead.
constexpr bool is_jumpable(GeneratorKind kind) noexcept {
  return kind == GeneratorKind::lcg || kind == GeneratorKind::xorshift256;
}

/// Variant alternatives are ordered like GeneratorKind.
using AnyGenerator = std::variant<CombinedMwc, XorShift256, Kiss, Lcg, Shr3>;

GeneratorKind kind_of(const AnyGenerator& g) noexcept;

inline std::uint32_t next_u32(AnyGenerator& g) noexcept {
  return std::visit([](auto& gen) -> std::uint32_t { return gen.next(); }, g);
}

}  // namespace prngforge

#endif  // PRNGFORGE_GENERATORS_HPP_
