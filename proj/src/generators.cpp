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

#include "prngforge/generators.hpp"

#include <algorithm>
#include <string>

#include "prngforge/error.hpp"
#include "prngforge/primality.hpp"

namespace prngforge {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_multiplier: return "invalid_multiplier";
    case Errc::absorbing_state: return "absorbing_state";
    case Errc::zero_state: return "zero_state";
    case Errc::invalid_seed: return "invalid_seed";
    case Errc::misaligned_cursor: return "misaligned_cursor";
    case Errc::out_of_range: return "out_of_range";
    case Errc::unsupported: return "unsupported";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::clock_failure: return "clock_failure";
    case Errc::io_error: return "io_error";
    case Errc::sink_failure: return "sink_failure";
  }
  return "unknown";
}

// --- MwcLane ---------------------------------------------------------------

MwcLane::MwcLane(std::uint16_t multiplier, std::uint16_t x,
                 std::uint16_t carry)
    : multiplier_(multiplier), x_(x), carry_(carry) {
  if (!is_mwc_multiplier(multiplier, kMwcBaseBits)) {
    throw Error(Errc::invalid_multiplier,
                "MWC multiplier " + std::to_string(multiplier) +
                    " does not make a*2^16-1 a safeprime");
  }
  if ((x == 0 && carry == 0) ||
      (x == kMwcMask && carry == multiplier - 1u)) {
    throw Error(Errc::absorbing_state,
                "MWC seed (x=" + std::to_string(x) +
                    ", c=" + std::to_string(carry) +
                    ") is a fixed point of the recurrence");
  }
  if (carry >= multiplier) {
    throw Error(Errc::invalid_seed, "MWC carry " + std::to_string(carry) +
                                        " must be below the multiplier " +
                                        std::to_string(multiplier));
  }
}

MwcLane MwcLane::from_seed_word(std::uint16_t multiplier, std::uint32_t word) {
  return MwcLane(multiplier, static_cast<std::uint16_t>(word & kMwcMask),
                 static_cast<std::uint16_t>(word >> 16));
}

bool MwcLane::is_valid_seed_word(std::uint16_t multiplier,
                                 std::uint32_t word) noexcept {
  const std::uint32_t x = word & kMwcMask;
  const std::uint32_t c = word >> 16;
  if (c >= multiplier) return false;
  if (x == 0 && c == 0) return false;
  if (x == kMwcMask && c == multiplier - 1u) return false;
  return true;
}

// --- CombinedMwc -----------------------------------------------------------

CombinedMwc::CombinedMwc(MwcLane hi, MwcLane lo) : hi_(hi), lo_(lo) {
  if (hi.multiplier() == lo.multiplier()) {
    throw Error(Errc::invalid_multiplier,
                "combined MWC lanes need distinct multipliers, both are " +
                    std::to_string(hi.multiplier()));
  }
}

CombinedMwc CombinedMwc::with_default_multipliers(std::uint32_t hi_word,
                                                  std::uint32_t lo_word) {
  return CombinedMwc(MwcLane::from_seed_word(kDefaultMwcHiMultiplier, hi_word),
                     MwcLane::from_seed_word(kDefaultMwcLoMultiplier, lo_word));
}

// --- XorShift256 -----------------------------------------------------------

XorShift256::XorShift256(const Words& words, unsigned cursor)
    : v_(words), k_(cursor) {
  if (cursor >= 8) {
    throw Error(Errc::invalid_argument,
                "xorshift cursor " + std::to_string(cursor) +
                    " outside [0, 8)");
  }
  if (std::all_of(words.begin(), words.end(),
                  [](std::uint32_t w) { return w == 0; })) {
    throw Error(Errc::zero_state,
                "xorshift state is all zero, a fixed point of the recurrence");
  }
}

XorShift256::Words XorShift256::next_block() {
  if (k_ != 0) {
    throw Error(Errc::misaligned_cursor,
                "next_block requires cursor 0, cursor is " +
                    std::to_string(k_));
  }
  std::uint32_t v0 = v_[0], v1 = v_[1], v2 = v_[2], v3 = v_[3];
  std::uint32_t v4 = v_[4], v5 = v_[5], v6 = v_[6], v7 = v_[7];

  // Each statement produces the newest word from (newest, n-4, n-5, n-7,
  // oldest) and overwrites the oldest.
  const auto step = [](std::uint32_t n1, std::uint32_t n4, std::uint32_t n5,
                       std::uint32_t n7, std::uint32_t n8) {
    std::uint32_t t = n1 ^ (n1 << 13);
    std::uint32_t y = t ^ (t << 9);
    y ^= n4 ^ (n4 << 7);
    y ^= n5 ^ (n5 >> 3);
    y ^= n7 ^ (n7 >> 10);
    t = n8 ^ (n8 >> 7);
    y ^= t ^ (t << 24);
    return y;
  };

  v0 = step(v7, v4, v3, v1, v0);
  v1 = step(v0, v5, v4, v2, v1);
  v2 = step(v1, v6, v5, v3, v2);
  v3 = step(v2, v7, v6, v4, v3);
  v4 = step(v3, v0, v7, v5, v4);
  v5 = step(v4, v1, v0, v6, v5);
  v6 = step(v5, v2, v1, v7, v6);
  v7 = step(v6, v3, v2, v0, v7);

  v_ = {v0, v1, v2, v3, v4, v5, v6, v7};
  return v_;
}

// --- Shr3 ------------------------------------------------------------------

Shr3::Shr3(std::uint32_t y) : y_(y) {
  if (y == 0) {
    throw Error(Errc::zero_state, "SHR3 seed 0 is a fixed point");
  }
}

// --- kinds -----------------------------------------------------------------

std::string_view kind_name(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::mwc: return "mwc";
    case GeneratorKind::xorshift256: return "xorshift";
    case GeneratorKind::kiss: return "kiss";
    case GeneratorKind::lcg: return "lcg";
    case GeneratorKind::shr3: return "shr3";
  }
  return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "xorshift256") return GeneratorKind::xorshift256;
  for (GeneratorKind kind : kAllGeneratorKinds) {
    if (kind_name(kind) == name) return kind;
  }
  throw Error(Errc::invalid_argument,
              "unknown generator '" + std::string(name) +
                  "' (expected mwc, xorshift, kiss, lcg or shr3)");
}

GeneratorKind kind_of(const AnyGenerator& g) noexcept {
  return static_cast<GeneratorKind>(g.index());
}

}  // namespace prngforge
