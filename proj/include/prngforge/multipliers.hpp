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

// Stream parameterization: the MWC multiplier table, the unranking of
// multiplier pairs, and per-stream seed derivation from a master seed.

#ifndef PRNGFORGE_MULTIPLIERS_HPP_
#define PRNGFORGE_MULTIPLIERS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "prngforge/generators.hpp"

namespace prngforge {

/// Ascending list of multipliers a in [2, 2^base_bits) for which
/// a * 2^base_bits - 1 is a safeprime.
struct MultiplierTable {
  unsigned base_bits = kMwcBaseBits;
  std::vector<std::uint32_t> multipliers;

  std::size_t size() const noexcept { return multipliers.size(); }
  std::uint32_t operator[](std::size_t i) const { return multipliers[i]; }
  bool contains(std::uint32_t a) const;

  /// Number of unordered pairs, C(size, 2).
  std::uint64_t pair_count() const noexcept {
    const std::uint64_t n = size();
    return n < 2 ? 0 : n * (n - 1) / 2;
  }
};

/// base_bits must be 8 or 16; anything else throws Error{unsupported}.
MultiplierTable enumerate_multipliers(unsigned base_bits);

/// The 16-bit table, enumerated once per process.
const MultiplierTable& mwc16_multipliers();

/// Fixture format: one decimal multiplier per line, ascending, each line
/// terminated by '\n'.
void write_multiplier_fixture(std::ostream& out, const MultiplierTable& table);
MultiplierTable read_multiplier_fixture(std::istream& in, unsigned base_bits);

struct MultiplierPair {
  std::uint32_t hi;  // smaller multiplier, drives output bits 31..16
  std::uint32_t lo;

  friend bool operator==(const MultiplierPair&, const MultiplierPair&) =
      default;
};

/// Colexicographic unranking of 2-combinations: rank C(j, 2) + i maps to
/// (table[i], table[j]) with i < j. Throws Error{out_of_range} naming the
/// number of pairs when stream_index >= C(|table|, 2).
MultiplierPair pair_for_stream(const MultiplierTable& table,
                               std::uint64_t stream_index);

/// Inverse of the index arithmetic above, for i < j.
constexpr std::uint64_t pair_rank(std::uint64_t i, std::uint64_t j) noexcept {
  return j * (j - 1) / 2 + i;
}

/// SplitMix64: Weyl increment 0x9E3779B97F4A7C15 followed by the variant-13
/// finalizer.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// High half of the next 64-bit output.
  constexpr std::uint32_t next_word() noexcept {
    return static_cast<std::uint32_t>(next() >> 32);
  }

 private:
  std::uint64_t state_;
};

/// Everything needed to build any generator kind for one stream.
struct StreamParams {
  std::uint64_t stream_index = 0;
  MultiplierPair mwc_multipliers{kDefaultMwcHiMultiplier,
                                 kDefaultMwcLoMultiplier};
  /// MWC hi lane word, MWC lo lane word, SHR3 seed, LCG seed.
  std::array<std::uint32_t, 4> seeds{};
  /// Initial buffer for the eight-word xorshift, never all zero.
  std::array<std::uint32_t, 8> xorshift_seed{};

  friend bool operator==(const StreamParams&, const StreamParams&) = default;
};

/// Parameters for streams 0..count-1. Stream i takes multiplier pair i and
/// draws its MWC, SHR3 and xorshift seed words from a SplitMix64 sequence
/// started at mix(master_seed + (i + 1) * 0x9E3779B97F4A7C15), redrawing any
/// word that would violate a generator's construction invariants. The LCG
/// word is low32(master_seed) + i * 0x9E3779B9 (mod 2^32). Deterministic in
/// (master_seed, i). Throws Error{out_of_range} when count > C(392, 2).
std::vector<StreamParams> seed_streams(std::uint64_t master_seed,
                                       std::uint64_t count);

/// Single stream with an explicit multiplier pair (used for the default
/// 36969/18000 configuration).
StreamParams seed_stream(std::uint64_t master_seed, std::uint64_t stream_index,
                         MultiplierPair pair);

/// Stream 0 of master_seed with the default multipliers, validated against
/// the safeprime condition.
StreamParams default_stream_params(std::uint64_t master_seed);

/// Builds the generator of the given kind from a parameter record.
AnyGenerator make_generator(GeneratorKind kind, const StreamParams& params);

}  // namespace prngforge

#endif  // PRNGFORGE_MULTIPLIERS_HPP_
