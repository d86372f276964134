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

#include "prngforge/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "prngforge/error.hpp"
#include "prngforge/primality.hpp"

namespace prngforge {

bool MultiplierTable::contains(std::uint32_t a) const {
  return std::binary_search(multipliers.begin(), multipliers.end(), a);
}

MultiplierTable enumerate_multipliers(unsigned base_bits) {
  if (base_bits != 8 && base_bits != 16) {
    throw Error(Errc::unsupported, "base_bits must be 8 or 16, got " +
                                       std::to_string(base_bits));
  }
  MultiplierTable table;
  table.base_bits = base_bits;
  const std::uint32_t end = 1u << base_bits;
  for (std::uint32_t a = 2; a < end; ++a) {
    if (is_mwc_multiplier(a, base_bits)) table.multipliers.push_back(a);
  }
  return table;
}

const MultiplierTable& mwc16_multipliers() {
  static const MultiplierTable table = enumerate_multipliers(kMwcBaseBits);
  return table;
}

void write_multiplier_fixture(std::ostream& out, const MultiplierTable& table) {
  for (std::uint32_t a : table.multipliers) out << a << '\n';
}

MultiplierTable read_multiplier_fixture(std::istream& in, unsigned base_bits) {
  MultiplierTable table;
  table.base_bits = base_bits;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t pos = 0;
    const unsigned long value = std::stoul(line, &pos);
    if (pos != line.size()) {
      throw Error(Errc::io_error, "bad multiplier fixture line: " + line);
    }
    if (!table.multipliers.empty() && value <= table.multipliers.back()) {
      throw Error(Errc::io_error, "multiplier fixture is not ascending at " +
                                      line);
    }
    table.multipliers.push_back(static_cast<std::uint32_t>(value));
  }
  return table;
}

MultiplierPair pair_for_stream(const MultiplierTable& table,
                               std::uint64_t stream_index) {
  const std::uint64_t count = table.pair_count();
  if (stream_index >= count) {
    throw Error(Errc::out_of_range,
                "stream index " + std::to_string(stream_index) +
                    " out of range: only " + std::to_string(count) +
                    " multiplier pairs exist (maximum index " +
                    std::to_string(count == 0 ? 0 : count - 1) + ")");
  }
  // Largest j with C(j, 2) <= index; the float guess is off by at most one.
  auto j = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(stream_index))) / 2.0);
  while (j * (j - 1) / 2 > stream_index) --j;
  while ((j + 1) * j / 2 <= stream_index) ++j;
  const std::uint64_t i = stream_index - j * (j - 1) / 2;
  return {table[i], table[j]};
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

StreamParams seed_stream(std::uint64_t master_seed, std::uint64_t stream_index,
                         MultiplierPair pair) {
  StreamParams p;
  p.stream_index = stream_index;
  p.mwc_multipliers = pair;

  SplitMix64 rng(SplitMix64::mix(master_seed + (stream_index + 1) * kGolden));
  const auto hi = static_cast<std::uint16_t>(pair.hi);
  const auto lo = static_cast<std::uint16_t>(pair.lo);

  std::uint32_t w;
  do w = rng.next_word();
  while (!MwcLane::is_valid_seed_word(hi, w));
  p.seeds[0] = w;
  do w = rng.next_word();
  while (!MwcLane::is_valid_seed_word(lo, w));
  p.seeds[1] = w;
  do w = rng.next_word();
  while (w == 0);
  p.seeds[2] = w;
  // Every LCG seed lies on the same full-period cycle, so the seed only
  // picks an offset: the master seed itself for stream 0, then Weyl steps.
  p.seeds[3] = static_cast<std::uint32_t>(master_seed) +
               static_cast<std::uint32_t>(stream_index) * 0x9E3779B9u;

  for (;;) {
    bool any = false;
    for (auto& v : p.xorshift_seed) {
      v = rng.next_word();
      any = any || v != 0;
    }
    if (any) break;
  }
  return p;
}

std::vector<StreamParams> seed_streams(std::uint64_t master_seed,
                                       std::uint64_t count) {
  const MultiplierTable& table = mwc16_multipliers();
  if (count > table.pair_count()) {
    throw Error(Errc::out_of_range,
                "stream count " + std::to_string(count) +
                    " exceeds the " + std::to_string(table.pair_count()) +
                    " distinct multiplier pairs");
  }
  std::vector<StreamParams> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(seed_stream(master_seed, i, pair_for_stream(table, i)));
  }
  return out;
}

StreamParams default_stream_params(std::uint64_t master_seed) {
  for (std::uint32_t a : {kDefaultMwcHiMultiplier, kDefaultMwcLoMultiplier}) {
    if (!is_mwc_multiplier(a, kMwcBaseBits)) {
      throw Error(Errc::invalid_multiplier,
                  "default multiplier " + std::to_string(a) +
                      " fails the safeprime check");
    }
  }
  return seed_stream(master_seed, 0,
                     {kDefaultMwcHiMultiplier, kDefaultMwcLoMultiplier});
}

AnyGenerator make_generator(GeneratorKind kind, const StreamParams& params) {
  const auto mwc = [&] {
    return CombinedMwc(
        MwcLane::from_seed_word(
            static_cast<std::uint16_t>(params.mwc_multipliers.hi),
            params.seeds[0]),
        MwcLane::from_seed_word(
            static_cast<std::uint16_t>(params.mwc_multipliers.lo),
            params.seeds[1]));
  };
  switch (kind) {
    case GeneratorKind::mwc: return mwc();
    case GeneratorKind::xorshift256: return XorShift256(params.xorshift_seed);
    case GeneratorKind::kiss:
      return Kiss(mwc(), Shr3(params.seeds[2]), Lcg(params.seeds[3]));
    case GeneratorKind::lcg: return Lcg(params.seeds[3]);
    case GeneratorKind::shr3: return Shr3(params.seeds[2]);
  }
  throw Error(Errc::invalid_argument, "unknown generator kind");
}

}  // namespace prngforge
