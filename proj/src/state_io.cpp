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

#include "prngforge/state_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "prngforge/error.hpp"

namespace prngforge {
namespace {

constexpr const char* kMagic = "prngforge-state";
constexpr const char* kVersion = "v1";

void append_mwc(std::vector<std::uint64_t>& out, const CombinedMwc& m) {
  for (const MwcLane* lane : {&m.hi(), &m.lo()}) {
    out.push_back(lane->multiplier());
    out.push_back(lane->x());
    out.push_back(lane->carry());
  }
}

std::uint32_t narrow(std::uint64_t w, std::uint64_t limit) {
  if (w > limit) {
    throw Error(Errc::io_error,
                "state word " + std::to_string(w) + " exceeds " +
                    std::to_string(limit));
  }
  return static_cast<std::uint32_t>(w);
}

CombinedMwc mwc_from(std::span<const std::uint64_t> w) {
  auto u16 = [](std::uint64_t v) {
    return static_cast<std::uint16_t>(narrow(v, 0xFFFF));
  };
  return CombinedMwc(MwcLane(u16(w[0]), u16(w[1]), u16(w[2])),
                     MwcLane(u16(w[3]), u16(w[4]), u16(w[5])));
}

}  // namespace

std::size_t state_word_count(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::mwc: return 6;
    case GeneratorKind::xorshift256: return 9;
    case GeneratorKind::kiss: return 10;
    case GeneratorKind::lcg: return 3;
    case GeneratorKind::shr3: return 1;
  }
  return 0;
}

std::vector<std::uint64_t> state_words(const AnyGenerator& g) {
  std::vector<std::uint64_t> out;
  switch (kind_of(g)) {
    case GeneratorKind::mwc: append_mwc(out, std::get<CombinedMwc>(g)); break;
    case GeneratorKind::xorshift256: {
      const auto& x = std::get<XorShift256>(g);
      out.push_back(x.cursor());
      out.insert(out.end(), x.words().begin(), x.words().end());
      break;
    }
    case GeneratorKind::kiss: {
      const auto& k = std::get<Kiss>(g);
      append_mwc(out, k.mwc());
      out.push_back(k.shr3().value());
      out.push_back(k.lcg().value());
      out.push_back(k.lcg().multiplier());
      out.push_back(k.lcg().increment());
      break;
    }
    case GeneratorKind::lcg: {
      const auto& l = std::get<Lcg>(g);
      out = {l.value(), l.multiplier(), l.increment()};
      break;
    }
    case GeneratorKind::shr3: out.push_back(std::get<Shr3>(g).value()); break;
  }
  return out;
}

AnyGenerator generator_from_words(GeneratorKind kind,
                                  std::span<const std::uint64_t> w) {
  if (w.size() != state_word_count(kind)) {
    throw Error(Errc::io_error,
                "state for '" + std::string(kind_name(kind)) + "' needs " +
                    std::to_string(state_word_count(kind)) + " words, got " +
                    std::to_string(w.size()));
  }
  constexpr std::uint64_t k32 = 0xFFFFFFFF;
  switch (kind) {
    case GeneratorKind::mwc: return mwc_from(w);
    case GeneratorKind::xorshift256: {
      XorShift256::Words v{};
      for (std::size_t i = 0; i < 8; ++i) v[i] = narrow(w[i + 1], k32);
      return XorShift256(v, narrow(w[0], 7));
    }
    case GeneratorKind::kiss:
      return Kiss(mwc_from(w.first(6)), Shr3(narrow(w[6], k32)),
                  Lcg(narrow(w[7], k32), narrow(w[8], k32), narrow(w[9], k32)));
    case GeneratorKind::lcg:
      return Lcg(narrow(w[0], k32), narrow(w[1], k32), narrow(w[2], k32));
    case GeneratorKind::shr3: return Shr3(narrow(w[0], k32));
  }
  throw Error(Errc::io_error, "unknown generator kind");
}

void write_states(std::ostream& out, std::span<const AnyGenerator> states) {
  if (states.empty()) {
    throw Error(Errc::invalid_argument, "no states to write");
  }
  const GeneratorKind kind = kind_of(states.front());
  out << kMagic << ' ' << kVersion << ' ' << kind_name(kind) << '\n';
  for (const AnyGenerator& g : states) {
    if (kind_of(g) != kind) {
      throw Error(Errc::invalid_argument, "mixed generator kinds in state file");
    }
    for (std::uint64_t w : state_words(g)) out << w << '\n';
  }
  if (!out) throw Error(Errc::io_error, "failed to write state file");
}

std::vector<AnyGenerator> read_states(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw Error(Errc::io_error, "empty state file");
  }
  std::istringstream hs(header);
  std::string magic, version, kind_str, extra;
  hs >> magic >> version >> kind_str;
  if (magic != kMagic || version != kVersion || kind_str.empty() ||
      (hs >> extra)) {
    throw Error(Errc::io_error, "bad state header: " + header);
  }
  const GeneratorKind kind = parse_generator_kind(kind_str);

  std::vector<std::uint64_t> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t pos = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(line, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != line.size()) {
      throw Error(Errc::io_error, "bad state word: " + line);
    }
    words.push_back(value);
  }
  const std::size_t per = state_word_count(kind);
  if (words.empty() || words.size() % per != 0) {
    throw Error(Errc::io_error, "state word count " +
                                    std::to_string(words.size()) +
                                    " is not a multiple of " +
                                    std::to_string(per));
  }
  std::vector<AnyGenerator> out;
  const std::span<const std::uint64_t> all(words);
  for (std::size_t i = 0; i < words.size(); i += per) {
    out.push_back(generator_from_words(kind, all.subspan(i, per)));
  }
  return out;
}

}  // namespace prngforge
