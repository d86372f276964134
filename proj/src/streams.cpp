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

#include "prngforge/streams.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "prngforge/error.hpp"
#include "prngforge/multipliers.hpp"

namespace prngforge {

// --- LCG ---------------------------------------------------------------------

LcgAffine lcg_jump_map(std::uint32_t multiplier, std::uint32_t increment,
                       std::uint64_t k) noexcept {
  LcgAffine result;
  LcgAffine base{multiplier, increment};
  while (k != 0) {
    if (k & 1) result = compose(base, result);
    k >>= 1;
    if (k != 0) base = compose(base, base);
  }
  return result;
}

Lcg lcg_jump(const Lcg& s, std::uint64_t k) noexcept {
  const LcgAffine map = lcg_jump_map(s.multiplier(), s.increment(), k);
  return Lcg(map(s.value()), s.multiplier(), s.increment());
}

// --- XorShift256 -------------------------------------------------------------

Gf2Vector256 to_age_vector(const XorShift256& s) noexcept {
  Gf2Vector256 v{};
  const auto& w = s.words();
  for (unsigned age = 0; age < 8; ++age) {
    const std::uint64_t word = w[(s.cursor() + age) & 7];
    v[age >> 1] |= word << (32 * (age & 1));
  }
  return v;
}

XorShift256 from_age_vector(const Gf2Vector256& v, unsigned cursor) {
  XorShift256::Words w{};
  for (unsigned age = 0; age < 8; ++age) {
    w[(cursor + age) & 7] =
        static_cast<std::uint32_t>(v[age >> 1] >> (32 * (age & 1)));
  }
  return XorShift256(w, cursor);
}

namespace {

BitMatrix256 build_transition() {
  BitMatrix256 m;
  for (std::size_t col = 0; col < BitMatrix256::kDim; ++col) {
    Gf2Vector256 unit{};
    flip_bit(unit, col);
    XorShift256 g = from_age_vector(unit, 0);
    g.next();
    const Gf2Vector256 image = to_age_vector(g);
    for (std::size_t row = 0; row < BitMatrix256::kDim; ++row) {
      if (get_bit(image, row)) m.set(row, col, true);
    }
  }
  return m;
}

}  // namespace

const BitMatrix256& xorshift256_transition() {
  static const BitMatrix256 m = build_transition();
  return m;
}

JumpMatrix::JumpMatrix(std::uint64_t steps)
    : steps_(steps), matrix_(xorshift256_transition().power(steps)) {}

XorShift256 JumpMatrix::apply(const XorShift256& s) const {
  const unsigned cursor = static_cast<unsigned>((s.cursor() + steps_) & 7);
  return from_age_vector(matrix_.apply(to_age_vector(s)), cursor);
}

// --- JumpAhead ---------------------------------------------------------------

namespace {

[[noreturn]] void throw_not_jumpable(GeneratorKind kind) {
  throw Error(Errc::unsupported,
              "generator '" + std::string(kind_name(kind)) +
                  "' has no jump-ahead; split and leapfrog need lcg or "
                  "xorshift, use the param scheme instead");
}

}  // namespace

JumpAhead::JumpAhead(GeneratorKind kind, std::uint64_t steps)
    : kind_(kind), steps_(steps) {
  if (!is_jumpable(kind)) throw_not_jumpable(kind);
  if (kind == GeneratorKind::xorshift256) {
    matrix_ = std::make_shared<const JumpMatrix>(steps);
  }
}

void JumpAhead::apply(AnyGenerator& g) const {
  if (kind_of(g) != kind_) {
    throw Error(Errc::invalid_argument,
                "jump built for '" + std::string(kind_name(kind_)) +
                    "' applied to '" + std::string(kind_name(kind_of(g))) +
                    "'");
  }
  if (kind_ == GeneratorKind::lcg) {
    g = lcg_jump(std::get<Lcg>(g), steps_);
  } else {
    g = matrix_->apply(std::get<XorShift256>(g));
  }
}

std::shared_ptr<const JumpAhead> cached_jump(GeneratorKind kind,
                                             std::uint64_t steps) {
  static std::mutex mu;
  static std::map<std::pair<GeneratorKind, std::uint64_t>,
                  std::shared_ptr<const JumpAhead>>
      cache;
  if (!is_jumpable(kind)) throw_not_jumpable(kind);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{kind, steps}];
  if (!slot) slot = std::make_shared<const JumpAhead>(kind, steps);
  return slot;
}

AnyGenerator jump(const AnyGenerator& g, std::uint64_t steps) {
  AnyGenerator out = g;
  JumpAhead(kind_of(g), steps).apply(out);
  return out;
}

// --- Streams -----------------------------------------------------------------

std::string_view scheme_name(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::parameterize: return "param";
    case Scheme::split: return "split";
    case Scheme::leapfrog: return "leapfrog";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "param" || name == "parameterize") return Scheme::parameterize;
  if (name == "split") return Scheme::split;
  if (name == "leapfrog") return Scheme::leapfrog;
  throw Error(Errc::invalid_argument,
              "unknown scheme '" + std::string(name) +
                  "' (expected param, split or leapfrog)");
}

void Stream::consume(std::uint64_t n) {
  if (!budget_) return;
  if (n > *budget_) {
    throw Error(Errc::out_of_range,
                "split stream block exhausted: " + std::to_string(n) +
                    " values requested, " + std::to_string(*budget_) +
                    " left before the next stream's block");
  }
  *budget_ -= n;
}

std::uint32_t Stream::next() {
  consume(1);
  if (!leap_) return next_u32(gen_);
  AnyGenerator probe = gen_;
  const std::uint32_t value = next_u32(probe);
  leap_->apply(gen_);
  return value;
}

void Stream::fill(std::span<std::uint32_t> out) {
  consume(out.size());
  if (leap_) {
    for (auto& v : out) {
      AnyGenerator probe = gen_;
      v = next_u32(probe);
      leap_->apply(gen_);
    }
    return;
  }
  std::visit(
      [&](auto& g) {
        for (auto& v : out) v = g.next();
      },
      gen_);
}

AnyGenerator master_generator(GeneratorKind kind, std::uint64_t master_seed) {
  return make_generator(kind, seed_streams(master_seed, 1).front());
}

void validate(const EnsembleConfig& cfg) {
  if (cfg.stream_count < 1) {
    throw Error(Errc::invalid_argument, "stream count must be at least 1");
  }
  if (cfg.per_stream_count < 1) {
    throw Error(Errc::invalid_argument,
                "per-stream count must be at least 1");
  }
  if (cfg.worker_count < 1) {
    throw Error(Errc::invalid_argument, "worker count must be at least 1");
  }
  if (cfg.stream_count >
      std::numeric_limits<std::size_t>::max() / cfg.per_stream_count / 4) {
    throw Error(Errc::invalid_argument,
                "stream count times per-stream count overflows");
  }
  if (cfg.scheme != Scheme::parameterize && !is_jumpable(cfg.kind)) {
    throw_not_jumpable(cfg.kind);
  }
  if (cfg.scheme == Scheme::parameterize) {
    const std::uint64_t pairs = mwc16_multipliers().pair_count();
    if (cfg.stream_count > pairs) {
      throw Error(Errc::out_of_range,
                  "stream count " + std::to_string(cfg.stream_count) +
                      " exceeds the " + std::to_string(pairs) +
                      " distinct multiplier pairs");
    }
  }
}

std::vector<Stream> split_streams(const EnsembleConfig& cfg) {
  EnsembleConfig c = cfg;
  c.scheme = Scheme::split;
  validate(c);
  AnyGenerator g = master_generator(cfg.kind, cfg.master_seed);
  const JumpAhead block(cfg.kind, cfg.per_stream_count);
  std::vector<Stream> out;
  out.reserve(cfg.stream_count);
  for (std::uint64_t j = 0; j < cfg.stream_count; ++j) {
    out.emplace_back(g, cfg.per_stream_count);
    if (j + 1 < cfg.stream_count) block.apply(g);
  }
  return out;
}

std::vector<Stream> leapfrog_streams(const EnsembleConfig& cfg) {
  EnsembleConfig c = cfg;
  c.scheme = Scheme::leapfrog;
  validate(c);
  AnyGenerator g = master_generator(cfg.kind, cfg.master_seed);
  auto stride = cached_jump(cfg.kind, cfg.stream_count);
  const JumpAhead one(cfg.kind, 1);
  std::vector<Stream> out;
  out.reserve(cfg.stream_count);
  for (std::uint64_t j = 0; j < cfg.stream_count; ++j) {
    out.emplace_back(g, std::nullopt, stride);
    if (j + 1 < cfg.stream_count) one.apply(g);
  }
  return out;
}

std::vector<Stream> parameterize_streams(const EnsembleConfig& cfg) {
  EnsembleConfig c = cfg;
  c.scheme = Scheme::parameterize;
  validate(c);
  std::vector<Stream> out;
  out.reserve(cfg.stream_count);
  for (const StreamParams& p : seed_streams(cfg.master_seed, cfg.stream_count)) {
    out.emplace_back(make_generator(cfg.kind, p));
  }
  return out;
}

std::vector<Stream> make_streams(const EnsembleConfig& cfg) {
  switch (cfg.scheme) {
    case Scheme::parameterize: return parameterize_streams(cfg);
    case Scheme::split: return split_streams(cfg);
    case Scheme::leapfrog: return leapfrog_streams(cfg);
  }
  throw Error(Errc::invalid_argument, "unknown scheme");
}

std::uint64_t digest_words(std::span<const std::uint32_t> words) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t w : words) {
    for (int b = 0; b < 4; ++b) {
      h ^= (w >> (8 * b)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

EnsembleSummary generate_ensemble_into(const EnsembleConfig& cfg,
                                       std::span<std::uint32_t> out) {
  validate(cfg);
  const std::uint64_t n = cfg.stream_count;
  const std::uint64_t m = cfg.per_stream_count;
  if (out.size() != n * m) {
    throw Error(Errc::invalid_argument,
                "output region holds " + std::to_string(out.size()) +
                    " words, ensemble needs " + std::to_string(n * m));
  }
  std::vector<Stream> streams = make_streams(cfg);

  EnsembleSummary summary;
  summary.stream_count = n;
  summary.per_stream_count = m;
  summary.digests.assign(n, 0);

  std::atomic<std::uint64_t> next_stream{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto work = [&] {
    for (;;) {
      const std::uint64_t i = next_stream.fetch_add(1);
      if (i >= n) return;
      try {
        auto region = out.subspan(i * m, m);
        streams[i].fill(region);
        summary.digests[i] = digest_words(region);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next_stream = n;
        return;
      }
    }
  };

  const auto workers =
      static_cast<unsigned>(std::min<std::uint64_t>(cfg.worker_count, n));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  summary.final_states.reserve(n);
  for (const Stream& s : streams) summary.final_states.push_back(s.generator());
  return summary;
}

EnsembleSummary generate_ensemble(const EnsembleConfig& cfg,
                                  const EnsembleSink& sink) {
  validate(cfg);
  std::vector<std::uint32_t> buffer(cfg.stream_count * cfg.per_stream_count);
  EnsembleSummary summary = generate_ensemble_into(cfg, buffer);
  if (sink) {
    const std::span<const std::uint32_t> all(buffer);
    for (std::uint64_t i = 0; i < cfg.stream_count; ++i) {
      try {
        sink(i, all.subspan(i * cfg.per_stream_count, cfg.per_stream_count));
      } catch (const std::exception& e) {
        throw Error(Errc::sink_failure,
                    "sink failed on stream " + std::to_string(i) + ": " +
                        e.what());
      }
    }
  }
  return summary;
}

}  // namespace prngforge
