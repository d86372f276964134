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

// Parallel stream ensembles.
//
// Three ways to hand out independent streams:
//   parameterize  each stream is a distinct generator (own multiplier pair
//                 and seeds); works for every kind.
//   split         stream j owns the contiguous block [jB, (j+1)B) of one
//                 master sequence.
//   leapfrog      stream j owns R_j, R_{j+N}, R_{j+2N}, ...
// Splitting and leapfrogging need jump-ahead, which only the LCG (affine
// composition) and the eight-word xorshift (GF(2) matrix powers) provide.

#ifndef PRNGFORGE_STREAMS_HPP_
#define PRNGFORGE_STREAMS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "prngforge/generators.hpp"
#include "prngforge/gf2.hpp"

namespace prngforge {

// --- LCG jump ----------------------------------------------------------------

/// The affine map X -> mul * X + add (mod 2^32).
struct LcgAffine {
  std::uint32_t mul = 1;
  std::uint32_t add = 0;

  /// (outer after inner)(X) = outer(inner(X)).
  friend constexpr LcgAffine compose(LcgAffine outer, LcgAffine inner) noexcept {
    return {outer.mul * inner.mul, outer.mul * inner.add + outer.add};
  }
  std::uint32_t operator()(std::uint32_t x) const noexcept {
    return mul * x + add;
  }
};

/// k-fold composition of one LCG step: mul = a^k and
/// add = c * (1 + a + ... + a^(k-1)), both mod 2^32, in O(log k).
LcgAffine lcg_jump_map(std::uint32_t multiplier, std::uint32_t increment,
                       std::uint64_t k) noexcept;

/// State after exactly k calls of next().
Lcg lcg_jump(const Lcg& s, std::uint64_t k) noexcept;

// --- XorShift256 jump --------------------------------------------------------

/// Maps a generator to the age-ordered bit vector: word 0 is the oldest
/// buffer entry, word 7 the newest. Word i occupies vector bits
/// 32i .. 32i+31.
Gf2Vector256 to_age_vector(const XorShift256& s) noexcept;

/// Inverse of to_age_vector for a given cursor. Throws Error{zero_state}.
XorShift256 from_age_vector(const Gf2Vector256& v, unsigned cursor);

/// One-step transition on age vectors, assembled column by column by
/// stepping each unit state.
const BitMatrix256& xorshift256_transition();

/// The transition matrix raised to a fixed number of steps.
class JumpMatrix {
 public:
  /// Square-and-multiply over GF(2); steps == 0 gives the identity.
  explicit JumpMatrix(std::uint64_t steps);

  std::uint64_t steps() const noexcept { return steps_; }
  const BitMatrix256& matrix() const noexcept { return matrix_; }

  /// State after exactly steps() calls of next(), cursor included.
  XorShift256 apply(const XorShift256& s) const;

 private:
  std::uint64_t steps_;
  BitMatrix256 matrix_;
};

inline JumpMatrix build_xorshift_jump(std::uint64_t steps) {
  return JumpMatrix(steps);
}

/// Fixed-distance jump for any jumpable kind.
class JumpAhead {
 public:
  /// Throws Error{unsupported} for kinds without jump-ahead.
  JumpAhead(GeneratorKind kind, std::uint64_t steps);

  GeneratorKind kind() const noexcept { return kind_; }
  std::uint64_t steps() const noexcept { return steps_; }

  /// g must hold the constructor's kind. LCG jumps honor g's own multiplier
  /// and increment when they differ from the defaults.
  void apply(AnyGenerator& g) const;

 private:
  GeneratorKind kind_;
  std::uint64_t steps_;
  std::shared_ptr<const JumpMatrix> matrix_;
};

/// Process-wide cache keyed by (kind, steps). Entries are immutable.
std::shared_ptr<const JumpAhead> cached_jump(GeneratorKind kind,
                                             std::uint64_t steps);

/// jump(g, k) for any jumpable generator; throws Error{unsupported} else.
AnyGenerator jump(const AnyGenerator& g, std::uint64_t steps);

// --- Streams -----------------------------------------------------------------

enum class Scheme { parameterize, split, leapfrog };

std::string_view scheme_name(Scheme scheme) noexcept;
/// Accepts param, parameterize, split, leapfrog.
Scheme parse_scheme(std::string_view name);

struct EnsembleConfig {
  GeneratorKind kind = GeneratorKind::kiss;
  std::uint64_t stream_count = 1;
  std::uint64_t per_stream_count = 1;
  std::uint64_t master_seed = 0;
  Scheme scheme = Scheme::parameterize;
  unsigned worker_count = 1;
};

/// One stream of an ensemble. Split streams refuse to run past their block
/// (Error{out_of_range}); leapfrog streams jump N positions per output.
class Stream {
 public:
  explicit Stream(AnyGenerator generator,
                  std::optional<std::uint64_t> budget = std::nullopt,
                  std::shared_ptr<const JumpAhead> leap = nullptr)
      : gen_(std::move(generator)), budget_(budget), leap_(std::move(leap)) {}

  std::uint32_t next();
  /// Fills out with consecutive outputs; equivalent to repeated next().
  void fill(std::span<std::uint32_t> out);

  /// Current generator state. For leapfrog streams this is the state whose
  /// next step yields the stream's next output.
  const AnyGenerator& generator() const noexcept { return gen_; }
  GeneratorKind kind() const noexcept { return kind_of(gen_); }
  std::optional<std::uint64_t> remaining() const noexcept { return budget_; }
  std::uint64_t leap_stride() const noexcept {
    return leap_ ? leap_->steps() : 1;
  }

 private:
  void consume(std::uint64_t n);

  AnyGenerator gen_;
  std::optional<std::uint64_t> budget_;
  std::shared_ptr<const JumpAhead> leap_;
};

/// Master generator used by split and leapfrog: stream 0 of the master seed.
AnyGenerator master_generator(GeneratorKind kind, std::uint64_t master_seed);

/// Stream j starts at jump(j * per_stream_count) from the master state and
/// may produce exactly per_stream_count values.
std::vector<Stream> split_streams(const EnsembleConfig& cfg);

/// Stream j yields R_j, R_{j+N}, ... with N = stream_count.
std::vector<Stream> leapfrog_streams(const EnsembleConfig& cfg);

/// Stream i is built from seed_streams(master_seed, N)[i].
std::vector<Stream> parameterize_streams(const EnsembleConfig& cfg);

/// Dispatches on cfg.scheme after validating cfg.
std::vector<Stream> make_streams(const EnsembleConfig& cfg);

/// Throws Error{invalid_argument | unsupported} for bad configurations.
void validate(const EnsembleConfig& cfg);

/// Order-sensitive digest of a block: FNV-1a 64 over the little-endian
/// bytes of each word.
std::uint64_t digest_words(std::span<const std::uint32_t> words) noexcept;

struct EnsembleSummary {
  std::uint64_t stream_count = 0;
  std::uint64_t per_stream_count = 0;
  std::vector<std::uint64_t> digests;
  /// Continuation states, one per stream.
  std::vector<AnyGenerator> final_states;
};

/// Receives each stream's block in stream order after generation.
using EnsembleSink =
    std::function<void(std::size_t stream, std::span<const std::uint32_t>)>;

/// Generates per_stream_count values for every stream into pre-sized,
/// stream-major regions using worker_count threads, then hands each block
/// to the sink in stream order. Output never depends on worker_count.
/// Sink exceptions are rethrown as Error{sink_failure} naming the stream.
EnsembleSummary generate_ensemble(const EnsembleConfig& cfg,
                                  const EnsembleSink& sink = {});

/// Same as generate_ensemble but writes into a caller-owned stream-major
/// buffer of exactly stream_count * per_stream_count words.
EnsembleSummary generate_ensemble_into(const EnsembleConfig& cfg,
                                       std::span<std::uint32_t> out);

}  // namespace prngforge

#endif  // PRNGFORGE_STREAMS_HPP_
