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

// A small, self-contained statistical battery for 32-bit word streams.
//
// It is not DIEHARD or TestU01; raw streams can be exported with
// `prngforge gen --format u32le` and fed to those suites directly.

#ifndef PRNGFORGE_STATS_HPP_
#define PRNGFORGE_STATS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prngforge/generators.hpp"
#include "prngforge/multipliers.hpp"

namespace prngforge::stats {

inline constexpr double kFailAlpha = 1e-3;
inline constexpr double kSuspectAlpha = 1e-2;

enum class Verdict { pass, suspect, fail };

std::string_view verdict_name(Verdict v) noexcept;

/// How the p-value was obtained. For normal statistics the p-value is
/// already two-sided, so p near 1 means "right at the mean". For
/// chi-square statistics p is the upper tail, and p near 1 means the fit is
/// too good to be random.
enum class PValueKind { two_sided_normal, chi_square_upper };

/// p < 1e-3 fails, p < 1e-2 is suspect. Chi-square p-values above
/// 1 - 1e-2 are suspect (too uniform) but never fail.
Verdict classify(double p_value, PValueKind kind) noexcept;

struct TestResult {
  std::string test_name;
  std::uint64_t n_samples = 0;
  double statistic = 0;
  double p_value = 0;
  Verdict verdict = Verdict::fail;
  std::string note;  // reason for degenerate inputs, empty otherwise
};

/// Two-sided tail of the standard normal, erfc(|z| / sqrt 2).
double normal_two_sided_p(double z) noexcept;
/// Upper tail of chi-square with df degrees of freedom.
double chi_square_upper_p(double x, double df);
/// Kolmogorov limiting distribution, P(sqrt(n) D_n > lambda).
double kolmogorov_upper_p(double lambda) noexcept;

/// Kolmogorov-Smirnov distance of values in [0, 1] from the uniform
/// distribution. Only the lower tail of p matters, so p near 1 passes.
TestResult ks_uniformity(std::span<const double> values);

/// Frequency test over all 32 n bits. Requires n >= 10^4.
TestResult monobit(std::span<const std::uint32_t> samples);

/// Chi-square over the 256 values of the little-endian bytes, 255 degrees of
/// freedom. Requires n >= 10^5.
TestResult chi2_bytes(std::span<const std::uint32_t> samples);

/// Wald-Wolfowitz runs test on the bit string (each word MSB first),
/// conditioned on the observed number of ones. Requires n >= 10^4.
TestResult runs_test(std::span<const std::uint32_t> samples);

/// Pearson correlation between x_i and x_{i+lag}; sqrt(n - lag) * r is
/// compared with N(0, 1). Requires n >= 10^4 and 1 <= lag <= 64.
TestResult serial_correlation(std::span<const std::uint32_t> samples,
                              unsigned lag);

/// m^3 / 2^(bits + 2), the Poisson mean of duplicate spacings.
double birthday_lambda(unsigned m, unsigned bits) noexcept;

/// Birthday spacings: each trial takes m consecutive words, uses their top
/// `bits` bits as birthdays in a year of 2^bits days, sorts them and counts
/// repeated values among the m circular spacings. The per-trial counts are
/// compared with Poisson(lambda) by a chi-square over bins with expected
/// count >= 5. Trials = n / m, at least 200. Requires m <= 4096,
/// bits <= 30 and lambda in [0.1, 20].
TestResult birthday_spacings(std::span<const std::uint32_t> samples,
                             unsigned m, unsigned bits);

enum class Level { quick, full };

std::string_view level_name(Level level) noexcept;
Level parse_level(std::string_view name);

/// Minimum sample count: 10^6 words for quick, 10^8 for full.
std::uint64_t level_minimum(Level level) noexcept;

/// Runs every test of the level over the given words.
std::vector<TestResult> run_battery_on(std::span<const std::uint32_t> samples,
                                       Level level);

/// Generates n words from the generator described by (kind, params) and
/// runs the battery. Throws Error{invalid_argument} when n is below the
/// level minimum.
std::vector<TestResult> run_battery(GeneratorKind kind,
                                    const StreamParams& params,
                                    std::uint64_t n, Level level);

struct BatterySummary {
  unsigned failures = 0;
  unsigned suspects = 0;
  bool passed() const noexcept { return failures == 0; }
};

BatterySummary summarize(std::span<const TestResult> results) noexcept;

/// One line per test, "test_name p_value verdict", then a summary line.
std::string format_battery(std::span<const TestResult> results);
/// CSV: test_name,n_samples,statistic,p_value,verdict
std::string format_battery_machine(std::span<const TestResult> results);

}  // namespace prngforge::stats

#endif  // PRNGFORGE_STATS_HPP_
