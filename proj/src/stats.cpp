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

#include "prngforge/stats.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "prngforge/error.hpp"

namespace prngforge::stats {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(Errc::invalid_argument, message);
}

TestResult make_result(std::string name, std::uint64_t n, double statistic,
                       double p, PValueKind kind) {
  p = std::clamp(p, 0.0, 1.0);
  return {std::move(name), n, statistic, p, classify(p, kind), {}};
}

TestResult degenerate(std::string name, std::uint64_t n, std::string why) {
  return {std::move(name), n, 0.0, 0.0, Verdict::fail, std::move(why)};
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::suspect: return "suspect";
    case Verdict::fail: return "fail";
  }
  return "?";
}

Verdict classify(double p, PValueKind kind) noexcept {
  if (p < kFailAlpha) return Verdict::fail;
  if (p < kSuspectAlpha) return Verdict::suspect;
  if (kind == PValueKind::chi_square_upper && p > 1.0 - kSuspectAlpha) {
    return Verdict::suspect;
  }
  return Verdict::pass;
}

double normal_two_sided_p(double z) noexcept {
  return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

double chi_square_upper_p(double x, double df) {
  if (x <= 0) return 1.0;
  return boost::math::gamma_q(df / 2.0, x / 2.0);
}

double kolmogorov_upper_p(double lambda) noexcept {
  if (lambda < 0.2) return 1.0;
  double sum = 0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestResult ks_uniformity(std::span<const double> values) {
  require(values.size() >= 8, "KS uniformity needs at least 8 values");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    d = std::max({d, (i + 1) / n - v[i], v[i] - i / n});
  }
  // Stephens' small-sample correction to the limiting distribution.
  const double sn = std::sqrt(n);
  const double p = kolmogorov_upper_p((sn + 0.12 + 0.11 / sn) * d);
  return make_result("ks_uniformity", v.size(), d, p,
                     PValueKind::two_sided_normal);
}

// --- monobit ---------------------------------------------------------------

TestResult monobit(std::span<const std::uint32_t> samples) {
  const std::uint64_t n = samples.size();
  require(n >= 10'000, "monobit needs at least 10^4 words");
  std::uint64_t ones = 0;
  for (std::uint32_t w : samples) ones += std::popcount(w);
  const double bits = 32.0 * static_cast<double>(n);
  const double z = (2.0 * static_cast<double>(ones) - bits) / std::sqrt(bits);
  return make_result("monobit", n, z, normal_two_sided_p(z),
                     PValueKind::two_sided_normal);
}

// --- byte chi-square -------------------------------------------------------

TestResult chi2_bytes(std::span<const std::uint32_t> samples) {
  const std::uint64_t n = samples.size();
  require(n >= 100'000, "chi2_bytes needs at least 10^5 words");
  std::array<std::uint64_t, 256> counts{};
  for (std::uint32_t w : samples) {
    ++counts[w & 0xFF];
    ++counts[(w >> 8) & 0xFF];
    ++counts[(w >> 16) & 0xFF];
    ++counts[w >> 24];
  }
  const double expected = 4.0 * static_cast<double>(n) / 256.0;
  double chi2 = 0;
  for (std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  return make_result("chi2_bytes", n, chi2, chi_square_upper_p(chi2, 255.0),
                     PValueKind::chi_square_upper);
}

// --- runs ------------------------------------------------------------------

TestResult runs_test(std::span<const std::uint32_t> samples) {
  const std::uint64_t n = samples.size();
  require(n >= 10'000, "runs test needs at least 10^4 words");
  std::uint64_t ones = 0;
  std::uint64_t transitions = 0;
  std::uint32_t prev_lsb = samples.front() & 1;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::uint32_t w = samples[i];
    ones += std::popcount(w);
    transitions += std::popcount((w ^ (w >> 1)) & 0x7FFFFFFFu);
    if (i > 0) transitions += ((w >> 31) != prev_lsb);
    prev_lsb = w & 1;
  }
  const double total = 32.0 * static_cast<double>(n);
  const double n1 = static_cast<double>(ones);
  const double n0 = total - n1;
  if (ones == 0 || n0 == 0) {
    return degenerate("runs", n, "all bits equal, runs undefined");
  }
  const double runs = static_cast<double>(transitions) + 1.0;
  const double mean = 2.0 * n1 * n0 / total + 1.0;
  const double var =
      2.0 * n1 * n0 * (2.0 * n1 * n0 - total) / (total * total * (total - 1.0));
  if (!(var > 0)) {
    return degenerate("runs", n, "zero variance of the run count");
  }
  const double z = (runs - mean) / std::sqrt(var);
  return make_result("runs", n, z, normal_two_sided_p(z),
                     PValueKind::two_sided_normal);
}

// --- serial correlation ----------------------------------------------------

TestResult serial_correlation(std::span<const std::uint32_t> samples,
                              unsigned lag) {
  const std::uint64_t n = samples.size();
  require(lag >= 1 && lag <= 64, "serial correlation lag must be in [1, 64]");
  require(lag < n, "serial correlation lag must be below the sample count");
  require(n >= 10'000, "serial correlation needs at least 10^4 words");

  const std::uint64_t m = n - lag;
  double sx = 0, sy = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    sx += samples[i];
    sy += samples[i + lag];
  }
  const double mx = sx / static_cast<double>(m);
  const double my = sy / static_cast<double>(m);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    const double dx = samples[i] - mx;
    const double dy = samples[i + lag] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  std::string name = "serial_corr_lag" + std::to_string(lag);
  if (!(sxx > 0) || !(syy > 0)) {
    return degenerate(std::move(name), n,
                      "zero variance, correlation undefined");
  }
  const double r = sxy / std::sqrt(sxx * syy);
  const double z = r * std::sqrt(static_cast<double>(m));
  TestResult res = make_result(std::move(name), n, r, normal_two_sided_p(z),
                               PValueKind::two_sided_normal);
  return res;
}

// --- birthday spacings -----------------------------------------------------

double birthday_lambda(unsigned m, unsigned bits) noexcept {
  const double md = m;
  return md * md * md / std::ldexp(1.0, static_cast<int>(bits) + 2);
}

TestResult birthday_spacings(std::span<const std::uint32_t> samples,
                             unsigned m, unsigned bits) {
  require(m >= 2 && m <= 4096, "birthday m must be in [2, 4096]");
  require(bits >= 1 && bits <= 30, "birthday bits must be in [1, 30]");
  const double lambda = birthday_lambda(m, bits);
  require(lambda >= 0.1 && lambda <= 20.0,
          "birthday lambda = m^3/2^(bits+2) outside [0.1, 20]");
  const std::uint64_t trials = samples.size() / m;
  require(trials >= 200, "birthday spacings needs at least 200 trials");

  // Duplicate counts per trial, clipped to a cap well into the Poisson tail.
  const unsigned cap = static_cast<unsigned>(lambda + 12.0 * std::sqrt(lambda) + 12.0);
  std::vector<std::uint64_t> hist(cap + 1, 0);
  std::vector<std::uint32_t> days(m), gaps(m);
  const std::uint32_t year = 1u << bits;
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (unsigned i = 0; i < m; ++i) days[i] = samples[t * m + i] >> (32 - bits);
    std::sort(days.begin(), days.end());
    gaps[0] = days[0] + year - days[m - 1];
    for (unsigned i = 1; i < m; ++i) gaps[i] = days[i] - days[i - 1];
    std::sort(gaps.begin(), gaps.end());
    unsigned dup = 0;
    for (unsigned i = 1; i < m; ++i) dup += (gaps[i] == gaps[i - 1]);
    ++hist[std::min(dup, cap)];
  }

  // Poisson probabilities for 0..cap-1 and the tail at cap.
  std::vector<double> prob(cap + 1);
  double term = std::exp(-lambda), below = 0;
  for (unsigned k = 0; k < cap; ++k) {
    prob[k] = term;
    below += term;
    term *= lambda / (k + 1);
  }
  prob[cap] = std::max(0.0, 1.0 - below);

  // Merge adjacent bins until each expects at least 5 trials.
  const double td = static_cast<double>(trials);
  std::vector<double> exp_bins, obs_bins;
  double e = 0, o = 0;
  for (unsigned k = 0; k <= cap; ++k) {
    e += prob[k] * td;
    o += static_cast<double>(hist[k]);
    if (e >= 5.0) {
      exp_bins.push_back(e);
      obs_bins.push_back(o);
      e = o = 0;
    }
  }
  if (e > 0 || o > 0) {
    if (exp_bins.empty()) {
      exp_bins.push_back(e);
      obs_bins.push_back(o);
    } else {
      exp_bins.back() += e;
      obs_bins.back() += o;
    }
  }
  require(exp_bins.size() >= 2, "too few trials for a birthday chi-square");

  double chi2 = 0;
  for (std::size_t i = 0; i < exp_bins.size(); ++i) {
    const double d = obs_bins[i] - exp_bins[i];
    chi2 += d * d / exp_bins[i];
  }
  const double df = static_cast<double>(exp_bins.size() - 1);
  return make_result("birthday_spacings", trials * m, chi2,
                     chi_square_upper_p(chi2, df), PValueKind::chi_square_upper);
}

// --- battery ---------------------------------------------------------------

std::string_view level_name(Level level) noexcept {
  return level == Level::quick ? "quick" : "full";
}

Level parse_level(std::string_view name) {
  if (name == "quick") return Level::quick;
  if (name == "full") return Level::full;
  throw Error(Errc::invalid_argument,
              "unknown level '" + std::string(name) + "' (quick or full)");
}

std::uint64_t level_minimum(Level level) noexcept {
  return level == Level::quick ? 1'000'000 : 100'000'000;
}

namespace {

constexpr unsigned kBirthdayM = 512;
constexpr unsigned kBirthdayBits = 25;

}  // namespace

std::vector<TestResult> run_battery_on(std::span<const std::uint32_t> samples,
                                       Level level) {
  const std::uint64_t minimum = level_minimum(level);
  if (samples.size() < minimum) {
    throw Error(Errc::invalid_argument,
                std::string(level_name(level)) + " battery needs at least " +
                    std::to_string(minimum) + " words, got " +
                    std::to_string(samples.size()));
  }
  const std::uint64_t trials = level == Level::quick ? 1'000 : 10'000;
  const auto birthday_words = samples.first(trials * kBirthdayM);

  std::vector<TestResult> out;
  out.push_back(monobit(samples));
  out.push_back(chi2_bytes(samples));
  out.push_back(runs_test(samples));
  out.push_back(serial_correlation(samples, 1));
  out.push_back(birthday_spacings(birthday_words, kBirthdayM, kBirthdayBits));

  if (level == Level::full) {
    out.push_back(serial_correlation(samples, 8));
    // Birthdays drawn from bits 15..0 and 31..23 of each word.
    std::vector<std::uint32_t> rotated(birthday_words.begin(),
                                       birthday_words.end());
    for (auto& w : rotated) w = std::rotl(w, 16);
    TestResult r = birthday_spacings(rotated, kBirthdayM, kBirthdayBits);
    r.test_name = "birthday_spacings_rot16";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TestResult> run_battery(GeneratorKind kind,
                                    const StreamParams& params,
                                    std::uint64_t n, Level level) {
  const std::uint64_t minimum = level_minimum(level);
  if (n < minimum) {
    throw Error(Errc::invalid_argument,
                std::string(level_name(level)) + " battery needs --n >= " +
                    std::to_string(minimum));
  }
  std::vector<std::uint32_t> samples(n);
  AnyGenerator gen = make_generator(kind, params);
  std::visit(
      [&](auto& g) {
        for (auto& v : samples) v = g.next();
      },
      gen);
  return run_battery_on(samples, level);
}

BatterySummary summarize(std::span<const TestResult> results) noexcept {
  BatterySummary s;
  for (const auto& r : results) {
    if (r.verdict == Verdict::fail) ++s.failures;
    if (r.verdict == Verdict::suspect) ++s.suspects;
  }
  return s;
}

std::string format_battery(std::span<const TestResult> results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.test_name << ' ' << std::setprecision(6) << r.p_value << ' '
       << verdict_name(r.verdict);
    if (!r.note.empty()) os << " (" << r.note << ')';
    os << '\n';
  }
  const BatterySummary s = summarize(results);
  os << "summary " << (s.passed() ? "pass" : "fail")
     << " tests=" << results.size() << " failures=" << s.failures
     << " suspects=" << s.suspects << '\n';
  return os.str();
}

std::string format_battery_machine(std::span<const TestResult> results) {
  std::ostringstream os;
  os << "test_name,n_samples,statistic,p_value,verdict\n";
  os << std::setprecision(17);
  for (const auto& r : results) {
    os << r.test_name << ',' << r.n_samples << ',' << r.statistic << ','
       << r.p_value << ',' << verdict_name(r.verdict) << '\n';
  }
  return os.str();
}

}  // namespace prngforge::stats
