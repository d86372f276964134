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

// Runs the ten acceptance criteria and prints one PASS/FAIL line each.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/reference.hpp"
#include "prngforge/bench.hpp"
#include "prngforge/cli.hpp"
#include "prngforge/generators.hpp"
#include "prngforge/multipliers.hpp"
#include "prngforge/primality.hpp"
#include "prngforge/stats.hpp"
#include "prngforge/streams.hpp"
#include "support/testing.hpp"

namespace prngforge {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects the first failed check of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  const std::string& notes() const { return notes_; }

 private:
  std::string failure_;
  std::string notes_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// --- 1 -----------------------------------------------------------------------

void multiplier_count(Check& c) {
  const auto start = Clock::now();
  const MultiplierTable table = enumerate_multipliers(16);
  c.expect(table.size() == 392, "expected 392 multipliers, got " +
                                    std::to_string(table.size()));
  for (std::uint32_t a : table.multipliers) {
    const std::uint64_t p = std::uint64_t{a} * 65536 - 1;
    c.expect(oracle::prime_by_trial_division(p) &&
                 oracle::prime_by_trial_division((p - 1) / 2),
             "multiplier " + std::to_string(a) + " is not safeprime");
  }
  const double t = seconds_since(start);
  c.expect(t < 60, "took " + fmt("%.1f s", t));
  c.note(fmt("%.2f s", t));
}

// --- 2 -----------------------------------------------------------------------

void toy_period(Check& c) {
  const auto start = Clock::now();
  constexpr std::uint32_t a = 3, bits = 4, b = 1u << bits;
  for (std::uint32_t x0 = 0; x0 < b; ++x0) {
    for (std::uint32_t c0 = 0; c0 < a; ++c0) {
      if ((x0 == 0 && c0 == 0) || (x0 == b - 1 && c0 == a - 1)) continue;
      MwcDigit d{x0, c0};
      unsigned period = 0;
      do {
        d = mwc_step(a, d.x, d.carry, bits);
        ++period;
      } while (d != MwcDigit{x0, c0} && period <= a * b);
      c.expect(period == 23, "state (" + std::to_string(x0) + ", " +
                                 std::to_string(c0) + ") has period " +
                                 std::to_string(period));
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 1, "took " + fmt("%.3f s", t));
}

// --- 3 -----------------------------------------------------------------------

oracle::CombinedMwcRef mwc_ref(const CombinedMwc& g) {
  return {oracle::MwcRef(g.hi().multiplier(), g.hi().x(), g.hi().carry()),
          oracle::MwcRef(g.lo().multiplier(), g.lo().x(), g.lo().carry())};
}

oracle::XorShiftRef xorshift_ref(const XorShift256& g) {
  std::array<std::uint32_t, 8> oldest_first;
  for (unsigned i = 0; i < 8; ++i) oldest_first[i] = g.words()[(g.cursor() + i) % 8];
  return oracle::XorShiftRef(oldest_first);
}

oracle::KissRef kiss_ref(const Kiss& g) {
  return {mwc_ref(g.mwc()), oracle::Shr3Ref(g.shr3().value()),
          oracle::LcgRef(g.lcg().value(), g.lcg().multiplier(),
                         g.lcg().increment())};
}

template <class Gen, class Ref>
bool same_outputs(Gen g, Ref ref, unsigned n) {
  for (unsigned i = 0; i < n; ++i)
    if (g.next() != static_cast<std::uint32_t>(ref.next())) return false;
  return true;
}

void oracle_equivalence(Check& c) {
  constexpr unsigned n = 10'000;
  for (std::uint64_t seed : {0ull, 42ull, 0xFFFFFFFFFFFFFFFFull}) {
    for (const StreamParams& p : seed_streams(seed, 3)) {
      for (GeneratorKind kind : kAllGeneratorKinds) {
        const AnyGenerator g = make_generator(kind, p);
        bool ok = false;
        if (auto* m = std::get_if<CombinedMwc>(&g)) {
          ok = same_outputs(*m, mwc_ref(*m), n);
        } else if (auto* x = std::get_if<XorShift256>(&g)) {
          ok = same_outputs(*x, xorshift_ref(*x), n);
        } else if (auto* k = std::get_if<Kiss>(&g)) {
          ok = same_outputs(*k, kiss_ref(*k), n);
        } else if (auto* l = std::get_if<Lcg>(&g)) {
          ok = same_outputs(*l, oracle::LcgRef(l->value()), n);
        } else if (auto* s = std::get_if<Shr3>(&g)) {
          ok = same_outputs(*s, oracle::Shr3Ref(s->value()), n);
        }
        c.expect(ok, std::string(kind_name(kind)) + " diverges for seed " +
                         std::to_string(seed) + " stream " +
                         std::to_string(p.stream_index));
      }
    }
  }
}

// --- 4 -----------------------------------------------------------------------

void kiss_composition(Check& c) {
  std::mt19937_64 rng(4);
  for (unsigned i = 0; i < 10'000; ++i) {
    const Kiss k = testing::any_kiss(rng);
    Kiss g = k;
    CombinedMwc m = k.mwc();
    Lcg l = k.lcg();
    Shr3 s = k.shr3();
    for (unsigned step = 0; step < 4; ++step) {
      const std::uint32_t mv = m.next(), lv = l.next(), sv = s.next();
      const std::uint32_t expected = static_cast<std::uint32_t>(
          ((std::uint64_t{mv ^ lv}) + sv) % (std::uint64_t{1} << 32));
      c.expect(g.next() == expected, "state " + std::to_string(i));
    }
  }
}

// --- 5 -----------------------------------------------------------------------

void jump_ahead(Check& c) {
  const auto start = Clock::now();
  std::mt19937_64 rng(5);
  for (unsigned i = 0; i < 100; ++i) {
    const std::uint64_t k = rng() % ((std::uint64_t{1} << 20) + 1);
    const Lcg lcg(testing::any_u32(rng));
    Lcg stepped = lcg;
    for (std::uint64_t s = 0; s < k; ++s) stepped.next();
    c.expect(lcg_jump(lcg, k) == stepped, "lcg k=" + std::to_string(k));

    const AnyGenerator xs = testing::any_xorshift(rng);
    AnyGenerator walked = xs;
    for (std::uint64_t s = 0; s < k; ++s) next_u32(walked);
    c.expect(jump(xs, k) == walked, "xorshift k=" + std::to_string(k));
  }
  const double t = seconds_since(start);
  c.expect(t < 30, "took " + fmt("%.1f s", t));
  c.note(fmt("%.2f s", t));
}

// --- 6 -----------------------------------------------------------------------

std::vector<std::uint32_t> master_sequence(GeneratorKind kind,
                                           std::uint64_t seed,
                                           std::uint64_t n) {
  AnyGenerator g = master_generator(kind, seed);
  std::vector<std::uint32_t> out(n);
  for (auto& v : out) v = next_u32(g);
  return out;
}

void parallelization(Check& c) {
  std::mt19937_64 rng(6);
  for (GeneratorKind kind : {GeneratorKind::lcg, GeneratorKind::xorshift256}) {
    for (unsigned trial = 0; trial < 6; ++trial) {
      EnsembleConfig cfg;
      cfg.kind = kind;
      cfg.stream_count = 1 + rng() % 8;
      cfg.per_stream_count = trial == 0 ? 100'000 : 1 + rng() % 100'000;
      cfg.master_seed = rng();
      const std::uint64_t n = cfg.stream_count, b = cfg.per_stream_count;
      const auto seq = master_sequence(kind, cfg.master_seed, n * b);
      const std::string tag = std::string(kind_name(kind)) + " N=" +
                              std::to_string(n) + " B=" + std::to_string(b);

      cfg.scheme = Scheme::split;
      auto split = split_streams(cfg);
      for (std::uint64_t j = 0; j < n; ++j)
        for (std::uint64_t i = 0; i < b; ++i)
          if (split[j].next() != seq[j * b + i]) {
            c.expect(false, "split " + tag);
            j = n;
            break;
          }

      cfg.scheme = Scheme::leapfrog;
      auto leap = leapfrog_streams(cfg);
      for (std::uint64_t i = 0; i < b; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
          if (leap[j].next() != seq[i * n + j]) {
            c.expect(false, "leapfrog " + tag);
            i = b;
            break;
          }
    }
  }

  for (GeneratorKind kind : kAllGeneratorKinds) {
    for (Scheme scheme : {Scheme::parameterize, Scheme::split, Scheme::leapfrog}) {
      if (scheme != Scheme::parameterize && !is_jumpable(kind)) continue;
      EnsembleConfig cfg;
      cfg.kind = kind;
      cfg.scheme = scheme;
      cfg.stream_count = 37;
      cfg.per_stream_count = 20'011;
      cfg.master_seed = 6;
      std::vector<std::vector<std::uint32_t>> outputs;
      for (unsigned workers : {1u, 4u, 8u}) {
        cfg.worker_count = workers;
        std::vector<std::uint32_t> buf(cfg.stream_count * cfg.per_stream_count);
        generate_ensemble_into(cfg, buf);
        outputs.push_back(std::move(buf));
      }
      c.expect(outputs[0] == outputs[1] && outputs[0] == outputs[2],
               std::string(kind_name(kind)) + " " +
                   std::string(scheme_name(scheme)) + " depends on workers");
    }
  }
}

// --- 7 -----------------------------------------------------------------------

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

void metric_identities(Check& c) {
  std::mt19937_64 rng(7);
  for (unsigned i = 0; i < 10'000; ++i) {
    const GeneratorKind kind = kAllGeneratorKinds[i % 5];
    const double t = std::ldexp(1.0 + static_cast<double>(rng() % 1'000'000),
                                -static_cast<int>(rng() % 40));
    const BenchReport r = make_report(kind, true, 1 + rng() % 64,
                                      1 + rng() % 10'000'000,
                                      1 + rng() % 100'000, t);
    c.expect(r.bw_gbps && *r.bw_gbps / r.rate_gsps == 4.0 &&
                 r.uops_gops / r.rate_gsps == op_count(kind),
             "identity broken for report " + std::to_string(i));
  }

  for (GeneratorKind kind : {GeneratorKind::mwc, GeneratorKind::xorshift256,
                             GeneratorKind::kiss}) {
    BenchConfig cfg;
    cfg.kind = kind;
    cfg.uniform = false;
    cfg.repeats = 1;
    std::vector<double> wb, nwb;
    for (unsigned rep = 0; rep < 5; ++rep) {
      for (bool writeback : {true, false}) {
        cfg.writeback = writeback;
        const BenchRun run = run_benchmark_detailed(cfg);
        const BenchReport& r = run.report;
        c.expect(r.uops_gops / r.rate_gsps == op_count(kind) &&
                     (!writeback || *r.bw_gbps / r.rate_gsps == 4.0) &&
                     writeback == r.bw_gbps.has_value(),
                 "identity broken for measured report");
        (writeback ? wb : nwb).push_back(run.times.front());
      }
    }
    const double m_wb = median(wb), m_nwb = median(nwb);
    c.expect(m_nwb <= m_wb, std::string(kind_name(kind)) +
                                " no-writeback median " + fmt("%.4f", m_nwb) +
                                " s exceeds writeback " + fmt("%.4f s", m_wb));
    c.note(std::string(kind_name(kind)) + " " + fmt("%.4f", m_wb) + "/" +
           fmt("%.4f s", m_nwb));
  }
}

// --- 8 -----------------------------------------------------------------------

void statistical_quality(Check& c) {
  const std::uint64_t n = stats::level_minimum(stats::Level::full);
  const StreamParams params = default_stream_params(0);

  auto start = Clock::now();
  const auto quick = stats::run_battery(GeneratorKind::kiss, params,
                                        stats::level_minimum(stats::Level::quick),
                                        stats::Level::quick);
  const double t_quick = seconds_since(start);
  c.expect(stats::summarize(quick).passed(), "kiss fails the quick battery");
  c.expect(t_quick < 120, "quick battery took " + fmt("%.1f s", t_quick));
  c.note("quick " + fmt("%.1f s", t_quick));

  start = Clock::now();
  const auto kiss = stats::summarize(
      stats::run_battery(GeneratorKind::kiss, params, n, stats::Level::full));
  const double t_full = seconds_since(start);
  c.expect(kiss.failures == 0,
           "kiss records " + std::to_string(kiss.failures) + " failures");
  c.expect(t_full < 1800, "full battery took " + fmt("%.1f s", t_full));
  c.note("full " + fmt("%.1f s", t_full));

  for (GeneratorKind kind : {GeneratorKind::mwc, GeneratorKind::xorshift256}) {
    const auto results = stats::run_battery(kind, params, n, stats::Level::full);
    const auto s = stats::summarize(results);
    c.expect(s.failures + s.suspects <= 1,
             std::string(kind_name(kind)) + " records " +
                 std::to_string(s.failures + s.suspects) + " suspects/fails");
    std::string flagged;
    for (const auto& r : results)
      if (r.verdict != stats::Verdict::pass)
        flagged += " " + r.test_name + "=" +
                   std::string(stats::verdict_name(r.verdict));
    c.note(std::string(kind_name(kind)) + " " +
           std::to_string(s.failures + s.suspects) + " flagged" + flagged);
  }

  std::vector<std::uint32_t> counter(n);
  for (std::size_t i = 0; i < counter.size(); ++i)
    counter[i] = static_cast<std::uint32_t>(i);
  const auto ctr =
      stats::summarize(stats::run_battery_on(counter, stats::Level::full));
  c.expect(ctr.failures >= 2,
           "counter records only " + std::to_string(ctr.failures) + " failures");
  c.note("counter " + std::to_string(ctr.failures) + " failures");
}

// --- 9 -----------------------------------------------------------------------

void uniform_conversion(Check& c) {
  AnyGenerator g = make_generator(GeneratorKind::kiss, default_stream_params(0));
  double sum = 0;
  for (unsigned i = 0; i < 1'000'000; ++i) {
    const float u = to_uniform(next_u32(g));
    c.expect(u >= 0.0f && u < 1.0f, "value outside [0, 1)");
    sum += u;
  }
  const double mean = sum / 1e6;
  const double tol = 3.0 / std::sqrt(12e6);
  c.expect(std::abs(mean - 0.5) <= tol, "mean " + fmt("%.6f", mean));
  c.note("mean " + fmt("%.6f", mean));
}

// --- 10 ----------------------------------------------------------------------

struct CliResult {
  int status;
  std::string out;
};

CliResult cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str()};
}

void cli_contract(Check& c) {
  std::istringstream manifest(testing::read_golden("gen_manifest.txt"));
  std::string name, kind, streams, count, seed, scheme, format;
  while (manifest >> name >> kind >> streams >> count >> seed >> scheme >> format) {
    const CliResult r = cli_run({"gen", "--rng", kind, "--streams", streams,
                                 "--count", count, "--seed", seed, "--scheme",
                                 scheme, "--format", format});
    c.expect(r.status == 0 && r.out == testing::read_golden(name), "gen " + name);
  }

  std::mt19937_64 rng(10);
  for (unsigned i = 0; i < 25; ++i) {
    const std::uint64_t n = 1 + rng() % 9, m = 1 + rng() % 500;
    const CliResult r = cli_run(
        {"gen", "--rng", std::string(kind_name(kAllGeneratorKinds[i % 5])),
         "--streams", std::to_string(n), "--count", std::to_string(m),
         "--seed", std::to_string(rng())});
    c.expect(r.status == 0 && r.out.size() == 4 * n * m, "u32le byte-size law");
  }

  const CliResult test_ok = cli_run({"test", "--rng", "kiss", "--seed", "7"});
  c.expect(test_ok.status == 0 &&
               test_ok.out == testing::read_golden("test_kiss_s7_quick.txt"),
           "test kiss seed 7");
  const CliResult test_bad = cli_run({"test", "--rng", "_counter"});
  c.expect(test_bad.status == 3 &&
               test_bad.out == testing::read_golden("test_counter_quick.txt"),
           "test counter");

  c.expect(cli_run({"list-multipliers"}).out ==
               testing::read_golden("list_b16.txt"),
           "list-multipliers 16");
  c.expect(cli_run({"list-multipliers", "--base-bits", "8"}).out ==
               testing::read_golden("list_b8.txt"),
           "list-multipliers 8");
  c.expect(cli_run({"list-multipliers", "--count-only"}).out == "392\n",
           "list-multipliers --count-only");

  const CliResult bench = cli_run({"bench", "--rng", "kiss", "--machine",
                                   "--n-per-stream", "10000", "--streams", "4",
                                   "--repeats", "1"});
  c.expect(bench.status == 0 &&
               bench.out.rfind(std::string(kReportCsvHeader) + "\n", 0) == 0,
           "bench --machine header");

  const std::vector<std::pair<std::vector<std::string>, int>> exits = {
      {{"gen", "--rng", "mwc", "--scheme", "split"}, 2},
      {{"gen", "--rng", "nope"}, 2},
      {{"gen", "--count", "0"}, 2},
      {{"gen", "--out", "/nonexistent/dir/file"}, 1},
      {{"bench", "--n-per-stream", "1000000", "--streams", "1000",
        "--budget-mb", "1"}, 1},
      {{"bench", "--writeback", "maybe"}, 2},
      {{"test", "--n", "10"}, 2},
      {{"list-multipliers", "--base-bits", "12"}, 2},
      {{}, 2},
  };
  for (const auto& [args, expected] : exits) {
    std::string joined;
    for (const auto& a : args) joined += " " + a;
    c.expect(cli_run(args).status == expected, "exit code for" + joined);
  }
}

}  // namespace
}  // namespace prngforge

int main() {
  using prngforge::Check;
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const Criterion criteria[] = {
      {"multiplier count", prngforge::multiplier_count},
      {"toy period", prngforge::toy_period},
      {"oracle equivalence", prngforge::oracle_equivalence},
      {"kiss composition", prngforge::kiss_composition},
      {"jump-ahead", prngforge::jump_ahead},
      {"parallelization", prngforge::parallelization},
      {"metric identities", prngforge::metric_identities},
      {"statistical quality", prngforge::statistical_quality},
      {"uniform conversion", prngforge::uniform_conversion},
      {"cli contract", prngforge::cli_contract},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    Check c;
    try {
      criterion.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %2d %-20s %s", index, criterion.name,
                c.ok() ? "PASS" : "FAIL");
    if (!c.ok()) std::printf("  (%s)", c.failure().c_str());
    if (!c.notes().empty()) std::printf("  [%s]", c.notes().c_str());
    std::printf("\n");
    std::fflush(stdout);
    failed += !c.ok();
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
