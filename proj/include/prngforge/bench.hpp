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

// Throughput harness.
//
// A run generates n_t values on each of N_t parameterized streams and times
// the generation loop. Derived metrics:
//
//   rate  = n_t * N_t / (t * 1e9)              GSamples/s
//   BW    = n_t * N_t * 4 / (t * 1e9)          GBps, writeback runs only
//   U_ops = n_t * N_t * n_ops / (t * 1e9)      GOps
//
// n_ops is the fixed per-output count of useful word operations (loop and
// address arithmetic excluded), not a measured instruction count.

#ifndef PRNGFORGE_BENCH_HPP_
#define PRNGFORGE_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prngforge/generators.hpp"

namespace prngforge {

/// Useful operations per output: mwc 10 (3 shifts, 2 ands, 2 mults,
/// 3 adds), xorshift 18 (11 xors, 7 shifts), kiss 18, lcg 2 (mult, add),
/// shr3 6 (3 shifts, 3 xors).
constexpr unsigned op_count(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::mwc: return 10;
    case GeneratorKind::xorshift256: return 18;
    case GeneratorKind::kiss: return 18;
    case GeneratorKind::lcg: return 2;
    case GeneratorKind::shr3: return 6;
  }
  return 0;
}

struct BenchReport {
  GeneratorKind kind = GeneratorKind::mwc;
  bool writeback = true;
  unsigned workers = 1;
  std::uint64_t n_t = 0;  // values per stream
  std::uint64_t N_t = 0;  // streams
  double t_seconds = 0;
  std::optional<double> bw_gbps;  // absent without writeback
  double uops_gops = 0;
  double rate_gsps = 0;
  std::optional<double> uniform_rate_gsps;  // absent unless measured

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Builds a report from the measured times. The rate is rounded to 44
/// significant bits so that bw / rate == 4 and uops / rate == n_ops hold
/// exactly in double arithmetic; the rounding is below 1e-13 relative.
BenchReport make_report(GeneratorKind kind, bool writeback, unsigned workers,
                        std::uint64_t n_t, std::uint64_t N_t, double t_seconds,
                        std::optional<double> uniform_t_seconds = std::nullopt);

struct BenchConfig {
  GeneratorKind kind = GeneratorKind::mwc;
  std::uint64_t n_per_stream = 1'250'000;
  std::uint64_t streams = 64;  // default total is ~80M values
  bool writeback = true;
  bool uniform = true;
  unsigned workers = 1;
  unsigned repeats = 5;
  std::uint64_t master_seed = 0;
  std::uint64_t budget_bytes = std::uint64_t{1} << 30;
};

struct BenchRun {
  BenchReport report;
  std::vector<double> times;          // integer pass, one per repeat
  std::vector<double> uniform_times;  // empty unless cfg.uniform
  /// States after one timed pass, the only output of no-writeback runs.
  std::vector<AnyGenerator> final_states;
};

/// Throws Error{budget_exceeded} when n_t * N_t * 4 bytes exceeds the
/// budget, Error{invalid_argument} for zero sizes or repeats, and
/// Error{clock_failure} when the clock does not advance.
BenchRun run_benchmark_detailed(const BenchConfig& cfg);

inline BenchReport run_benchmark(const BenchConfig& cfg) {
  return run_benchmark_detailed(cfg).report;
}

enum class ReportFormat { text, machine };

inline constexpr std::string_view kReportCsvHeader =
    "kind,writeback,workers,n_t,N_t,t_seconds,bw_gbps,uops_gops,rate_gsps,"
    "uniform_rate_gsps";

/// Text mirrors the published tables (t, BW, U_ops, rate, uniform rate) with
/// "-" for absent values; machine format is the CSV header plus one row.
std::string emit_report(const BenchReport& report, ReportFormat format);
std::string emit_reports(std::span<const BenchReport> reports,
                         ReportFormat format);

/// One CSV data row, no header. Throws Error{invalid_argument}.
std::string report_row(const BenchReport& report);
BenchReport parse_report_row(std::string_view row);

}  // namespace prngforge

#endif  // PRNGFORGE_BENCH_HPP_
