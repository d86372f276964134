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

#include "prngforge/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prngforge/bench.hpp"
#include "prngforge/error.hpp"
#include "prngforge/generators.hpp"
#include "prngforge/multipliers.hpp"
#include "prngforge/state_io.hpp"
#include "prngforge/stats.hpp"
#include "prngforge/streams.hpp"

namespace prngforge::cli {
namespace {

constexpr std::string_view kCounterKind = "_counter";

const std::vector<std::string> kRngNames = {"mwc", "xorshift", "xorshift256",
                                            "kiss", "lcg", "shr3"};
const std::vector<std::string> kYesNo = {"yes", "no"};

enum class OutputFormat { u32le, hex, text, f32text };

OutputFormat parse_format(const std::string& name) {
  if (name == "u32le") return OutputFormat::u32le;
  if (name == "hex") return OutputFormat::hex;
  if (name == "text") return OutputFormat::text;
  return OutputFormat::f32text;
}

void write_words(std::ostream& os, std::span<const std::uint32_t> words,
                 OutputFormat format) {
  std::string buf;
  buf.reserve(words.size() * 12);
  char tmp[32];
  for (std::uint32_t w : words) {
    switch (format) {
      case OutputFormat::u32le:
        for (int b = 0; b < 4; ++b) buf.push_back(static_cast<char>(w >> 8 * b));
        break;
      case OutputFormat::hex: {
        static constexpr char kDigits[] = "0123456789abcdef";
        for (int s = 28; s >= 0; s -= 4) buf.push_back(kDigits[(w >> s) & 0xF]);
        buf.push_back('\n');
        break;
      }
      case OutputFormat::text: {
        const auto r = std::to_chars(tmp, tmp + sizeof tmp, w);
        buf.append(tmp, r.ptr);
        buf.push_back('\n');
        break;
      }
      case OutputFormat::f32text: {
        const auto r = std::to_chars(tmp, tmp + sizeof tmp, to_uniform(w));
        buf.append(tmp, r.ptr);
        buf.push_back('\n');
        break;
      }
    }
  }
  os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!os) throw Error(Errc::io_error, "write failed");
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::budget_exceeded:
    case Errc::clock_failure:
    case Errc::io_error:
    case Errc::sink_failure:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

struct GenFlags {
  std::string rng = "kiss";
  std::uint64_t streams = 1;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  std::string scheme = "param";
  std::string format = "u32le";
  std::string out_path;
  bool save_state = false;
  unsigned workers = 1;
};

int cmd_gen(const GenFlags& f, std::ostream& out, std::ostream& err) {
  if (f.save_state && f.out_path.empty()) {
    err << "--save-state requires --out\n";
    return kExitUsage;
  }
  EnsembleConfig cfg;
  cfg.kind = parse_generator_kind(f.rng);
  cfg.stream_count = f.streams;
  cfg.per_stream_count = f.count;
  cfg.master_seed = f.seed;
  cfg.scheme = parse_scheme(f.scheme);
  cfg.worker_count = f.workers;
  validate(cfg);

  std::ofstream file;
  std::ostream* os = &out;
  if (!f.out_path.empty()) {
    file.open(f.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot open " << f.out_path << " for writing\n";
      return kExitFailure;
    }
    os = &file;
  }
  const OutputFormat format = parse_format(f.format);
  const EnsembleSummary summary = generate_ensemble(
      cfg, [&](std::size_t, std::span<const std::uint32_t> block) {
        write_words(*os, block, format);
      });
  os->flush();
  if (!*os) {
    err << "write failed\n";
    return kExitFailure;
  }

  if (f.save_state) {
    const std::string state_path = f.out_path + ".state";
    std::ofstream state(state_path, std::ios::trunc);
    if (!state) {
      err << "cannot open " << state_path << " for writing\n";
      return kExitFailure;
    }
    write_states(state, summary.final_states);
    state.flush();
    if (!state) {
      err << "write failed: " << state_path << '\n';
      return kExitFailure;
    }
  }
  return kExitOk;
}

struct BenchFlags {
  std::string rng = "mwc";
  std::uint64_t n_per_stream = BenchConfig{}.n_per_stream;
  std::uint64_t streams = BenchConfig{}.streams;
  std::string writeback = "yes";
  std::string uniform = "yes";
  unsigned workers = 1;
  unsigned repeats = BenchConfig{}.repeats;
  bool machine = false;
  std::uint64_t seed = 0;
  std::uint64_t budget_mb = BenchConfig{}.budget_bytes >> 20;
};

int cmd_bench(const BenchFlags& f, std::ostream& out) {
  BenchConfig cfg;
  cfg.kind = parse_generator_kind(f.rng);
  cfg.n_per_stream = f.n_per_stream;
  cfg.streams = f.streams;
  cfg.writeback = f.writeback == "yes";
  cfg.uniform = f.uniform == "yes";
  cfg.workers = f.workers;
  cfg.repeats = f.repeats;
  cfg.master_seed = f.seed;
  cfg.budget_bytes = f.budget_mb << 20;
  const BenchReport report = run_benchmark(cfg);
  out << emit_report(report,
                     f.machine ? ReportFormat::machine : ReportFormat::text);
  return kExitOk;
}

struct TestFlags {
  std::string rng = "kiss";
  std::uint64_t n = 0;  // 0: level minimum
  std::string level = "quick";
  std::uint64_t seed = 0;
  bool machine = false;
};

int cmd_test(const TestFlags& f, std::ostream& out) {
  const stats::Level level = stats::parse_level(f.level);
  const std::uint64_t n = f.n == 0 ? stats::level_minimum(level) : f.n;
  std::vector<stats::TestResult> results;
  if (f.rng == kCounterKind) {
    if (n < stats::level_minimum(level)) {
      throw Error(Errc::invalid_argument,
                  "--n must be at least " +
                      std::to_string(stats::level_minimum(level)) +
                      " for level " + f.level);
    }
    std::vector<std::uint32_t> samples(n);
    std::iota(samples.begin(), samples.end(), std::uint32_t{0});
    results = stats::run_battery_on(samples, level);
  } else {
    results = stats::run_battery(parse_generator_kind(f.rng),
                                 default_stream_params(f.seed), n, level);
  }
  out << (f.machine ? stats::format_battery_machine(results)
                    : stats::format_battery(results));
  return stats::summarize(results).passed() ? kExitOk : kExitTestFailed;
}

int cmd_list_multipliers(unsigned base_bits, bool count_only,
                         std::ostream& out) {
  const MultiplierTable table = enumerate_multipliers(base_bits);
  if (count_only) {
    out << table.size() << '\n';
  } else {
    write_multiplier_fixture(out, table);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Parallel pseudo-random number generation toolkit",
               "prngforge"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "write stream-major random words");
  gen_cmd->add_option("--rng", gen.rng, "generator kind")
      ->check(CLI::IsMember(kRngNames));
  gen_cmd->add_option("--streams", gen.streams, "number of streams N")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--count", gen.count, "values per stream M")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "master seed");
  gen_cmd->add_option("--scheme", gen.scheme, "param, split or leapfrog")
      ->check(CLI::IsMember({"param", "parameterize", "split", "leapfrog"}));
  gen_cmd->add_option("--format", gen.format, "u32le, hex, text or f32text")
      ->check(CLI::IsMember({"u32le", "hex", "text", "f32text"}));
  gen_cmd->add_option("--out", gen.out_path, "output file (default stdout)");
  gen_cmd->add_flag("--save-state", gen.save_state,
                    "write final states to <out>.state");
  gen_cmd->add_option("--workers", gen.workers, "worker threads")
      ->check(CLI::Range(1u, 1024u));

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "measure throughput");
  bench_cmd->add_option("--rng", bench.rng, "generator kind")
      ->check(CLI::IsMember(kRngNames));
  bench_cmd->add_option("--n-per-stream", bench.n_per_stream,
                        "values per stream n_t")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--streams", bench.streams, "stream count N_t")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--writeback", bench.writeback, "yes or no")
      ->check(CLI::IsMember(kYesNo));
  bench_cmd->add_option("--uniform", bench.uniform, "yes or no")
      ->check(CLI::IsMember(kYesNo));
  bench_cmd->add_option("--workers", bench.workers, "worker threads")
      ->check(CLI::Range(1u, 1024u));
  bench_cmd->add_option("--repeats", bench.repeats, "timed repeats")
      ->check(CLI::Range(1u, 1000u));
  bench_cmd->add_flag("--machine", bench.machine, "CSV output");
  bench_cmd->add_option("--seed", bench.seed, "master seed");
  bench_cmd->add_option("--budget-mb", bench.budget_mb,
                        "writeback buffer budget in MiB");

  TestFlags test;
  auto* test_cmd = app.add_subcommand("test", "run the statistical battery");
  std::vector<std::string> test_kinds = kRngNames;
  test_kinds.emplace_back(kCounterKind);
  test_cmd->add_option("--rng", test.rng, "generator kind")
      ->check(CLI::IsMember(test_kinds));
  test_cmd->add_option("--n", test.n, "sample count (default: level minimum)")
      ->check(CLI::PositiveNumber);
  test_cmd->add_option("--level", test.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  test_cmd->add_option("--seed", test.seed, "master seed");
  test_cmd->add_flag("--machine", test.machine, "CSV output");

  unsigned base_bits = 16;
  bool count_only = false;
  auto* list_cmd = app.add_subcommand("list-multipliers",
                                      "print safeprime MWC multipliers");
  list_cmd->add_option("--base-bits", base_bits, "8 or 16");
  list_cmd->add_flag("--count-only", count_only, "print only the count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*test_cmd) return cmd_test(test, out);
    return cmd_list_multipliers(base_bits, count_only, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitFailure;
  }
}

}  // namespace prngforge::cli
