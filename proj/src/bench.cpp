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

#include "prngforge/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>
#include <type_traits>
#include <utility>

#include "prngforge/error.hpp"
#include "prngforge/multipliers.hpp"

namespace prngforge {
namespace {

// Forces a value into a register without emitting any instruction, so
// unstored outputs cannot be optimized away.
template <class T>
inline void keep(T value) {
#if defined(__x86_64__) || defined(__i386__)
  if constexpr (std::is_floating_point_v<T>) {
    asm volatile("" : : "x"(value));
    return;
  }
#endif
  asm volatile("" : : "r"(value));
}

double quantize(double x) {
  if (x == 0 || !std::isfinite(x)) return x;
  int exp = 0;
  const double m = std::frexp(x, &exp);
  return std::ldexp(std::round(std::ldexp(m, 44)), exp - 44);
}

template <bool kWriteback, bool kUniform>
struct Emit {
  std::uint32_t* out;
  float* fout;

  void operator()(std::uint64_t i, std::uint32_t v) const {
    if constexpr (kWriteback) {
      if constexpr (kUniform) {
        fout[i] = to_uniform(v);
      } else {
        out[i] = v;
      }
    } else {
      if constexpr (kUniform) {
        keep(to_uniform(v));
      } else {
        keep(v);
      }
    }
  }
};

// Four xorshift streams stepped together, one per vector lane.
using Lanes4 = std::uint32_t __attribute__((vector_size(16)));
using Lanes4f = float __attribute__((vector_size(16)));

template <class W>
inline W xorshift_step(W n1, W n4, W n5, W n7, W n8) {
  W t = n1 ^ (n1 << 13);
  W y = t ^ (t << 9);
  y ^= n4 ^ (n4 << 7);
  y ^= n5 ^ (n5 >> 3);
  y ^= n7 ^ (n7 >> 10);
  t = n8 ^ (n8 >> 7);
  y ^= t ^ (t << 24);
  return y;
}

template <bool kWriteback, bool kUniform>
inline void emit_lanes(const Emit<kWriteback, kUniform>& emit,
                       const std::array<std::uint64_t, 4>& base,
                       std::uint64_t i, Lanes4 w) {
  if constexpr (kWriteback) {
    for (std::size_t l = 0; l < 4; ++l) emit(base[l] + i, w[l]);
  } else if constexpr (kUniform) {
    const Lanes4f u = __builtin_convertvector(w >> 8, Lanes4f) *
                      (1.0f / 16777216.0f);
    asm volatile("" : : "x"(u));
  } else {
    asm volatile("" : : "x"(w));
  }
}

// Steps four cursor-0 xorshift streams in 8-output blocks; returns the
// number of outputs produced per stream.
template <class E>
std::uint64_t xorshift_lanes(std::array<XorShift256, 4>& g,
                             const std::array<std::uint64_t, 4>& base,
                             std::uint64_t n_t, const E& emit) {
  Lanes4 v[8];
  for (std::size_t k = 0; k < 8; ++k) {
    v[k] = Lanes4{g[0].words()[k], g[1].words()[k], g[2].words()[k],
                  g[3].words()[k]};
  }
  std::uint64_t i = 0;
  for (; i + 8 <= n_t; i += 8) {
    v[0] = xorshift_step(v[7], v[4], v[3], v[1], v[0]);
    emit_lanes(emit, base, i + 0, v[0]);
    v[1] = xorshift_step(v[0], v[5], v[4], v[2], v[1]);
    emit_lanes(emit, base, i + 1, v[1]);
    v[2] = xorshift_step(v[1], v[6], v[5], v[3], v[2]);
    emit_lanes(emit, base, i + 2, v[2]);
    v[3] = xorshift_step(v[2], v[7], v[6], v[4], v[3]);
    emit_lanes(emit, base, i + 3, v[3]);
    v[4] = xorshift_step(v[3], v[0], v[7], v[5], v[4]);
    emit_lanes(emit, base, i + 4, v[4]);
    v[5] = xorshift_step(v[4], v[1], v[0], v[6], v[5]);
    emit_lanes(emit, base, i + 5, v[5]);
    v[6] = xorshift_step(v[5], v[2], v[1], v[7], v[6]);
    emit_lanes(emit, base, i + 6, v[6]);
    v[7] = xorshift_step(v[6], v[3], v[2], v[0], v[7]);
    emit_lanes(emit, base, i + 7, v[7]);
  }
  for (std::size_t l = 0; l < 4; ++l) {
    XorShift256::Words w;
    for (std::size_t k = 0; k < 8; ++k) w[k] = v[k][l];
    g[l] = XorShift256(w, 0);
  }
  return i;
}

template <class G>
Lanes4 gather(const std::array<G, 4>& g,
              std::uint32_t (G::*field)() const noexcept) {
  return Lanes4{(g[0].*field)(), (g[1].*field)(), (g[2].*field)(),
                (g[3].*field)()};
}

struct MwcLanes {
  Lanes4 a_hi{}, x_hi{}, c_hi{}, a_lo{}, x_lo{}, c_lo{};

  explicit MwcLanes(const std::array<CombinedMwc, 4>& g) {
    for (std::size_t l = 0; l < 4; ++l) {
      a_hi[l] = g[l].hi().multiplier();
      x_hi[l] = g[l].hi().x();
      c_hi[l] = g[l].hi().carry();
      a_lo[l] = g[l].lo().multiplier();
      x_lo[l] = g[l].lo().x();
      c_lo[l] = g[l].lo().carry();
    }
  }

  Lanes4 next() {
    const Lanes4 th = a_hi * x_hi + c_hi;
    const Lanes4 tl = a_lo * x_lo + c_lo;
    x_hi = th & kMwcMask;
    c_hi = th >> kMwcBaseBits;
    x_lo = tl & kMwcMask;
    c_lo = tl >> kMwcBaseBits;
    return (x_hi << 16) | x_lo;
  }

  void store(std::array<CombinedMwc, 4>& g) const {
    for (std::size_t l = 0; l < 4; ++l) {
      g[l] = CombinedMwc(
          MwcLane(static_cast<std::uint16_t>(a_hi[l]),
                  static_cast<std::uint16_t>(x_hi[l]),
                  static_cast<std::uint16_t>(c_hi[l])),
          MwcLane(static_cast<std::uint16_t>(a_lo[l]),
                  static_cast<std::uint16_t>(x_lo[l]),
                  static_cast<std::uint16_t>(c_lo[l])));
    }
  }
};

struct LcgLanes {
  Lanes4 x, a, c;

  explicit LcgLanes(const std::array<Lcg, 4>& g)
      : x(gather(g, &Lcg::value)),
        a(gather(g, &Lcg::multiplier)),
        c(gather(g, &Lcg::increment)) {}

  Lanes4 next() {
    x = a * x + c;
    return x;
  }

  void store(std::array<Lcg, 4>& g) const {
    for (std::size_t l = 0; l < 4; ++l) g[l] = Lcg(x[l], a[l], c[l]);
  }
};

struct Shr3Lanes {
  Lanes4 y{};

  explicit Shr3Lanes(const std::array<Shr3, 4>& g) {
    for (std::size_t l = 0; l < 4; ++l) y[l] = g[l].value();
  }

  Lanes4 next() {
    y ^= y << 13;
    y ^= y >> 17;
    y ^= y << 5;
    return y;
  }

  void store(std::array<Shr3, 4>& g) const {
    for (std::size_t l = 0; l < 4; ++l) g[l] = Shr3(y[l]);
  }
};

template <class G>
std::array<G, 4> component(const std::array<Kiss, 4>& g,
                           const G& (Kiss::*part)() const) {
  return {(g[0].*part)(), (g[1].*part)(), (g[2].*part)(), (g[3].*part)()};
}

struct KissLanes {
  MwcLanes mwc;
  LcgLanes lcg;
  Shr3Lanes shr3;

  explicit KissLanes(const std::array<Kiss, 4>& g)
      : mwc(component(g, &Kiss::mwc)),
        lcg(component(g, &Kiss::lcg)),
        shr3(component(g, &Kiss::shr3)) {}

  Lanes4 next() {
    const Lanes4 m = mwc.next();
    const Lanes4 l = lcg.next();
    const Lanes4 s = shr3.next();
    return (m ^ l) + s;
  }

  void store(std::array<Kiss, 4>& g) const {
    std::array<CombinedMwc, 4> m = component(g, &Kiss::mwc);
    std::array<Lcg, 4> l = component(g, &Kiss::lcg);
    std::array<Shr3, 4> s = component(g, &Kiss::shr3);
    mwc.store(m);
    lcg.store(l);
    shr3.store(s);
    for (std::size_t i = 0; i < 4; ++i) g[i] = Kiss(m[i], s[i], l[i]);
  }
};

template <class G> struct LanesOf;
template <> struct LanesOf<CombinedMwc> { using type = MwcLanes; };
template <> struct LanesOf<Lcg> { using type = LcgLanes; };
template <> struct LanesOf<Shr3> { using type = Shr3Lanes; };
template <> struct LanesOf<Kiss> { using type = KissLanes; };

template <class G, std::size_t... I>
std::array<G, sizeof...(I)> load_group(std::span<G> gens, std::size_t first,
                                       std::index_sequence<I...>) {
  return {gens[first + I]...};
}

// Streams are stepped in groups of kLanes in lock-step, one vector lane per
// stream. Stream s still writes [s*n_t, (s+1)*n_t).
inline constexpr std::size_t kLanes = 4;

template <class G, class E>
void run_streams(std::span<G> gens, std::uint64_t first_stream,
                 std::uint64_t n_t, const E& emit) {
  std::size_t s = 0;
  for (; s + kLanes <= gens.size(); s += kLanes) {
    auto g = load_group(gens, s, std::make_index_sequence<kLanes>{});
    std::array<std::uint64_t, kLanes> base;
    for (std::size_t l = 0; l < kLanes; ++l) {
      base[l] = (first_stream + s + l) * n_t;
    }
    std::uint64_t i = 0;
    if constexpr (std::is_same_v<G, XorShift256>) {
      const bool aligned = std::all_of(
          g.begin(), g.end(), [](const G& x) { return x.cursor() == 0; });
      if (aligned) i = xorshift_lanes(g, base, n_t, emit);
    } else {
      typename LanesOf<G>::type lanes(g);
      for (; i < n_t; ++i) emit_lanes(emit, base, i, lanes.next());
      lanes.store(g);
    }
    for (; i < n_t; ++i) {
      for (std::size_t l = 0; l < kLanes; ++l) {
        emit(base[l] + i, g[l].next());
      }
    }
    for (std::size_t l = 0; l < kLanes; ++l) {
      gens[s + l] = g[l];
    }
  }
  for (; s < gens.size(); ++s) {
    G g = gens[s];
    const std::uint64_t base = (first_stream + s) * n_t;
    for (std::uint64_t i = 0; i < n_t; ++i) emit(base + i, g.next());
    gens[s] = g;
  }
}

template <class G, class E>
double timed_pass(std::span<G> gens, const BenchConfig& cfg, const E& emit) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(1u, cfg.workers), gens.size()));
  if (workers == 1) {
    run_streams(gens, 0, cfg.n_per_stream, emit);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = gens.size() * w / workers;
      const std::size_t hi = gens.size() * (w + 1) / workers;
      pool.emplace_back([&, lo, hi] {
        run_streams(gens.subspan(lo, hi - lo), lo, cfg.n_per_stream, emit);
      });
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  const double t = std::chrono::duration<double>(stop - start).count();
  if (!(t > 0)) {
    throw Error(Errc::clock_failure, "steady clock did not advance");
  }
  return t;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <class G, bool kWriteback, bool kUniform>
std::vector<double> time_mode(const std::vector<G>& initial,
                              const BenchConfig& cfg, std::uint32_t* out,
                              float* fout, std::vector<G>* final_states) {
  const Emit<kWriteback, kUniform> emit{out, fout};
  std::vector<double> times;
  for (unsigned r = 0; r < cfg.repeats; ++r) {
    std::vector<G> gens = initial;
    times.push_back(timed_pass(std::span<G>(gens), cfg, emit));
    if (final_states && r == 0) *final_states = gens;
  }
  return times;
}

template <class G>
BenchRun bench_typed(const BenchConfig& cfg, const std::vector<G>& initial) {
  const std::uint64_t total = cfg.n_per_stream * cfg.streams;
  std::vector<std::uint32_t> out;
  std::vector<float> fout;
  if (cfg.writeback) {
    out.assign(total, 0);
    if (cfg.uniform) fout.assign(total, 0.0f);
  }

  BenchRun run;
  std::vector<G> finals;
  if (cfg.writeback) {
    run.times = time_mode<G, true, false>(initial, cfg, out.data(), nullptr,
                                          &finals);
    if (cfg.uniform) {
      run.uniform_times = time_mode<G, true, true>(initial, cfg, nullptr,
                                                   fout.data(), nullptr);
    }
  } else {
    run.times =
        time_mode<G, false, false>(initial, cfg, nullptr, nullptr, &finals);
    if (cfg.uniform) {
      run.uniform_times =
          time_mode<G, false, true>(initial, cfg, nullptr, nullptr, nullptr);
    }
  }
  run.final_states.assign(finals.begin(), finals.end());

  std::optional<double> ut;
  if (cfg.uniform) ut = median(run.uniform_times);
  run.report = make_report(cfg.kind,
                           cfg.writeback, cfg.workers, cfg.n_per_stream,
                           cfg.streams, median(run.times), ut);
  return run;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : "-";
}

[[noreturn]] void bad_row(std::string_view row, const std::string& why) {
  throw Error(Errc::invalid_argument,
              "bad report row '" + std::string(row) + "': " + why);
}

}  // namespace

BenchReport make_report(GeneratorKind kind, bool writeback, unsigned workers,
                        std::uint64_t n_t, std::uint64_t N_t, double t_seconds,
                        std::optional<double> uniform_t_seconds) {
  if (!(t_seconds > 0)) {
    throw Error(Errc::clock_failure, "non-positive elapsed time");
  }
  const double samples = static_cast<double>(n_t) * static_cast<double>(N_t);
  BenchReport r;
  r.kind = kind;
  r.writeback = writeback;
  r.workers = workers;
  r.n_t = n_t;
  r.N_t = N_t;
  r.t_seconds = t_seconds;
  r.rate_gsps = quantize(samples / (t_seconds * 1e9));
  r.uops_gops = r.rate_gsps * op_count(kind);
  if (writeback) r.bw_gbps = r.rate_gsps * 4.0;
  if (uniform_t_seconds) {
    if (!(*uniform_t_seconds > 0)) {
      throw Error(Errc::clock_failure, "non-positive elapsed time");
    }
    r.uniform_rate_gsps = quantize(samples / (*uniform_t_seconds * 1e9));
  }
  return r;
}

BenchRun run_benchmark_detailed(const BenchConfig& cfg) {
  if (cfg.n_per_stream == 0 || cfg.streams == 0) {
    throw Error(Errc::invalid_argument,
                "n_t and N_t must both be at least 1");
  }
  if (cfg.repeats == 0) {
    throw Error(Errc::invalid_argument, "repeats must be at least 1");
  }
  const std::uint64_t total = cfg.n_per_stream * cfg.streams;
  if (total / cfg.streams != cfg.n_per_stream ||
      total > cfg.budget_bytes / 4) {
    throw Error(Errc::budget_exceeded,
                "n_t * N_t * 4 bytes exceeds the budget of " +
                    std::to_string(cfg.budget_bytes) + " bytes");
  }

  const std::vector<StreamParams> params =
      seed_streams(cfg.master_seed, cfg.streams);
  return std::visit(
      [&](const auto& sample) -> BenchRun {
        using G = std::decay_t<decltype(sample)>;
        std::vector<G> gens;
        gens.reserve(params.size());
        for (const auto& p : params) {
          gens.push_back(std::get<G>(make_generator(cfg.kind, p)));
        }
        return bench_typed(cfg, gens);
      },
      make_generator(cfg.kind, params.front()));
}

std::string report_row(const BenchReport& r) {
  std::ostringstream os;
  os << kind_name(r.kind) << ',' << (r.writeback ? "yes" : "no") << ','
     << r.workers << ',' << r.n_t << ',' << r.N_t << ','
     << format_double(r.t_seconds) << ',' << format_optional(r.bw_gbps) << ','
     << format_double(r.uops_gops) << ',' << format_double(r.rate_gsps) << ','
     << format_optional(r.uniform_rate_gsps);
  return os.str();
}

BenchReport parse_report_row(std::string_view row) {
  while (!row.empty() && (row.back() == '\n' || row.back() == '\r')) {
    row.remove_suffix(1);
  }
  std::vector<std::string_view> f;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = row.find(',', start);
    f.push_back(row.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (f.size() != 10) bad_row(row, "expected 10 fields");

  auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      bad_row(row, "bad integer '" + std::string(s) + "'");
    }
    return v;
  };
  auto parse_f64 = [&](std::string_view s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      bad_row(row, "bad number '" + std::string(s) + "'");
    }
    return v;
  };
  auto parse_opt = [&](std::string_view s) -> std::optional<double> {
    if (s == "-") return std::nullopt;
    return parse_f64(s);
  };

  BenchReport r;
  r.kind = parse_generator_kind(f[0]);
  if (f[1] == "yes") {
    r.writeback = true;
  } else if (f[1] == "no") {
    r.writeback = false;
  } else {
    bad_row(row, "writeback must be yes or no");
  }
  r.workers = static_cast<unsigned>(parse_u64(f[2]));
  r.n_t = parse_u64(f[3]);
  r.N_t = parse_u64(f[4]);
  r.t_seconds = parse_f64(f[5]);
  r.bw_gbps = parse_opt(f[6]);
  r.uops_gops = parse_f64(f[7]);
  r.rate_gsps = parse_f64(f[8]);
  r.uniform_rate_gsps = parse_opt(f[9]);
  return r;
}

std::string emit_reports(std::span<const BenchReport> reports,
                         ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::machine) {
    os << kReportCsvHeader << '\n';
    for (const auto& r : reports) os << report_row(r) << '\n';
    return os.str();
  }

  auto cell = [](const std::optional<double>& v, int precision) {
    if (!v) return std::string("-");
    std::ostringstream c;
    c << std::fixed << std::setprecision(precision) << *v;
    return c.str();
  };
  os << std::left << std::setw(15) << "" << std::right << std::setw(12)
     << "t (ms)" << std::setw(12) << "BW (GBps)" << std::setw(14)
     << "U_ops (GOps)" << std::setw(20) << "rate (GSamples/s)"
     << std::setw(28) << "uniform rate (GSamples/s)" << '\n';
  for (const auto& r : reports) {
    os << std::left << std::setw(15)
       << (r.writeback ? "W/ writeback" : "W/o writeback") << std::right
       << std::setw(12) << cell(r.t_seconds * 1e3, 3) << std::setw(12)
       << cell(r.bw_gbps, 3) << std::setw(14) << cell(r.uops_gops, 3)
       << std::setw(20) << cell(r.rate_gsps, 4) << std::setw(28)
       << cell(r.uniform_rate_gsps, 4) << '\n';
  }
  if (!reports.empty()) {
    const BenchReport& r = reports.front();
    os << "generator " << kind_name(r.kind) << ", n_t=" << r.n_t
       << ", N_t=" << r.N_t << ", workers=" << r.workers
       << ", n_ops=" << op_count(r.kind)
       << " (useful word operations per output; lcg and shr3 counted by the "
          "same convention)\n";
  }
  return os.str();
}

std::string emit_report(const BenchReport& report, ReportFormat format) {
  return emit_reports(std::span<const BenchReport>(&report, 1), format);
}

}  // namespace prngforge
