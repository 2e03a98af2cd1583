#include "mxguard/benchmark.hpp"

#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#if defined(__linux__)
#include <sched.h>
#endif

#include "mxguard/encoding.hpp"
#include "mxguard/instance.hpp"
#include "mxguard/numeric_core.hpp"
#include "mxguard/protection.hpp"
#include "mxguard/rng.hpp"

namespace mxguard {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kBenchInstanceStream = 11;
constexpr std::uint64_t kBenchCoefficientStream = 12;

bool PinToCurrentCpu() {
#if defined(__linux__)
  const int cpu = sched_getcpu();
  if (cpu < 0) return false;
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(cpu, &set);
  return sched_setaffinity(0, sizeof(set), &set) == 0;
#else
  return false;
#endif
}

double MeasureResolutionNs() {
  double best = 1e18;
  for (int i = 0; i < 1000; ++i) {
    const auto a = Clock::now();
    auto b = Clock::now();
    while (b == a) b = Clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::nano>(b - a).count());
  }
  return best;
}

std::string CpuModel() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) return line.substr(colon + 2);
    }
  }
  return "unknown cpu";
}

std::string Fingerprint(bool pinned) {
  std::ostringstream os;
  os << CpuModel() << "; " << std::thread::hardware_concurrency()
     << " logical cpus; "
#if defined(__VERSION__)
     << "compiler " << __VERSION__ << "; "
#endif
     << "gmp " << gmp_version << "; "
     << (pinned ? "pinned to one cpu" : "not pinned (affinity unavailable)");
  return os.str();
}

template <typename F>
double TimeNs(F&& f) {
  const auto start = Clock::now();
  f();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::nano>(stop - start).count();
}

AffineFit FitAffine(const std::vector<BenchPoint>& points,
                    std::size_t modulus_bits) {
  AffineFit fit;
  const double n = static_cast<double>(points.size());
  if (points.size() < 2) {
    if (!points.empty()) fit.intercept = points.front().overhead_percent;
    return fit;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double x = static_cast<double>(p.l) / modulus_bits;
    sx += x;
    sy += p.overhead_percent;
    sxx += x * x;
    sxy += x * p.overhead_percent;
  }
  const double denom = n * sxx - sx * sx;
  if (denom != 0) fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

}  // namespace

void BenchConfig::Validate() const {
  if (modulus_bits < 8) throw InvalidParameterError("modulus_bits must be >= 8");
  if (repetitions < 10) {
    throw InvalidParameterError("repetitions must be >= 10 for a median");
  }
  if (l_values.empty()) throw InvalidParameterError("l_values is empty");
  if (k_bits == 0) throw InvalidParameterError("k_bits must be >= 1");
  for (const std::size_t l : l_values) {
    if (l == 0 || l > modulus_bits) {
      throw InvalidParameterError("every l must lie in [1, modulus_bits]");
    }
  }
}

Quartiles ComputeQuartiles(std::vector<double> samples) {
  Quartiles q;
  if (samples.empty()) throw InvalidParameterError("no samples");
  std::sort(samples.begin(), samples.end());
  auto at = [&](double p) {
    const double pos = p * static_cast<double>(samples.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, samples.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return samples[lo] + frac * (samples[hi] - samples[lo]);
  };
  q.q1 = at(0.25);
  q.median = at(0.5);
  q.q3 = at(0.75);
  return q;
}

BenchReport RunBench(const BenchConfig& config) {
  config.Validate();
  BenchReport report;
  report.config = config;
  report.pinned = PinToCurrentCpu();
  report.environment = Fingerprint(report.pinned);
  report.timer_resolution_ns = MeasureResolutionNs();

  Rng setup(Rng::Derive(config.seed, {kBenchInstanceStream}));
  const ModulusContext ctx = RandomRsaContext(config.modulus_bits, setup);
  struct Input {
    Nat base;
    Nat exponent;
  };
  std::vector<Input> inputs;
  inputs.reserve(config.repetitions);
  for (std::size_t i = 0; i < config.repetitions; ++i) {
    Nat base = RandomUnit(ctx, setup);
    inputs.push_back({std::move(base), setup.Bits(config.modulus_bits)});
  }

  const std::size_t flows = config.l_values.size() + 1;  // 0 = unprotected
  auto run_flow = [&](std::size_t flow, const Input& in, std::size_t rep) {
    if (flow == 0) {
      ExpOutput out = ModExpInstrumented(in.base, in.exponent, ctx,
                                         config.modulus_bits);
      return out.result.IsZero();
    }
    Rng coefficient_rng(
        Rng::Derive(config.seed, {kBenchCoefficientStream, rep}));
    ProtectedResult r = Scheme2Partial(in.base, in.exponent, ctx,
                                       config.l_values[flow - 1],
                                       coefficient_rng, config.k_bits);
    return r.verdict.accepted();
  };

  for (std::size_t w = 0; w < config.warmup; ++w) {
    const Input& in = inputs[w % inputs.size()];
    for (std::size_t f = 0; f < flows; ++f) run_flow(f, in, w);
  }

  std::vector<std::vector<double>> samples(flows);
  for (auto& s : samples) s.reserve(config.repetitions);
  volatile bool sink = false;
  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    for (std::size_t j = 0; j < flows; ++j) {
      const std::size_t f = (rep + j) % flows;
      samples[f].push_back(
          TimeNs([&] { sink = run_flow(f, inputs[rep], rep); }));
    }
  }
  (void)sink;

  const Quartiles base = ComputeQuartiles(samples[0]);
  if (base.median < 1000.0 * report.timer_resolution_ns) {
    throw TimerResolutionError(
        "per-call time is under 1000 timer ticks; raise modulus_bits or use a "
        "finer clock");
  }
  for (std::size_t f = 1; f < flows; ++f) {
    BenchPoint p;
    p.l = config.l_values[f - 1];
    p.unprotected_ns = base;
    p.protected_ns = ComputeQuartiles(samples[f]);
    p.overhead_percent =
        (p.protected_ns.median - base.median) / base.median * 100.0;
    report.points.push_back(p);
  }
  report.fit = FitAffine(report.points, config.modulus_bits);
  for (auto& p : report.points) {
    const double x = static_cast<double>(p.l) / config.modulus_bits;
    p.fit_residual =
        p.overhead_percent - (report.fit.intercept + report.fit.slope * x);
  }
  return report;
}

}  // namespace mxguard
