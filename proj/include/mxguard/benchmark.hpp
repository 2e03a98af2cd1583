#ifndef MXGUARD_BENCHMARK_HPP_
#define MXGUARD_BENCHMARK_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mxguard/errors.hpp"

namespace mxguard {

struct BenchConfig {
  std::size_t modulus_bits = 2048;
  std::vector<std::size_t> l_values{10, 20, 50, 128, 256};
  std::size_t repetitions = 1000;
  std::size_t warmup = 5;
  std::uint64_t seed = 0;
  std::size_t k_bits = 50;

  void Validate() const;
};

// Raised when the clock cannot resolve a single call with useful precision.
class TimerResolutionError : public Error {
 public:
  using Error::Error;
};

struct Quartiles {
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  double iqr() const { return q3 - q1; }
};

// Linear-interpolated quartiles of `samples`.
Quartiles ComputeQuartiles(std::vector<double> samples);

struct BenchPoint {
  std::size_t l = 0;
  Quartiles unprotected_ns;
  Quartiles protected_ns;
  double overhead_percent = 0;  // from the two medians
  double fit_residual = 0;      // against the affine fit below
};

// overhead_percent ~ intercept + slope * (l / modulus_bits).
struct AffineFit {
  double intercept = 0;
  double slope = 0;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchPoint> points;
  AffineFit fit;
  double timer_resolution_ns = 0;
  bool pinned = false;
  std::string environment;
};

// Times the unprotected flow (instrumented exponentiation on the plain
// inputs: reductions plus the main loop) against the full partial scheme
// (encoding, both rounds, comparisons) for every l, over the same seeded
// input sequence. Each repetition runs the flows in a rotated order. The
// calling thread is pinned to its current CPU where the platform allows.
BenchReport RunBench(const BenchConfig& config);

}  // namespace mxguard

#endif  // MXGUARD_BENCHMARK_HPP_
