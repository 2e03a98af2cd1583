#ifndef MXGUARD_RNG_HPP_
#define MXGUARD_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

#include "mxguard/nat.hpp"

namespace mxguard {

// Deterministic simulation generator.
//
// The engine is std::mt19937_64, whose recurrence and seeding are fully
// fixed by the C++ standard (the 10000th output of a default-seeded engine
// is 9981545732273789042). Every derived quantity is built from raw 64-bit
// outputs with the procedures documented on each method, never through
// std::uniform_int_distribution, whose algorithm is implementation-defined.
//
// Not a cryptographic source. Production use of the encoders needs a CSPRNG.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, bound). Rejects raw outputs below (2^64 - bound) mod bound
  // and returns r mod bound for the first accepted r.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform in [0, 2^count). Draws ceil(count / 64) words; word i supplies
  // bits [64i, 64i + 64) and the excess high bits of the last word are
  // cleared.
  Nat Bits(std::size_t count);

  // Uniform in [0, bound) by rejection on Bits(bound.BitLength()).
  Nat Below(const Nat& bound);

  // SplitMix64 finaliser.
  static std::uint64_t Mix(std::uint64_t x);

  // Seed for a child stream: h = Mix(seed); for each p in path,
  // h = Mix(h ^ Mix(p + 0x9E3779B97F4A7C15)).
  static std::uint64_t Derive(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> path);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mxguard

#endif  // MXGUARD_RNG_HPP_
