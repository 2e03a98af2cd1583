#ifndef MXGUARD_INSTANCE_HPP_
#define MXGUARD_INSTANCE_HPP_

#include <cstddef>

#include "mxguard/nat.hpp"
#include "mxguard/numeric_core.hpp"
#include "mxguard/rng.hpp"

namespace mxguard {

// Random probable prime with exactly `bits` bits and its two top bits set,
// so a product of two such primes has exactly the sum of their widths.
// Requires bits >= 3.
Nat RandomPrime(std::size_t bits, Rng& rng);

// N = p * q with p != q of ceil(bits/2) and floor(bits/2) bits and
// totient (p - 1)(q - 1). Requires bits >= 8.
ModulusContext RandomRsaContext(std::size_t bits, Rng& rng);

// Uniform unit of [1, N) by rejection. Throws Error after `max_attempts`
// draws that all share a factor with N.
Nat RandomUnit(const ModulusContext& ctx, Rng& rng,
               std::size_t max_attempts = 1000);

}  // namespace mxguard

#endif  // MXGUARD_INSTANCE_HPP_
