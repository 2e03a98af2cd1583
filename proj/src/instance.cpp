#include "mxguard/instance.hpp"

#include <string>

#include "mxguard/errors.hpp"

namespace mxguard {

namespace {

// Smallest prime >= a random `bits`-wide value whose top `top` bits are set;
// retried until the prime still has `bits` bits.
Nat PrimeWithTopBits(std::size_t bits, std::size_t top, Rng& rng) {
  for (;;) {
    Nat candidate = rng.Bits(bits);
    for (std::size_t i = 1; i <= top; ++i) {
      if (!candidate.TestBit(bits - i)) candidate.FlipBit(bits - i);
    }
    Nat p = IsProbablePrime(candidate) ? candidate : NextPrime(candidate);
    if (p.BitLength() == bits) return p;
  }
}

constexpr int kRsaAttempts = 1000;

}  // namespace

Nat RandomPrime(std::size_t bits, Rng& rng) {
  if (bits < 3) throw InvalidParameterError("prime width must be >= 3 bits");
  return PrimeWithTopBits(bits, 2, rng);
}

ModulusContext RandomRsaContext(std::size_t bits, Rng& rng) {
  if (bits < 8) throw InvalidParameterError("modulus width must be >= 8 bits");
  const std::size_t p_bits = (bits + 1) / 2;
  const std::size_t q_bits = bits / 2;
  // Two top bits per prime fix the product width. Narrow widths may offer a
  // single such prime, so later attempts set only the top bit and check.
  for (int attempt = 0; attempt < kRsaAttempts; ++attempt) {
    const std::size_t top = attempt < 16 ? 2 : 1;
    Nat p = PrimeWithTopBits(p_bits, top, rng);
    Nat q = PrimeWithTopBits(q_bits, top, rng);
    if (p == q) continue;
    Nat n = p * q;
    if (n.BitLength() != bits) continue;
    Nat phi = (p - Nat(1)) * (q - Nat(1));
    return ModulusContext(std::move(n), std::move(phi));
  }
  throw Error("could not build a " + std::to_string(bits) + "-bit RSA modulus");
}

Nat RandomUnit(const ModulusContext& ctx, Rng& rng, std::size_t max_attempts) {
  const Nat one(1);
  for (std::size_t i = 0; i < max_attempts; ++i) {
    Nat x = rng.Below(ctx.modulus());
    if (!x.IsZero() && Gcd(x, ctx.modulus()) == one) return x;
  }
  throw Error("could not sample a unit modulo " + ctx.modulus().ToDecimal());
}

}  // namespace mxguard
