#ifndef MXGUARD_NUMERIC_CORE_HPP_
#define MXGUARD_NUMERIC_CORE_HPP_

#include <cstddef>
#include <utility>

#include "mxguard/nat.hpp"

namespace mxguard {

// Modulus N together with a positive multiple of its group exponent used for
// exponent reduction and exponent encoding. Normally that multiple is the
// Euler totient itself; the library never factors N, so callers supply it.
class ModulusContext {
 public:
  // Requires modulus >= 2 and 1 <= totient < modulus.
  ModulusContext(Nat modulus, Nat totient);

  // For callers that only know some multiple of phi(N), e.g. e*d - 1 from an
  // RSA key pair. Only requires multiple >= 1.
  static ModulusContext WithTotientMultiple(Nat modulus, Nat multiple);

  const Nat& modulus() const { return modulus_; }
  const Nat& totient() const { return totient_; }

 private:
  struct Unchecked {};
  ModulusContext(Unchecked, Nat modulus, Nat totient)
      : modulus_(std::move(modulus)), totient_(std::move(totient)) {}

  Nat modulus_;
  Nat totient_;
};

// Output of the instrumented exponentiation.
struct ExpOutput {
  Nat result;
  // Accumulator after `l` loop iterations, i.e. base^(reduced_exp mod 2^l).
  Nat result_partial;
  std::size_t hamming_weight = 0;

  friend bool operator==(const ExpOutput&, const ExpOutput&) = default;
};

struct PartialOutput {
  Nat partial;
  std::size_t hamming_weight = 0;

  friend bool operator==(const PartialOutput&, const PartialOutput&) = default;
};

// Right-to-left square-and-multiply: every iteration multiplies the
// accumulator on a set bit and squares the base. exponent = 0 gives 1.
// Throws InvalidModulusError for modulus < 2.
Nat ModExpPlain(const Nat& base, const Nat& exponent, const Nat& modulus);

// Reduces base mod N and exponent mod totient, then runs the same loop while
// counting set bits and snapshotting the accumulator once `l` iterations
// have run. When the reduced exponent has at most `l` bits the snapshot is
// the final result.
//
// Throws NonUnitBaseError unless gcd(base mod N, N) = 1, and
// InvalidParameterError for l = 0.
ExpOutput ModExpInstrumented(const Nat& base, const Nat& exponent,
                             const ModulusContext& ctx, std::size_t l);

// The second-round computation: at most `l` loop iterations over the low bits
// of the reduced exponent, plus the popcount of the whole reduced exponent.
// Equal to the (result_partial, hamming_weight) pair of ModExpInstrumented.
PartialOutput ModExpPartial(const Nat& base, const Nat& exponent,
                            const ModulusContext& ctx, std::size_t l);

std::size_t Popcount(const Nat& n);

// Throws NonUnitBaseError unless gcd(base mod N, N) = 1.
void RequireUnitBase(const Nat& base, const ModulusContext& ctx);

namespace internal {

// Same computations without the unit-base check. Used by the protection
// schemes after the caller's base has been validated: a fault may turn an
// encoded operand into a non-unit, and that must surface as a mismatch
// rather than an exception.
ExpOutput ModExpInstrumentedUnchecked(const Nat& base, const Nat& exponent,
                                      const ModulusContext& ctx,
                                      std::size_t l);
PartialOutput ModExpPartialUnchecked(const Nat& base, const Nat& exponent,
                                     const ModulusContext& ctx, std::size_t l);

}  // namespace internal

}  // namespace mxguard

#endif  // MXGUARD_NUMERIC_CORE_HPP_
