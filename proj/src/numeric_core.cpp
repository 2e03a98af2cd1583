#include "mxguard/numeric_core.hpp"

#include <utility>

#include "mxguard/errors.hpp"

namespace mxguard {

namespace {

void RequireModulus(const Nat& modulus) {
  if (modulus < Nat(2)) {
    throw InvalidModulusError("modulus must be >= 2, got " +
                              modulus.ToDecimal());
  }
}

void RequireWindow(std::size_t l) {
  if (l == 0) throw InvalidParameterError("partial window l must be >= 1");
}

// acc = acc * factor mod n, reusing `scratch` for the double-width product.
inline void MulMod(mpz_class& acc, const mpz_class& factor, const mpz_class& n,
                   mpz_class& scratch) {
  mpz_mul(scratch.get_mpz_t(), acc.get_mpz_t(), factor.get_mpz_t());
  mpz_tdiv_r(acc.get_mpz_t(), scratch.get_mpz_t(), n.get_mpz_t());
}

inline void SqrMod(mpz_class& acc, const mpz_class& n, mpz_class& scratch) {
  mpz_mul(scratch.get_mpz_t(), acc.get_mpz_t(), acc.get_mpz_t());
  mpz_tdiv_r(acc.get_mpz_t(), scratch.get_mpz_t(), n.get_mpz_t());
}

// The shared loop. Walks the exponent from bit 0 upwards (equivalent to the
// y mod 2 / y >> 1 formulation) and stops after `max_iterations` steps.
// If `snapshot` is non-null it receives the accumulator once `snapshot_at`
// iterations have completed.
void SquareMultiplyLoop(mpz_class& result, mpz_class base,
                        const mpz_class& exponent, const mpz_class& modulus,
                        std::size_t max_iterations, std::size_t snapshot_at,
                        mpz_class* snapshot) {
  mpz_class scratch;
  const std::size_t bits =
      sgn(exponent) == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  const std::size_t iterations = bits < max_iterations ? bits : max_iterations;
  for (std::size_t counter = 0; counter < iterations;) {
    if (mpz_tstbit(exponent.get_mpz_t(), counter)) {
      MulMod(result, base, modulus, scratch);
    }
    SqrMod(base, modulus, scratch);
    ++counter;
    if (snapshot != nullptr && counter == snapshot_at) *snapshot = result;
  }
}

}  // namespace

ModulusContext::ModulusContext(Nat modulus, Nat totient)
    : modulus_(std::move(modulus)), totient_(std::move(totient)) {
  RequireModulus(modulus_);
  if (totient_.IsZero() || !(totient_ < modulus_)) {
    throw InvalidModulusError("totient must lie in [1, modulus)");
  }
}

ModulusContext ModulusContext::WithTotientMultiple(Nat modulus, Nat multiple) {
  RequireModulus(modulus);
  if (multiple.IsZero()) {
    throw InvalidModulusError("totient multiple must be >= 1");
  }
  return ModulusContext(Unchecked{}, std::move(modulus), std::move(multiple));
}

Nat ModExpPlain(const Nat& base, const Nat& exponent, const Nat& modulus) {
  RequireModulus(modulus);
  mpz_class result = 1;
  mpz_class x;
  mpz_tdiv_r(x.get_mpz_t(), base.mpz().get_mpz_t(), modulus.mpz().get_mpz_t());
  SquareMultiplyLoop(result, std::move(x), exponent.mpz(), modulus.mpz(),
                     exponent.BitLength(), 0, nullptr);
  return Nat(std::move(result));
}

std::size_t Popcount(const Nat& n) { return n.Popcount(); }

void RequireUnitBase(const Nat& base, const ModulusContext& ctx) {
  if (Gcd(base % ctx.modulus(), ctx.modulus()) != Nat(1)) {
    throw NonUnitBaseError(
        "base shares a factor with the modulus; exponent reduction by the "
        "totient is not value-preserving");
  }
}

ExpOutput ModExpInstrumented(const Nat& base, const Nat& exponent,
                             const ModulusContext& ctx, std::size_t l) {
  RequireWindow(l);
  RequireUnitBase(base, ctx);
  return internal::ModExpInstrumentedUnchecked(base, exponent, ctx, l);
}

PartialOutput ModExpPartial(const Nat& base, const Nat& exponent,
                            const ModulusContext& ctx, std::size_t l) {
  RequireWindow(l);
  RequireUnitBase(base, ctx);
  return internal::ModExpPartialUnchecked(base, exponent, ctx, l);
}

namespace internal {

ExpOutput ModExpInstrumentedUnchecked(const Nat& base, const Nat& exponent,
                                      const ModulusContext& ctx,
                                      std::size_t l) {
  RequireWindow(l);
  const mpz_class& n = ctx.modulus().mpz();
  mpz_class x;
  mpz_tdiv_r(x.get_mpz_t(), base.mpz().get_mpz_t(), n.get_mpz_t());
  mpz_class y;
  mpz_tdiv_r(y.get_mpz_t(), exponent.mpz().get_mpz_t(),
             ctx.totient().mpz().get_mpz_t());

  mpz_class result = 1;
  mpz_class partial;
  const std::size_t bits = sgn(y) == 0 ? 0 : mpz_sizeinbase(y.get_mpz_t(), 2);
  SquareMultiplyLoop(result, std::move(x), y, n, bits, l, &partial);
  if (bits < l) partial = result;

  ExpOutput out;
  out.hamming_weight = sgn(y) == 0 ? 0 : mpz_popcount(y.get_mpz_t());
  out.result = Nat(std::move(result));
  out.result_partial = Nat(std::move(partial));
  return out;
}

PartialOutput ModExpPartialUnchecked(const Nat& base, const Nat& exponent,
                                     const ModulusContext& ctx,
                                     std::size_t l) {
  RequireWindow(l);
  const mpz_class& n = ctx.modulus().mpz();
  mpz_class x;
  mpz_tdiv_r(x.get_mpz_t(), base.mpz().get_mpz_t(), n.get_mpz_t());
  mpz_class y;
  mpz_tdiv_r(y.get_mpz_t(), exponent.mpz().get_mpz_t(),
             ctx.totient().mpz().get_mpz_t());

  mpz_class partial = 1;
  SquareMultiplyLoop(partial, std::move(x), y, n, l, 0, nullptr);

  PartialOutput out;
  out.hamming_weight = sgn(y) == 0 ? 0 : mpz_popcount(y.get_mpz_t());
  out.partial = Nat(std::move(partial));
  return out;
}

}  // namespace internal

}  // namespace mxguard
