#include "mxguard/encoding.hpp"

#include "mxguard/errors.hpp"

namespace mxguard {

Nat DrawCoefficient(Rng& rng, std::size_t k_bits) {
  if (k_bits == 0) throw InvalidParameterError("k_bits must be >= 1");
  Nat k = rng.Bits(k_bits - 1);
  k.FlipBit(k_bits - 1);
  return k;
}

Encoded EncodeBase(const Nat& base, const ModulusContext& ctx, Rng& rng,
                   std::size_t k_bits) {
  return EncodeBase(base, ctx, DrawCoefficient(rng, k_bits));
}

Encoded EncodeBase(const Nat& base, const ModulusContext& ctx,
                   const Nat& coefficient) {
  return {base + coefficient * ctx.modulus(), coefficient};
}

Encoded EncodeExponent(const Nat& exponent, const ModulusContext& ctx,
                       Rng& rng, std::size_t k_bits) {
  return EncodeExponent(exponent, ctx, DrawCoefficient(rng, k_bits));
}

Encoded EncodeExponent(const Nat& exponent, const ModulusContext& ctx,
                       const Nat& coefficient) {
  return {exponent + coefficient * ctx.totient(), coefficient};
}

RandomCoefficients::RandomCoefficients(Rng& rng, std::size_t k_bits)
    : rng_(rng), k_bits_(k_bits) {
  if (k_bits == 0) throw InvalidParameterError("k_bits must be >= 1");
}

Nat FixedCoefficients::Next() {
  if (next_ >= values_.size()) {
    throw InvalidParameterError("fixed coefficient list exhausted");
  }
  return values_[next_++];
}

EncodedInput EncodeInput(const Nat& base, const Nat& exponent,
                         const ModulusContext& ctx,
                         CoefficientSource& coefficients) {
  Encoded x = EncodeBase(base, ctx, coefficients.Next());
  Encoded y = EncodeExponent(exponent, ctx, coefficients.Next());
  return {std::move(x.value), std::move(y.value), std::move(x.coefficient),
          std::move(y.coefficient)};
}

}  // namespace mxguard
