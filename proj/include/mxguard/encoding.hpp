#ifndef MXGUARD_ENCODING_HPP_
#define MXGUARD_ENCODING_HPP_

#include <array>
#include <cstddef>

#include "mxguard/nat.hpp"
#include "mxguard/numeric_core.hpp"
#include "mxguard/rng.hpp"

namespace mxguard {

inline constexpr std::size_t kDefaultCoefficientBits = 50;

struct Encoded {
  Nat value;
  Nat coefficient;
};

// Both encoded operands of one computation round.
struct EncodedInput {
  Nat encoded_base;          // base + k_base * N
  Nat encoded_exponent;      // exponent + k_exp * totient
  Nat base_coefficient;
  Nat exponent_coefficient;
};

// Uniform in [2^(k_bits-1), 2^k_bits): the top bit is always set, so every
// coefficient has exactly k_bits bits.
Nat DrawCoefficient(Rng& rng, std::size_t k_bits);

Encoded EncodeBase(const Nat& base, const ModulusContext& ctx, Rng& rng,
                   std::size_t k_bits = kDefaultCoefficientBits);
Encoded EncodeBase(const Nat& base, const ModulusContext& ctx,
                   const Nat& coefficient);

Encoded EncodeExponent(const Nat& exponent, const ModulusContext& ctx,
                       Rng& rng, std::size_t k_bits = kDefaultCoefficientBits);
Encoded EncodeExponent(const Nat& exponent, const ModulusContext& ctx,
                       const Nat& coefficient);

// Source of the coefficients k1..k4 consumed by one protected call, in the
// order base(round 1), exponent(round 1), base(round 2), exponent(round 2).
class CoefficientSource {
 public:
  virtual ~CoefficientSource() = default;
  virtual Nat Next() = 0;
};

class RandomCoefficients final : public CoefficientSource {
 public:
  RandomCoefficients(Rng& rng, std::size_t k_bits);
  Nat Next() override { return DrawCoefficient(rng_, k_bits_); }

 private:
  Rng& rng_;
  std::size_t k_bits_;
};

// Replays fixed coefficients; used for reproducing worked examples.
class FixedCoefficients final : public CoefficientSource {
 public:
  explicit FixedCoefficients(std::array<Nat, 4> values)
      : values_(std::move(values)) {}
  Nat Next() override;

 private:
  std::array<Nat, 4> values_;
  std::size_t next_ = 0;
};

// Draws the base coefficient, then the exponent coefficient.
EncodedInput EncodeInput(const Nat& base, const Nat& exponent,
                         const ModulusContext& ctx,
                         CoefficientSource& coefficients);

}  // namespace mxguard

#endif  // MXGUARD_ENCODING_HPP_
