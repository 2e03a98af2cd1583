#include "mxguard/protection.hpp"

#include <utility>

#include "mxguard/errors.hpp"

namespace mxguard {

namespace {

std::size_t Index(Operand op) { return static_cast<std::size_t>(op); }

struct FedOperands {
  Nat base;
  Nat exponent;
};

FedOperands EncodeRound(const Nat& base, const Nat& exponent,
                        const ModulusContext& ctx,
                        CoefficientSource& coefficients, const FaultHooks& hooks,
                        Operand base_op, Operand exp_op, Nat& k_base,
                        Nat& k_exp) {
  EncodedInput enc = EncodeInput(base, exponent, ctx, coefficients);
  k_base = std::move(enc.base_coefficient);
  k_exp = std::move(enc.exponent_coefficient);
  return {hooks.Apply(base_op, enc.encoded_base),
          hooks.Apply(exp_op, enc.encoded_exponent)};
}

}  // namespace

std::string_view OperandName(Operand op) {
  switch (op) {
    case Operand::kX1: return "x1";
    case Operand::kY1: return "y1";
    case Operand::kX2: return "x2";
    case Operand::kY2: return "y2";
  }
  return "?";
}

FaultHooks& FaultHooks::Set(Operand op, Transform transform) {
  transforms_[Index(op)] = std::move(transform);
  return *this;
}

bool FaultHooks::Touches(Operand op) const {
  return static_cast<bool>(transforms_[Index(op)]);
}

bool FaultHooks::IsInert() const {
  for (const auto& t : transforms_) {
    if (t) return false;
  }
  return true;
}

Nat FaultHooks::Apply(Operand op, const Nat& value) const {
  const auto& t = transforms_[Index(op)];
  return t ? t(value) : value;
}

std::string_view MismatchName(Mismatch m) {
  switch (m) {
    case Mismatch::kNone: return "none";
    case Mismatch::kPartial: return "partial-mismatch";
    case Mismatch::kHamming: return "hamming-mismatch";
    case Mismatch::kFull: return "full-mismatch";
  }
  return "?";
}

Verdict Verdict::Accepted(Nat result) {
  return Verdict(VerdictStatus::kAccepted, std::move(result), Mismatch::kNone);
}

Verdict Verdict::FaultDetected(Mismatch detail) {
  if (detail == Mismatch::kNone) {
    throw InvalidParameterError("a detected fault needs a mismatch kind");
  }
  return Verdict(VerdictStatus::kFaultDetected, std::nullopt, detail);
}

const Nat& Verdict::result() const {
  if (!result_) throw InvalidParameterError("verdict carries no result");
  return *result_;
}

ProtectedResult Scheme1Full(const Nat& base, const Nat& exponent,
                            const ModulusContext& ctx,
                            CoefficientSource& coefficients,
                            const FaultHooks& hooks) {
  RequireUnitBase(base, ctx);
  RoundTranscript t;

  // Round 1 (t1).
  FedOperands r1 = EncodeRound(base, exponent, ctx, coefficients, hooks,
                               Operand::kX1, Operand::kY1, t.coefficients[0],
                               t.coefficients[1]);
  t.round1 = internal::ModExpInstrumentedUnchecked(r1.base, r1.exponent, ctx, 1);
  t.x1 = std::move(r1.base);
  t.y1 = std::move(r1.exponent);

  // Round 2 (t2), fresh coefficients.
  FedOperands r2 = EncodeRound(base, exponent, ctx, coefficients, hooks,
                               Operand::kX2, Operand::kY2, t.coefficients[2],
                               t.coefficients[3]);
  ExpOutput q2 =
      internal::ModExpInstrumentedUnchecked(r2.base, r2.exponent, ctx, 1);
  t.x2 = std::move(r2.base);
  t.y2 = std::move(r2.exponent);

  const bool agree = t.round1.result == q2.result;
  t.round2 = std::move(q2);
  Verdict v = agree ? Verdict::Accepted(t.round1.result)
                    : Verdict::FaultDetected(Mismatch::kFull);
  return {std::move(v), std::move(t)};
}

ProtectedResult Scheme1Full(const Nat& base, const Nat& exponent,
                            const ModulusContext& ctx, Rng& rng,
                            std::size_t k_bits, const FaultHooks& hooks) {
  RandomCoefficients coefficients(rng, k_bits);
  return Scheme1Full(base, exponent, ctx, coefficients, hooks);
}

ProtectedResult Scheme2Partial(const Nat& base, const Nat& exponent,
                               const ModulusContext& ctx, std::size_t l,
                               CoefficientSource& coefficients,
                               const FaultHooks& hooks) {
  if (l == 0) throw InvalidParameterError("partial window l must be >= 1");
  RequireUnitBase(base, ctx);
  RoundTranscript t;

  // Round 1 (t1): the partial result falls out of the main loop.
  FedOperands r1 = EncodeRound(base, exponent, ctx, coefficients, hooks,
                               Operand::kX1, Operand::kY1, t.coefficients[0],
                               t.coefficients[1]);
  t.round1 = internal::ModExpInstrumentedUnchecked(r1.base, r1.exponent, ctx, l);
  t.x1 = std::move(r1.base);
  t.y1 = std::move(r1.exponent);

  // Round 2 (t2): only the low l bits.
  FedOperands r2 = EncodeRound(base, exponent, ctx, coefficients, hooks,
                               Operand::kX2, Operand::kY2, t.coefficients[2],
                               t.coefficients[3]);
  PartialOutput q2 =
      internal::ModExpPartialUnchecked(r2.base, r2.exponent, ctx, l);
  t.x2 = std::move(r2.base);
  t.y2 = std::move(r2.exponent);

  Mismatch mismatch = Mismatch::kNone;
  if (t.round1.result_partial != q2.partial) {
    mismatch = Mismatch::kPartial;
  } else if (t.round1.hamming_weight != q2.hamming_weight) {
    mismatch = Mismatch::kHamming;
  }
  t.round2 = std::move(q2);
  Verdict v = mismatch == Mismatch::kNone
                  ? Verdict::Accepted(t.round1.result)
                  : Verdict::FaultDetected(mismatch);
  return {std::move(v), std::move(t)};
}

ProtectedResult Scheme2Partial(const Nat& base, const Nat& exponent,
                               const ModulusContext& ctx, std::size_t l,
                               Rng& rng, std::size_t k_bits,
                               const FaultHooks& hooks) {
  RandomCoefficients coefficients(rng, k_bits);
  return Scheme2Partial(base, exponent, ctx, l, coefficients, hooks);
}

}  // namespace mxguard
