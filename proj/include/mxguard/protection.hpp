#ifndef MXGUARD_PROTECTION_HPP_
#define MXGUARD_PROTECTION_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>

#include "mxguard/encoding.hpp"
#include "mxguard/nat.hpp"
#include "mxguard/numeric_core.hpp"
#include "mxguard/rng.hpp"

namespace mxguard {

// The four encoded operands of a protected call: round-1 base and exponent,
// round-2 base and exponent.
enum class Operand : std::uint8_t { kX1 = 0, kY1 = 1, kX2 = 2, kY2 = 3 };

std::string_view OperandName(Operand op);

// Injection seam. Each operand may carry a transformation that is applied
// after encoding and before the operand enters the exponentiation.
class FaultHooks {
 public:
  using Transform = std::function<Nat(const Nat&)>;

  FaultHooks() = default;

  FaultHooks& Set(Operand op, Transform transform);
  bool Touches(Operand op) const;
  bool IsInert() const;
  Nat Apply(Operand op, const Nat& value) const;

 private:
  std::array<Transform, 4> transforms_;
};

enum class VerdictStatus { kAccepted, kFaultDetected };

// Which comparison rejected the call.
enum class Mismatch { kNone, kPartial, kHamming, kFull };

std::string_view MismatchName(Mismatch m);

class Verdict {
 public:
  static Verdict Accepted(Nat result);
  static Verdict FaultDetected(Mismatch detail);

  VerdictStatus status() const { return status_; }
  bool accepted() const { return status_ == VerdictStatus::kAccepted; }
  Mismatch detail() const { return detail_; }
  // Throws InvalidParameterError if the verdict is not ACCEPTED.
  const Nat& result() const;

 private:
  Verdict(VerdictStatus status, std::optional<Nat> result, Mismatch detail)
      : status_(status), result_(std::move(result)), detail_(detail) {}

  VerdictStatus status_;
  std::optional<Nat> result_;
  Mismatch detail_;
};

struct RoundTranscript {
  // Operands as fed to the exponentiations, i.e. after any hook.
  Nat x1, y1, x2, y2;
  // k1..k4 in draw order.
  std::array<Nat, 4> coefficients;
  ExpOutput round1;
  // PartialOutput for the partial scheme, ExpOutput for the full scheme.
  std::variant<PartialOutput, ExpOutput> round2;
};

struct ProtectedResult {
  Verdict verdict;
  RoundTranscript transcript;
};

inline constexpr std::size_t kDefaultPartialWindow = 128;
// 12% of a 2048-bit exponent.
inline constexpr std::size_t kHardwarePartialWindow = 246;

// Full recomputation: two independently encoded full exponentiations,
// accepted only when they agree. Throws NonUnitBaseError for a non-unit
// base.
ProtectedResult Scheme1Full(const Nat& base, const Nat& exponent,
                            const ModulusContext& ctx,
                            CoefficientSource& coefficients,
                            const FaultHooks& hooks = {});
ProtectedResult Scheme1Full(const Nat& base, const Nat& exponent,
                            const ModulusContext& ctx, Rng& rng,
                            std::size_t k_bits = kDefaultCoefficientBits,
                            const FaultHooks& hooks = {});

// Partial recomputation: round 1 is the instrumented exponentiation on
// (x1, y1); round 2 only recomputes the low `l` exponent bits on (x2, y2).
// Accepted iff both the partial results and the Hamming weights agree; the
// partial comparison runs first.
ProtectedResult Scheme2Partial(const Nat& base, const Nat& exponent,
                               const ModulusContext& ctx, std::size_t l,
                               CoefficientSource& coefficients,
                               const FaultHooks& hooks = {});
ProtectedResult Scheme2Partial(const Nat& base, const Nat& exponent,
                               const ModulusContext& ctx, std::size_t l,
                               Rng& rng,
                               std::size_t k_bits = kDefaultCoefficientBits,
                               const FaultHooks& hooks = {});

}  // namespace mxguard

#endif  // MXGUARD_PROTECTION_HPP_
