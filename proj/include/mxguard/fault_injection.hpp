#ifndef MXGUARD_FAULT_INJECTION_HPP_
#define MXGUARD_FAULT_INJECTION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mxguard/nat.hpp"
#include "mxguard/protection.hpp"
#include "mxguard/rng.hpp"

namespace mxguard {

enum class FaultKind {
  kNone,           // inert; used for fault-free baselines
  kTotalRandom,    // replace with a fresh uniform value
  kSingleBitFlip,  // flip one uniformly chosen bit
  kKRandomFlip,    // flip k distinct uniformly chosen bits
  kKBurstFlip,     // flip a run of k adjacent bits, truncated at the top
};

class FaultModel {
 public:
  // `width_bits` fixes the position / replacement domain. When empty the
  // domain is the bit length of the operand at injection time (at least 1).
  static FaultModel None();
  static FaultModel TotalRandom(std::optional<std::size_t> width_bits = {});
  static FaultModel SingleBitFlip(std::optional<std::size_t> width_bits = {});
  static FaultModel KRandomFlip(std::size_t k,
                                std::optional<std::size_t> width_bits = {});
  static FaultModel KBurstFlip(std::size_t k,
                               std::optional<std::size_t> width_bits = {});

  FaultKind kind() const { return kind_; }
  // Number of bits for the k-parameterised kinds, 1 for single-bit, 0 else.
  std::size_t k() const { return k_; }
  const std::optional<std::size_t>& width_bits() const { return width_bits_; }

  // Resolved domain width for `value`. Throws InvalidParameterError when k
  // exceeds it.
  std::size_t WidthFor(const Nat& value) const;

 private:
  FaultModel(FaultKind kind, std::size_t k, std::optional<std::size_t> width);

  FaultKind kind_ = FaultKind::kNone;
  std::size_t k_ = 0;
  std::optional<std::size_t> width_bits_;
};

std::string_view FaultKindName(FaultKind kind);
// Accepts the names produced by FaultKindName.
std::optional<FaultKind> ParseFaultKind(std::string_view name);

enum class FaultTarget { kX1, kY1, kX2, kY2, kC1, kC2, kC3 };

std::string_view FaultTargetName(FaultTarget target);
std::optional<FaultTarget> ParseFaultTarget(std::string_view name);
// c1 = (x1, y1), c2 = (x2, y2), c3 = (x1, x2, y1, y2); singletons map to
// themselves.
std::span<const Operand> OperandsOf(FaultTarget target);

// What one injection did to one operand.
struct FaultRecord {
  Operand operand = Operand::kX1;
  FaultKind kind = FaultKind::kNone;
  std::size_t width = 0;
  // Flipped bit positions in ascending order (flip kinds only).
  std::vector<std::size_t> positions;
  // Fresh value (total-random only).
  std::optional<Nat> replacement;
  Nat original;
  Nat faulted;
};

using InjectionLog = std::vector<FaultRecord>;

// Applies `model` to `value`. The record's operand field is left at its
// default; make-hooks fills it in.
FaultRecord InjectFault(const FaultModel& model, const Nat& value, Rng& rng);
Nat ApplyFault(const FaultModel& model, const Nat& value, Rng& rng);

// Deterministic building blocks, exposed for reproducing worked examples.
Nat FlipPositions(const Nat& value, std::span<const std::size_t> positions);
// XOR with min(k, width - start) ones starting at bit `start`.
Nat FlipBurst(const Nat& value, std::size_t start, std::size_t k,
              std::size_t width);

// Hooks applying `model` to exactly the operands named by `target`. Each
// operand gets its own child stream seeded from `rng` in the order
// x1, y1, x2, y2, so targeted operands are faulted independently. When `log`
// is non-null every injection is appended to it; it must outlive the hooks.
FaultHooks MakeHooks(const FaultModel& model, FaultTarget target, Rng& rng,
                     InjectionLog* log = nullptr);

}  // namespace mxguard

#endif  // MXGUARD_FAULT_INJECTION_HPP_
