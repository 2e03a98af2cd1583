#include "mxguard/fault_injection.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "mxguard/errors.hpp"

namespace mxguard {

namespace {

constexpr std::array<Operand, 1> kOnlyX1{Operand::kX1};
constexpr std::array<Operand, 1> kOnlyY1{Operand::kY1};
constexpr std::array<Operand, 1> kOnlyX2{Operand::kX2};
constexpr std::array<Operand, 1> kOnlyY2{Operand::kY2};
constexpr std::array<Operand, 2> kRound1{Operand::kX1, Operand::kY1};
constexpr std::array<Operand, 2> kRound2{Operand::kX2, Operand::kY2};
constexpr std::array<Operand, 4> kAll{Operand::kX1, Operand::kX2,
                                      Operand::kY1, Operand::kY2};

constexpr std::array<Operand, 4> kSeedOrder{Operand::kX1, Operand::kY1,
                                            Operand::kX2, Operand::kY2};

// Floyd's sampling: exactly `count` distinct values in [0, width), one rng
// draw per value. Sorted ascending on return.
std::vector<std::size_t> DistinctPositions(std::size_t count,
                                           std::size_t width, Rng& rng) {
  std::vector<std::size_t> chosen;
  chosen.reserve(count);
  for (std::size_t j = width - count; j < width; ++j) {
    const std::size_t t = rng.Below(static_cast<std::uint64_t>(j) + 1);
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

FaultModel::FaultModel(FaultKind kind, std::size_t k,
                       std::optional<std::size_t> width)
    : kind_(kind), k_(k), width_bits_(width) {
  if (width_bits_ && *width_bits_ == 0) {
    throw InvalidParameterError("fault width must be >= 1");
  }
  if ((kind == FaultKind::kKRandomFlip || kind == FaultKind::kKBurstFlip) &&
      k == 0) {
    throw InvalidParameterError("number of faulty bits k must be >= 1");
  }
  if (width_bits_ && k_ > *width_bits_) {
    throw InvalidParameterError("k exceeds the fault width");
  }
}

FaultModel FaultModel::None() { return FaultModel(FaultKind::kNone, 0, {}); }

FaultModel FaultModel::TotalRandom(std::optional<std::size_t> width_bits) {
  return FaultModel(FaultKind::kTotalRandom, 0, width_bits);
}

FaultModel FaultModel::SingleBitFlip(std::optional<std::size_t> width_bits) {
  return FaultModel(FaultKind::kSingleBitFlip, 1, width_bits);
}

FaultModel FaultModel::KRandomFlip(std::size_t k,
                                   std::optional<std::size_t> width_bits) {
  return FaultModel(FaultKind::kKRandomFlip, k, width_bits);
}

FaultModel FaultModel::KBurstFlip(std::size_t k,
                                  std::optional<std::size_t> width_bits) {
  return FaultModel(FaultKind::kKBurstFlip, k, width_bits);
}

std::size_t FaultModel::WidthFor(const Nat& value) const {
  const std::size_t width =
      width_bits_ ? *width_bits_ : std::max<std::size_t>(1, value.BitLength());
  if (k_ > width) {
    throw InvalidParameterError("k = " + std::to_string(k_) +
                                " exceeds operand width " +
                                std::to_string(width));
  }
  return width;
}

std::string_view FaultKindName(FaultKind kind) {
  switch (kind) {
    case FaultKind::kNone: return "none";
    case FaultKind::kTotalRandom: return "total-random";
    case FaultKind::kSingleBitFlip: return "single-bit";
    case FaultKind::kKRandomFlip: return "k-random";
    case FaultKind::kKBurstFlip: return "k-burst";
  }
  return "?";
}

std::optional<FaultKind> ParseFaultKind(std::string_view name) {
  for (FaultKind k : {FaultKind::kNone, FaultKind::kTotalRandom,
                      FaultKind::kSingleBitFlip, FaultKind::kKRandomFlip,
                      FaultKind::kKBurstFlip}) {
    if (FaultKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view FaultTargetName(FaultTarget target) {
  switch (target) {
    case FaultTarget::kX1: return "x1";
    case FaultTarget::kY1: return "y1";
    case FaultTarget::kX2: return "x2";
    case FaultTarget::kY2: return "y2";
    case FaultTarget::kC1: return "c1";
    case FaultTarget::kC2: return "c2";
    case FaultTarget::kC3: return "c3";
  }
  return "?";
}

std::optional<FaultTarget> ParseFaultTarget(std::string_view name) {
  for (FaultTarget t : {FaultTarget::kX1, FaultTarget::kY1, FaultTarget::kX2,
                        FaultTarget::kY2, FaultTarget::kC1, FaultTarget::kC2,
                        FaultTarget::kC3}) {
    if (FaultTargetName(t) == name) return t;
  }
  return std::nullopt;
}

std::span<const Operand> OperandsOf(FaultTarget target) {
  switch (target) {
    case FaultTarget::kX1: return kOnlyX1;
    case FaultTarget::kY1: return kOnlyY1;
    case FaultTarget::kX2: return kOnlyX2;
    case FaultTarget::kY2: return kOnlyY2;
    case FaultTarget::kC1: return kRound1;
    case FaultTarget::kC2: return kRound2;
    case FaultTarget::kC3: return kAll;
  }
  return {};
}

Nat FlipPositions(const Nat& value, std::span<const std::size_t> positions) {
  Nat out = value;
  for (const std::size_t p : positions) out.FlipBit(p);
  return out;
}

Nat FlipBurst(const Nat& value, std::size_t start, std::size_t k,
              std::size_t width) {
  if (start >= width) {
    throw InvalidParameterError("burst start outside the fault width");
  }
  const std::size_t run = std::min(k, width - start);
  Nat mask = Nat::PowerOfTwo(run) - Nat(1);
  mask <<= start;
  return value ^ mask;
}

FaultRecord InjectFault(const FaultModel& model, const Nat& value, Rng& rng) {
  FaultRecord rec;
  rec.kind = model.kind();
  rec.original = value;
  if (model.kind() == FaultKind::kNone) {
    rec.faulted = value;
    return rec;
  }
  rec.width = model.WidthFor(value);
  switch (model.kind()) {
    case FaultKind::kTotalRandom:
      rec.replacement = rng.Bits(rec.width);
      rec.faulted = *rec.replacement;
      break;
    case FaultKind::kSingleBitFlip:
      rec.positions = {static_cast<std::size_t>(rng.Below(rec.width))};
      rec.faulted = FlipPositions(value, rec.positions);
      break;
    case FaultKind::kKRandomFlip:
      rec.positions = DistinctPositions(model.k(), rec.width, rng);
      rec.faulted = FlipPositions(value, rec.positions);
      break;
    case FaultKind::kKBurstFlip: {
      const std::size_t start = rng.Below(rec.width);
      const std::size_t run = std::min(model.k(), rec.width - start);
      for (std::size_t i = 0; i < run; ++i) rec.positions.push_back(start + i);
      rec.faulted = FlipBurst(value, start, model.k(), rec.width);
      break;
    }
    case FaultKind::kNone:
      break;
  }
  return rec;
}

Nat ApplyFault(const FaultModel& model, const Nat& value, Rng& rng) {
  return InjectFault(model, value, rng).faulted;
}

FaultHooks MakeHooks(const FaultModel& model, FaultTarget target, Rng& rng,
                     InjectionLog* log) {
  std::array<std::uint64_t, 4> seeds{};
  for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = rng.NextU64();

  FaultHooks hooks;
  if (model.kind() == FaultKind::kNone) return hooks;
  for (const Operand op : OperandsOf(target)) {
    const auto slot = static_cast<std::size_t>(
        std::find(kSeedOrder.begin(), kSeedOrder.end(), op) -
        kSeedOrder.begin());
    hooks.Set(op, [model, op, log, child = Rng(seeds[slot])](
                      const Nat& value) mutable {
      FaultRecord rec = InjectFault(model, value, child);
      rec.operand = op;
      Nat faulted = rec.faulted;
      if (log != nullptr) log->push_back(std::move(rec));
      return faulted;
    });
  }
  return hooks;
}

}  // namespace mxguard
