#ifndef MXGUARD_CAMPAIGN_HPP_
#define MXGUARD_CAMPAIGN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mxguard/fault_injection.hpp"
#include "mxguard/numeric_core.hpp"
#include "mxguard/rng.hpp"

namespace mxguard {

enum class Scheme { kFull = 1, kPartial = 2 };

struct CampaignConfig {
  std::size_t modulus_bits = 2048;
  std::size_t k_bits = 50;
  std::vector<std::size_t> l_values{128};
  FaultModel fault_model = FaultModel::None();
  std::vector<FaultTarget> targets{FaultTarget::kX1};
  std::size_t iterations = 1000;
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::kPartial;
  // Worker threads; the report does not depend on this.
  std::size_t threads = 1;
  // Number of RSA moduli generated up front; each trial draws one of them.
  // 0 generates a fresh modulus for every trial.
  std::size_t modulus_pool = 16;

  // Throws InvalidParameterError on the first violated constraint.
  void Validate() const;
};

enum class TrialClass { kDetected, kAcceptedBenign, kAcceptedCorrupt };

std::string_view TrialClassName(TrialClass c);

struct TrialOutcome {
  TrialClass classification = TrialClass::kAcceptedBenign;
  InjectionLog fault_audit;
};

struct TrialParams {
  std::size_t modulus_bits = 2048;
  std::size_t k_bits = 50;
  std::size_t l = 128;
  Scheme scheme = Scheme::kPartial;
  FaultModel model = FaultModel::None();
  FaultTarget target = FaultTarget::kX1;
};

// One Monte-Carlo trial. The instance (modulus choice, base, exponent,
// encoding coefficients) comes from `instance_rng`; the injected faults come
// from `fault_rng`. An empty `moduli` span samples a fresh modulus.
//
// The golden reference base^(exponent mod phi) mod N is only computed when
// the scheme accepts, since a detected trial is classified without it.
TrialOutcome RunTrial(const TrialParams& params,
                      std::span<const ModulusContext> moduli,
                      Rng& instance_rng, Rng& fault_rng);

struct CellStats {
  FaultTarget target = FaultTarget::kX1;
  std::size_t l = 0;
  std::size_t injected = 0;
  std::size_t detected = 0;
  std::size_t accepted_benign = 0;
  std::size_t accepted_corrupt = 0;

  double detection_rate() const;
  double escape_rate() const;

  friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct CampaignReport {
  CampaignConfig config;
  // Ordered by target (config order), then l (config order).
  std::vector<CellStats> cells;

  // Throws InvalidParameterError when the cell is absent.
  const CellStats& Cell(FaultTarget target, std::size_t l) const;
};

// Seeds. Pool: Derive(seed, {kPoolStream, modulus_bits}). Trial instance:
// Derive(seed, {kInstanceStream, trial}), shared by every cell so that cells
// are paired on the same instances. Trial faults:
// Derive(seed, {kFaultStream, kind, k, target, l, trial}).
inline constexpr std::uint64_t kPoolStream = 1;
inline constexpr std::uint64_t kInstanceStream = 2;
inline constexpr std::uint64_t kFaultStream = 3;

std::vector<ModulusContext> BuildModulusPool(const CampaignConfig& config);

CampaignReport RunCampaign(const CampaignConfig& config);

// Same as RunCampaign but visits the trials of every cell in the given
// permutation of [0, iterations). Exists to check order independence.
CampaignReport RunCampaignInOrder(const CampaignConfig& config,
                                  std::span<const std::size_t> trial_order);

}  // namespace mxguard

#endif  // MXGUARD_CAMPAIGN_HPP_
