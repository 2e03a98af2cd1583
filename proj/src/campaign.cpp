#include "mxguard/campaign.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "mxguard/encoding.hpp"
#include "mxguard/errors.hpp"
#include "mxguard/instance.hpp"
#include "mxguard/protection.hpp"

namespace mxguard {

namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::uint64_t FaultSeed(const CampaignConfig& config, FaultTarget target,
                        std::size_t l, std::size_t trial) {
  return Rng::Derive(config.seed,
                     {kFaultStream,
                      static_cast<std::uint64_t>(config.fault_model.kind()),
                      config.fault_model.k(),
                      static_cast<std::uint64_t>(target), l, trial});
}

std::string CellLabel(FaultTarget target, std::size_t l) {
  return "cell (target " + std::string(FaultTargetName(target)) + ", l " +
         std::to_string(l) + ")";
}

}  // namespace

void CampaignConfig::Validate() const {
  if (modulus_bits < 8) {
    throw InvalidParameterError("modulus_bits must be >= 8");
  }
  if (k_bits == 0) throw InvalidParameterError("k_bits must be >= 1");
  if (iterations == 0) throw InvalidParameterError("iterations must be >= 1");
  if (threads == 0) throw InvalidParameterError("threads must be >= 1");
  if (l_values.empty()) throw InvalidParameterError("l_values is empty");
  if (targets.empty()) throw InvalidParameterError("targets is empty");
  for (const std::size_t l : l_values) {
    if (l == 0 || l > modulus_bits) {
      throw InvalidParameterError("every l must lie in [1, modulus_bits]; got " +
                                  std::to_string(l));
    }
  }
}

std::string_view TrialClassName(TrialClass c) {
  switch (c) {
    case TrialClass::kDetected: return "detected";
    case TrialClass::kAcceptedBenign: return "accepted-benign";
    case TrialClass::kAcceptedCorrupt: return "accepted-corrupt";
  }
  return "?";
}

TrialOutcome RunTrial(const TrialParams& params,
                      std::span<const ModulusContext> moduli,
                      Rng& instance_rng, Rng& fault_rng) {
  const ModulusContext ctx =
      moduli.empty()
          ? RandomRsaContext(params.modulus_bits, instance_rng)
          : moduli[instance_rng.Below(static_cast<std::uint64_t>(moduli.size()))];
  const Nat base = RandomUnit(ctx, instance_rng);
  const Nat exponent = instance_rng.Bits(params.modulus_bits);

  TrialOutcome outcome;
  const FaultHooks hooks = MakeHooks(params.model, params.target, fault_rng,
                                     &outcome.fault_audit);
  RandomCoefficients coefficients(instance_rng, params.k_bits);
  const ProtectedResult run =
      params.scheme == Scheme::kFull
          ? Scheme1Full(base, exponent, ctx, coefficients, hooks)
          : Scheme2Partial(base, exponent, ctx, params.l, coefficients, hooks);

  if (!run.verdict.accepted()) {
    outcome.classification = TrialClass::kDetected;
    return outcome;
  }
  const Nat golden =
      ModExpPlain(base, exponent % ctx.totient(), ctx.modulus());
  outcome.classification = run.verdict.result() == golden
                               ? TrialClass::kAcceptedBenign
                               : TrialClass::kAcceptedCorrupt;
  return outcome;
}

double CellStats::detection_rate() const { return Ratio(detected, injected); }

double CellStats::escape_rate() const {
  return Ratio(accepted_corrupt, injected);
}

const CellStats& CampaignReport::Cell(FaultTarget target, std::size_t l) const {
  for (const auto& c : cells) {
    if (c.target == target && c.l == l) return c;
  }
  throw InvalidParameterError("no " + CellLabel(target, l) + " in report");
}

std::vector<ModulusContext> BuildModulusPool(const CampaignConfig& config) {
  std::vector<ModulusContext> pool;
  if (config.modulus_pool == 0) return pool;
  Rng rng(Rng::Derive(config.seed, {kPoolStream, config.modulus_bits}));
  pool.reserve(config.modulus_pool);
  for (std::size_t i = 0; i < config.modulus_pool; ++i) {
    pool.push_back(RandomRsaContext(config.modulus_bits, rng));
  }
  return pool;
}

CampaignReport RunCampaign(const CampaignConfig& config) {
  std::vector<std::size_t> order(config.iterations);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return RunCampaignInOrder(config, order);
}

CampaignReport RunCampaignInOrder(const CampaignConfig& config,
                                  std::span<const std::size_t> trial_order) {
  config.Validate();
  if (trial_order.size() != config.iterations) {
    throw InvalidParameterError("trial order must cover every iteration");
  }
  const std::vector<ModulusContext> pool = BuildModulusPool(config);

  struct CellKey {
    FaultTarget target;
    std::size_t l;
  };
  std::vector<CellKey> keys;
  for (const FaultTarget t : config.targets) {
    for (const std::size_t l : config.l_values) keys.push_back({t, l});
  }

  const std::size_t per_cell = config.iterations;
  const std::size_t total = keys.size() * per_cell;
  std::vector<TrialClass> outcomes(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t item = next.fetch_add(1);
      if (item >= total) return;
      const CellKey& key = keys[item / per_cell];
      const std::size_t trial = trial_order[item % per_cell];
      try {
        TrialParams params{config.modulus_bits, config.k_bits, key.l,
                           config.scheme, config.fault_model, key.target};
        Rng instance_rng(Rng::Derive(config.seed, {kInstanceStream, trial}));
        Rng fault_rng(FaultSeed(config, key.target, key.l, trial));
        outcomes[(item / per_cell) * per_cell + trial] =
            RunTrial(params, pool, instance_rng, fault_rng).classification;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) {
          failure = std::make_exception_ptr(
              Error(CellLabel(key.target, key.l) + ", trial " +
                    std::to_string(trial) + ": " + e.what()));
        }
        next.store(total);
        return;
      }
    }
  };

  const std::size_t n_threads = std::min(config.threads, total);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) threads.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  CampaignReport report;
  report.config = config;
  for (std::size_t c = 0; c < keys.size(); ++c) {
    CellStats stats;
    stats.target = keys[c].target;
    stats.l = keys[c].l;
    for (std::size_t i = 0; i < per_cell; ++i) {
      ++stats.injected;
      switch (outcomes[c * per_cell + i]) {
        case TrialClass::kDetected: ++stats.detected; break;
        case TrialClass::kAcceptedBenign: ++stats.accepted_benign; break;
        case TrialClass::kAcceptedCorrupt: ++stats.accepted_corrupt; break;
      }
    }
    report.cells.push_back(stats);
  }
  return report;
}

}  // namespace mxguard
