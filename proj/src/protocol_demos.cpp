#include "mxguard/protocol_demos.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace mxguard {

namespace {

const FaultHooks& HooksFor(const StepHooks& hooks, std::size_t step) {
  static const FaultHooks kInert;
  return step < hooks.size() ? hooks[step] : kInert;
}

Nat Protected(const std::string& name, const Nat& base, const Nat& exponent,
              const ModulusContext& ctx, std::size_t l, Rng& rng,
              std::size_t k_bits, const FaultHooks& hooks,
              std::vector<DemoStep>& steps) {
  ProtectedResult r = Scheme2Partial(base, exponent, ctx, l, rng, k_bits, hooks);
  steps.push_back({name, r.verdict});
  if (!r.verdict.accepted()) throw ProtocolAbort(name, r.verdict.detail());
  return r.verdict.result();
}

const Nat& Require(const std::map<std::string, Nat>& values,
                   const std::string& key, const std::filesystem::path& path) {
  const auto it = values.find(key);
  if (it == values.end()) {
    throw InvalidParameterError("fixture " + path.string() + " lacks '" + key +
                                "'");
  }
  return it->second;
}

}  // namespace

ProtocolAbort::ProtocolAbort(std::string step, Mismatch detail)
    : Error("fault detected in " + step + " (" +
            std::string(MismatchName(detail)) + ")"),
      step_(std::move(step)),
      detail_(detail) {}

DhParams::DhParams(Nat prime, Nat generator)
    : prime_(std::move(prime)), generator_(std::move(generator)) {
  if (prime_ < Nat(3) || !IsProbablePrime(prime_)) {
    throw InvalidModulusError("DH modulus must be an odd prime");
  }
  if (generator_ < Nat(2) || !(generator_ < prime_)) {
    throw InvalidParameterError("DH generator must lie in [2, P)");
  }
}

ModulusContext DhParams::Context() const {
  return ModulusContext(prime_, prime_ - Nat(1));
}

DhResult DhExchange(const DhParams& params, const Nat& secret_a,
                    const Nat& secret_b, std::size_t l, Rng& rng,
                    std::size_t k_bits, const StepHooks& hooks) {
  const ModulusContext ctx = params.Context();
  const Nat order = params.prime() - Nat(1);
  for (const Nat* s : {&secret_a, &secret_b}) {
    if (s->IsZero() || !(*s < order)) {
      throw InvalidParameterError("DH secrets must lie in [1, P - 1)");
    }
  }
  DhResult r;
  r.public_a = Protected("g^a", params.generator(), secret_a, ctx, l, rng,
                         k_bits, HooksFor(hooks, 0), r.steps);
  r.public_b = Protected("g^b", params.generator(), secret_b, ctx, l, rng,
                         k_bits, HooksFor(hooks, 1), r.steps);
  r.shared_a = Protected("(g^b)^a", r.public_b, secret_a, ctx, l, rng, k_bits,
                         HooksFor(hooks, 2), r.steps);
  r.shared_b = Protected("(g^a)^b", r.public_a, secret_b, ctx, l, rng, k_bits,
                         HooksFor(hooks, 3), r.steps);
  return r;
}

RsaKeyPair RsaKeyPair::FromPrimes(const Nat& p, const Nat& q, const Nat& e) {
  const Nat phi = (p - Nat(1)) * (q - Nat(1));
  return RsaKeyPair(p * q, e, InverseMod(e, phi), phi);
}

RsaKeyPair::RsaKeyPair(Nat modulus, Nat public_exponent, Nat private_exponent,
                       std::optional<Nat> totient)
    : modulus_(std::move(modulus)),
      e_(std::move(public_exponent)),
      d_(std::move(private_exponent)),
      totient_(std::move(totient)) {
  if (modulus_ < Nat(2)) throw InvalidModulusError("RSA modulus must be >= 2");
  if ((e_ * d_) < Nat(2)) {
    throw InvalidParameterError("e*d - 1 must be positive");
  }
  if (totient_ && (e_ * d_) % *totient_ != Nat(1)) {
    throw InvalidParameterError("e*d is not 1 modulo the totient");
  }
}

Nat RsaKeyPair::TotientMultiple() const { return e_ * d_ - Nat(1); }

RsaResult RsaRoundtrip(const RsaKeyPair& keys, const Nat& message,
                       std::size_t l, Rng& rng, TotientSource source,
                       std::size_t k_bits, const StepHooks& hooks) {
  if (message.IsZero() || !(message < keys.modulus())) {
    throw InvalidParameterError("RSA message must lie in [1, N)");
  }
  if (Gcd(message, keys.modulus()) != Nat(1)) {
    throw NonUnitBaseError("RSA message shares a factor with N");
  }
  std::optional<ModulusContext> ctx;
  if (source == TotientSource::kTotient) {
    if (!keys.totient()) {
      throw InvalidParameterError("key pair does not carry phi(N)");
    }
    ctx.emplace(keys.modulus(), *keys.totient());
  } else {
    ctx = ModulusContext::WithTotientMultiple(keys.modulus(),
                                              keys.TotientMultiple());
  }
  RsaResult r;
  r.ciphertext = Protected("encrypt", message, keys.public_exponent(), *ctx, l,
                           rng, k_bits, HooksFor(hooks, 0), r.steps);
  r.recovered = Protected("decrypt", r.ciphertext, keys.private_exponent(),
                          *ctx, l, rng, k_bits, HooksFor(hooks, 1), r.steps);
  return r;
}

std::map<std::string, Nat> ReadFixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameterError("cannot open fixture " + path.string());
  std::map<std::string, Nat> values;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string key, value;
    if (!(fields >> key)) continue;
    if (!(fields >> value)) {
      throw InvalidParameterError("fixture " + path.string() +
                                  ": no value for '" + key + "'");
    }
    values.insert_or_assign(key, Nat::FromDecimal(value));
  }
  return values;
}

DhFixture LoadDhFixture(const std::filesystem::path& path) {
  const auto v = ReadFixture(path);
  return {DhParams(Require(v, "prime", path), Require(v, "generator", path)),
          Require(v, "secret_a", path), Require(v, "secret_b", path)};
}

RsaFixture LoadRsaFixture(const std::filesystem::path& path) {
  const auto v = ReadFixture(path);
  std::optional<Nat> phi;
  if (v.contains("p") && v.contains("q")) {
    if (v.at("p") * v.at("q") != Require(v, "modulus", path)) {
      throw InvalidParameterError("fixture " + path.string() +
                                  ": p * q differs from modulus");
    }
    phi = (v.at("p") - Nat(1)) * (v.at("q") - Nat(1));
  }
  RsaKeyPair keys(Require(v, "modulus", path), Require(v, "e", path),
                  Require(v, "d", path), phi);
  return {std::move(keys), Require(v, "message", path)};
}

}  // namespace mxguard
