#ifndef MXGUARD_PROTOCOL_DEMOS_HPP_
#define MXGUARD_PROTOCOL_DEMOS_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mxguard/errors.hpp"
#include "mxguard/nat.hpp"
#include "mxguard/numeric_core.hpp"
#include "mxguard/protection.hpp"
#include "mxguard/rng.hpp"

namespace mxguard {

// A protected exponentiation inside a protocol returned FAULT_DETECTED.
class ProtocolAbort : public Error {
 public:
  ProtocolAbort(std::string step, Mismatch detail);
  const std::string& step() const { return step_; }
  Mismatch detail() const { return detail_; }

 private:
  std::string step_;
  Mismatch detail_;
};

// Prime-order-field Diffie-Hellman parameters; the totient is P - 1.
class DhParams {
 public:
  // Checks P probable prime and 2 <= g < P.
  DhParams(Nat prime, Nat generator);

  const Nat& prime() const { return prime_; }
  const Nat& generator() const { return generator_; }
  ModulusContext Context() const;

 private:
  Nat prime_;
  Nat generator_;
};

struct DemoStep {
  std::string name;
  Verdict verdict;
};

struct DhResult {
  Nat public_a;  // g^a
  Nat public_b;  // g^b
  Nat shared_a;  // (g^b)^a
  Nat shared_b;  // (g^a)^b
  std::vector<DemoStep> steps;
};

// Per-step fault hooks, indexed by step order; missing entries are inert.
using StepHooks = std::vector<FaultHooks>;

// Four protected exponentiations in the order g^a, g^b, (g^b)^a, (g^a)^b.
// Requires 1 <= a, b < P - 1. Throws ProtocolAbort on the first detected
// fault.
DhResult DhExchange(const DhParams& params, const Nat& secret_a,
                    const Nat& secret_b, std::size_t l, Rng& rng,
                    std::size_t k_bits = kDefaultCoefficientBits,
                    const StepHooks& hooks = {});

class RsaKeyPair {
 public:
  // d = e^-1 mod (p-1)(q-1); the totient is retained.
  static RsaKeyPair FromPrimes(const Nat& p, const Nat& q, const Nat& e);
  // Validates e*d - 1 > 0 and, when the totient is given, e*d = 1 mod it.
  RsaKeyPair(Nat modulus, Nat public_exponent, Nat private_exponent,
             std::optional<Nat> totient = std::nullopt);

  const Nat& modulus() const { return modulus_; }
  const Nat& public_exponent() const { return e_; }
  const Nat& private_exponent() const { return d_; }
  const std::optional<Nat>& totient() const { return totient_; }
  // e*d - 1, a positive multiple of phi(N).
  Nat TotientMultiple() const;

 private:
  Nat modulus_;
  Nat e_;
  Nat d_;
  std::optional<Nat> totient_;
};

enum class TotientSource {
  kTotient,       // use phi(N); requires the key pair to carry it
  kKeyMultiple,   // use e*d - 1
};

struct RsaResult {
  Nat ciphertext;
  Nat recovered;
  std::vector<DemoStep> steps;
};

// Encrypts then decrypts `message` through the partial scheme. Requires
// 1 <= message < N and gcd(message, N) = 1.
RsaResult RsaRoundtrip(const RsaKeyPair& keys, const Nat& message,
                       std::size_t l, Rng& rng, TotientSource source,
                       std::size_t k_bits = kDefaultCoefficientBits,
                       const StepHooks& hooks = {});

// Fixture files: one "name value" pair per line, values in decimal, '#'
// starts a comment.
std::map<std::string, Nat> ReadFixture(const std::filesystem::path& path);

struct DhFixture {
  DhParams params;
  Nat secret_a;
  Nat secret_b;
};
DhFixture LoadDhFixture(const std::filesystem::path& path);

struct RsaFixture {
  RsaKeyPair keys;
  Nat message;
};
RsaFixture LoadRsaFixture(const std::filesystem::path& path);

}  // namespace mxguard

#endif  // MXGUARD_PROTOCOL_DEMOS_HPP_
