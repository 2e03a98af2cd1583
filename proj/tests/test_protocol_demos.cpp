#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mxguard/errors.hpp"
#include "mxguard/fault_injection.hpp"
#include "mxguard/instance.hpp"
#include "mxguard/protocol_demos.hpp"

using mxguard::DhParams;
using mxguard::Nat;
using mxguard::Rng;
using mxguard::RsaKeyPair;
using mxguard::TotientSource;

namespace {

const std::filesystem::path kFixtures = MXGUARD_FIXTURE_DIR;

}  // namespace

TEST_CASE("textbook Diffie-Hellman") {
  Rng rng(1);
  const DhParams params(Nat(23), Nat(5));
  const auto r = mxguard::DhExchange(params, Nat(6), Nat(15), 128, rng);
  CHECK(r.public_a == Nat(8));
  CHECK(r.public_b == Nat(19));
  CHECK(r.shared_a == Nat(2));
  CHECK(r.shared_b == Nat(2));
  REQUIRE(r.steps.size() == 4);
  for (const auto& s : r.steps) CHECK(s.verdict.accepted());
}

TEST_CASE("Diffie-Hellman parameter checks") {
  CHECK_THROWS_AS(DhParams(Nat(21), Nat(5)), mxguard::InvalidModulusError);
  CHECK_THROWS_AS(DhParams(Nat(23), Nat(1)), mxguard::InvalidParameterError);
  CHECK_THROWS_AS(DhParams(Nat(23), Nat(23)), mxguard::InvalidParameterError);
  Rng rng(0);
  const DhParams p(Nat(23), Nat(5));
  CHECK_THROWS_AS(mxguard::DhExchange(p, Nat(0), Nat(3), 10, rng),
                  mxguard::InvalidParameterError);
  CHECK_THROWS_AS(mxguard::DhExchange(p, Nat(3), Nat(22), 10, rng),
                  mxguard::InvalidParameterError);
}

TEST_CASE("both parties agree on random safe-prime groups") {
  Rng rng(2024);
  for (int i = 0; i < 50; ++i) {
    // Safe prime P = 2q + 1 with q prime.
    Nat q, p;
    do {
      q = mxguard::RandomPrime(96, rng);
      p = (q << 1) + Nat(1);
    } while (!mxguard::IsProbablePrime(p));
    const DhParams params(p, Nat(2) + rng.Below(p - Nat(3)));
    const Nat a = Nat(1) + rng.Below(p - Nat(2));
    const Nat b = Nat(1) + rng.Below(p - Nat(2));
    const auto r = mxguard::DhExchange(params, a, b, 20, rng);
    REQUIRE(r.shared_a == r.shared_b);
    REQUIRE(r.public_a < p);
  }
}

TEST_CASE("a fault inside the exchange aborts it") {
  Rng rng(3);
  Rng fault_rng(4);
  const DhParams params(Nat(23), Nat(5));
  mxguard::StepHooks hooks(3);
  hooks[2] = mxguard::MakeHooks(mxguard::FaultModel::TotalRandom(64),
                                mxguard::FaultTarget::kC1, fault_rng);
  try {
    (void)mxguard::DhExchange(params, Nat(6), Nat(15), 128, rng, 50, hooks);
    FAIL("expected an abort");
  } catch (const mxguard::ProtocolAbort& abort) {
    CHECK(abort.detail() != mxguard::Mismatch::kNone);
  }
}

TEST_CASE("textbook RSA") {
  const auto keys = RsaKeyPair::FromPrimes(Nat(61), Nat(53), Nat(17));
  CHECK(keys.modulus() == Nat(3233));
  CHECK(keys.private_exponent() == Nat(2753));
  CHECK(keys.TotientMultiple() == Nat(46800));
  CHECK(Nat(46800) % *keys.totient() == Nat(0));
  for (auto source : {TotientSource::kTotient, TotientSource::kKeyMultiple}) {
    Rng rng(5);
    const auto r = mxguard::RsaRoundtrip(keys, Nat(65), 128, rng, source);
    CHECK(r.ciphertext == Nat(2790));
    CHECK(r.recovered == Nat(65));
    CHECK(r.steps.size() == 2);
  }
}

TEST_CASE("RSA key and message checks") {
  CHECK_THROWS_AS(RsaKeyPair(Nat(3233), Nat(17), Nat(2752), Nat(3120)),
                  mxguard::InvalidParameterError);
  CHECK_THROWS_AS(RsaKeyPair(Nat(3233), Nat(1), Nat(1)),
                  mxguard::InvalidParameterError);
  const RsaKeyPair no_phi(Nat(3233), Nat(17), Nat(2753));
  Rng rng(6);
  CHECK_THROWS_AS(
      mxguard::RsaRoundtrip(no_phi, Nat(65), 10, rng, TotientSource::kTotient),
      mxguard::InvalidParameterError);
  CHECK(mxguard::RsaRoundtrip(no_phi, Nat(65), 10, rng,
                              TotientSource::kKeyMultiple)
            .recovered == Nat(65));
  const auto keys = RsaKeyPair::FromPrimes(Nat(61), Nat(53), Nat(17));
  CHECK_THROWS_AS(
      mxguard::RsaRoundtrip(keys, Nat(0), 10, rng, TotientSource::kTotient),
      mxguard::InvalidParameterError);
  CHECK_THROWS_AS(
      mxguard::RsaRoundtrip(keys, Nat(3233), 10, rng, TotientSource::kTotient),
      mxguard::InvalidParameterError);
  CHECK_THROWS_AS(
      mxguard::RsaRoundtrip(keys, Nat(61), 10, rng, TotientSource::kTotient),
      mxguard::NonUnitBaseError);
}

TEST_CASE("RSA round trips on random keys, with either totient") {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    const Nat p = mxguard::RandomPrime(128, rng);
    Nat q = mxguard::RandomPrime(128, rng);
    while (q == p) q = mxguard::RandomPrime(128, rng);
    const Nat phi = (p - Nat(1)) * (q - Nat(1));
    if (mxguard::Gcd(Nat(65537), phi) != Nat(1)) continue;
    const auto keys = RsaKeyPair::FromPrimes(p, q, Nat(65537));
    const Nat m = mxguard::RandomUnit(
        mxguard::ModulusContext(keys.modulus(), phi), rng);
    Rng a(i), b(i);
    const auto via_phi =
        mxguard::RsaRoundtrip(keys, m, 50, a, TotientSource::kTotient);
    const auto via_multiple =
        mxguard::RsaRoundtrip(keys, m, 50, b, TotientSource::kKeyMultiple);
    REQUIRE(via_phi.recovered == m);
    REQUIRE(via_multiple.recovered == m);
    REQUIRE(via_phi.ciphertext == via_multiple.ciphertext);
  }
}

TEST_CASE("fixtures load and run") {
  const auto dh = mxguard::LoadDhFixture(kFixtures / "dh_23.txt");
  CHECK(dh.params.prime() == Nat(23));
  CHECK(dh.secret_b == Nat(15));

  const auto big = mxguard::LoadDhFixture(kFixtures / "dh_2048.txt");
  CHECK(big.params.prime().BitLength() == 2048);
  Rng rng(8);
  const auto r = mxguard::DhExchange(big.params, big.secret_a, big.secret_b,
                                     128, rng);
  CHECK(r.shared_a == r.shared_b);

  const auto rsa = mxguard::LoadRsaFixture(kFixtures / "rsa_2048.txt");
  CHECK(rsa.keys.modulus().BitLength() == 2048);
  const auto rr = mxguard::RsaRoundtrip(rsa.keys, rsa.message, 128, rng,
                                        TotientSource::kTotient);
  CHECK(rr.recovered == rsa.message);
}

TEST_CASE("fixture parsing errors") {
  const auto dir = std::filesystem::temp_directory_path() / "mxguard_fixture_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "broken.txt");
    f << "# comment only\nprime 23\n";
  }
  CHECK_THROWS_AS(mxguard::LoadDhFixture(dir / "broken.txt"),
                  mxguard::InvalidParameterError);
  CHECK_THROWS_AS(mxguard::LoadDhFixture(dir / "missing.txt"),
                  mxguard::InvalidParameterError);
  {
    std::ofstream f(dir / "rsa_bad.txt");
    f << "p 61\nq 53\nmodulus 3234\ne 17\nd 2753\nmessage 65\n";
  }
  CHECK_THROWS_AS(mxguard::LoadRsaFixture(dir / "rsa_bad.txt"),
                  mxguard::InvalidParameterError);
  std::filesystem::remove_all(dir);
}
