#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <vector>

#include "mxguard/errors.hpp"
#include "mxguard/instance.hpp"
#include "mxguard/numeric_core.hpp"
#include "oracle.hpp"

using mxguard::ExpOutput;
using mxguard::ModulusContext;
using mxguard::Nat;
using mxguard::PartialOutput;

namespace {

ModulusContext Ctx(std::uint64_t n, std::uint64_t phi) {
  return ModulusContext(Nat(n), Nat(phi));
}

}  // namespace

TEST_CASE("plain exponentiation worked examples") {
  // Oracle first, then the frozen value.
  CHECK(oracle::NaivePow(3, 5, 7) == 5);
  CHECK(mxguard::ModExpPlain(Nat(3), Nat(5), Nat(7)) == Nat(5));
  CHECK(mxguard::ModExpPlain(Nat(12), Nat(0), Nat(35)) == Nat(1));
  CHECK(mxguard::ModExpPlain(Nat(4), Nat(1), Nat(3)) == Nat(1));
}

TEST_CASE("plain exponentiation matches repeated multiplication on the grid") {
  for (std::uint64_t n : {2, 3, 5, 7, 9, 15, 21, 35, 77}) {
    for (std::uint64_t x = 0; x < 64; ++x) {
      for (std::uint64_t y = 0; y < 64; ++y) {
        REQUIRE(mxguard::ModExpPlain(Nat(x), Nat(y), Nat(n)) ==
                Nat(oracle::NaivePow(x, y, n)));
      }
    }
  }
}

TEST_CASE("plain exponentiation rejects moduli below 2") {
  CHECK_THROWS_AS(mxguard::ModExpPlain(Nat(3), Nat(5), Nat(1)),
                  mxguard::InvalidModulusError);
  CHECK_THROWS_AS(mxguard::ModExpPlain(Nat(3), Nat(5), Nat(0)),
                  mxguard::InvalidModulusError);
}

TEST_CASE("modulus context invariants") {
  CHECK_NOTHROW(Ctx(7, 6));
  CHECK_THROWS_AS(Ctx(1, 1), mxguard::InvalidModulusError);
  CHECK_THROWS_AS(Ctx(7, 0), mxguard::InvalidModulusError);
  CHECK_THROWS_AS(Ctx(7, 7), mxguard::InvalidModulusError);
  const auto multiple =
      ModulusContext::WithTotientMultiple(Nat(3233), Nat(46800));
  CHECK(multiple.totient() == Nat(46800));
  CHECK_THROWS_AS(ModulusContext::WithTotientMultiple(Nat(3233), Nat()),
                  mxguard::InvalidModulusError);
}

TEST_CASE("instrumented exponentiation hand traces") {
  // 5 mod 6 = 101b: low two bits 01b, so the snapshot is 3^1.
  auto t = oracle::Instrumented(3, 5, 7, 6, 2);
  CHECK(t.result == 5);
  CHECK(t.partial == 3);
  CHECK(t.hamming_weight == 2);
  CHECK(mxguard::ModExpInstrumented(Nat(3), Nat(5), Ctx(7, 6), 2) ==
        ExpOutput{Nat(5), Nat(3), 2});
  // 17 = 5 + 2*6 canonicalises to the same trace.
  CHECK(mxguard::ModExpInstrumented(Nat(3), Nat(17), Ctx(7, 6), 2) ==
        ExpOutput{Nat(5), Nat(3), 2});
  CHECK(mxguard::ModExpInstrumented(Nat(2), Nat(0), Ctx(9, 6), 4) ==
        ExpOutput{Nat(1), Nat(1), 0});
}

TEST_CASE("partial exponentiation examples") {
  CHECK(mxguard::ModExpPartial(Nat(3), Nat(29), Ctx(7, 6), 2) ==
        PartialOutput{Nat(3), 2});
  CHECK(mxguard::ModExpPartial(Nat(5), Nat(6), Ctx(7, 6), 3) ==
        PartialOutput{Nat(1), 0});
  auto t = oracle::Instrumented(10, 7, 21, 12, 1);
  CHECK(t.partial == 10);
  CHECK(t.hamming_weight == 3);
  CHECK(mxguard::ModExpPartial(Nat(10), Nat(7), Ctx(21, 12), 1) ==
        PartialOutput{Nat(10), 3});
}

TEST_CASE("popcount examples") {
  CHECK(mxguard::Popcount(Nat(13)) == 3);
  CHECK(mxguard::Popcount(Nat(0)) == 0);
  CHECK(mxguard::Popcount(Nat::PowerOfTwo(50)) == 1);
}

TEST_CASE("precondition errors") {
  // gcd(7, 21) = 7.
  CHECK_THROWS_AS(mxguard::ModExpInstrumented(Nat(7), Nat(5), Ctx(21, 12), 2),
                  mxguard::NonUnitBaseError);
  CHECK_THROWS_AS(mxguard::ModExpPartial(Nat(28), Nat(5), Ctx(21, 12), 2),
                  mxguard::NonUnitBaseError);
  CHECK_THROWS_AS(mxguard::ModExpInstrumented(Nat(2), Nat(5), Ctx(21, 12), 0),
                  mxguard::InvalidParameterError);
  CHECK_THROWS_AS(mxguard::ModExpPartial(Nat(2), Nat(5), Ctx(21, 12), 0),
                  mxguard::InvalidParameterError);
}

TEST_CASE("instrumented and partial match the brute-force oracle") {
  for (std::uint64_t n : {7, 9, 15, 21, 35, 77}) {
    const std::uint64_t phi = oracle::Totient(n);
    const auto ctx = Ctx(n, phi);
    for (std::uint64_t x = 1; x < n; ++x) {
      if (std::gcd(x, n) != 1) continue;
      for (std::uint64_t y = 0; y < 150; y += 7) {
        for (unsigned l = 1; l <= 8; ++l) {
          const auto t = oracle::Instrumented(x, y, n, phi, l);
          const ExpOutput out = mxguard::ModExpInstrumented(Nat(x), Nat(y), ctx, l);
          REQUIRE(out.result == Nat(t.result));
          REQUIRE(out.result_partial == Nat(t.partial));
          REQUIRE(out.hamming_weight == t.hamming_weight);
          const PartialOutput p = mxguard::ModExpPartial(Nat(x), Nat(y), ctx, l);
          REQUIRE(p.partial == Nat(t.partial));
          REQUIRE(p.hamming_weight == t.hamming_weight);
        }
      }
    }
  }
}

TEST_CASE("reduction invariance, partial consistency and monotone capture") {
  mxguard::Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ctx = mxguard::RandomRsaContext(128, rng);
    const Nat x = mxguard::RandomUnit(ctx, rng);
    const Nat y = rng.Bits(200);
    const std::size_t l = 1 + rng.Below(140);
    const ExpOutput out = mxguard::ModExpInstrumented(x, y, ctx, l);
    CHECK(out.result == mxguard::ModExpPlain(x, y, ctx.modulus()));
    CHECK(out.result < ctx.modulus());
    CHECK(out.result_partial < ctx.modulus());
    const Nat reduced = y % ctx.totient();
    CHECK(out.hamming_weight <= reduced.BitLength());
    CHECK(out.result_partial ==
          mxguard::ModExpPlain(x, reduced.LowBits(l), ctx.modulus()));
    const PartialOutput p = mxguard::ModExpPartial(x, y, ctx, l);
    CHECK(p.partial == out.result_partial);
    CHECK(p.hamming_weight == out.hamming_weight);
    const ExpOutput wide =
        mxguard::ModExpInstrumented(x, y, ctx, reduced.BitLength() + 1);
    CHECK(wide.result_partial == wide.result);
  }
}

TEST_CASE("partial recomputation costs a fraction of the full exponentiation") {
  mxguard::Rng rng(99);
  const auto ctx = mxguard::RandomRsaContext(2048, rng);
  const Nat x = mxguard::RandomUnit(ctx, rng);
  const Nat y = rng.Bits(2048);
  auto time_ns = [](auto&& f) {
    const auto a = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::nano>(
               std::chrono::steady_clock::now() - a)
        .count();
  };
  std::vector<double> full, partial;
  for (int i = 0; i < 15; ++i) {
    full.push_back(time_ns([&] { (void)mxguard::ModExpInstrumented(x, y, ctx, 128); }));
    partial.push_back(time_ns([&] { (void)mxguard::ModExpPartial(x, y, ctx, 128); }));
  }
  std::sort(full.begin(), full.end());
  std::sort(partial.begin(), partial.end());
  const double ratio = partial[7] / full[7];
  MESSAGE("partial/full median time ratio at l=128: " << ratio);
  CHECK(ratio < 0.15);
}
