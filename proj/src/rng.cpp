#include "mxguard/rng.hpp"

#include <vector>

#include "mxguard/errors.hpp"

namespace mxguard {

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw InvalidParameterError("Rng::Below bound must be > 0");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

Nat Rng::Bits(std::size_t count) {
  if (count == 0) return Nat();
  const std::size_t words = (count + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  for (auto& w : buf) w = engine_();
  const std::size_t spare = words * 64 - count;
  if (spare != 0) buf.back() &= ~std::uint64_t{0} >> spare;
  mpz_class v;
  mpz_import(v.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0,
             buf.data());
  return Nat(std::move(v));
}

Nat Rng::Below(const Nat& bound) {
  if (bound.IsZero()) throw InvalidParameterError("Rng::Below bound must be > 0");
  const std::size_t bits = bound.BitLength();
  for (;;) {
    Nat candidate = Bits(bits);
    if (candidate < bound) return candidate;
  }
}

std::uint64_t Rng::Mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::Derive(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = Mix(seed);
  for (const std::uint64_t p : path) h = Mix(h ^ Mix(p + 0x9E3779B97F4A7C15ULL));
  return h;
}

}  // namespace mxguard
