#ifndef MXGUARD_NAT_HPP_
#define MXGUARD_NAT_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mxguard {

// Arbitrary-precision non-negative integer backed by GMP.
//
// Every operation that could produce a negative value (subtraction) checks
// and throws instead, so a Nat is always >= 0.
class Nat {
 public:
  Nat() = default;
  explicit Nat(std::uint64_t value);
  explicit Nat(mpz_class value);

  static Nat FromDecimal(std::string_view text);
  static Nat FromHex(std::string_view text);
  // 2^exponent.
  static Nat PowerOfTwo(std::size_t exponent);

  std::string ToDecimal() const;
  std::string ToHex() const;
  // Throws InvalidParameterError if the value does not fit.
  std::uint64_t ToU64() const;

  bool IsZero() const { return sgn(value_) == 0; }
  bool IsOdd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

  // 0 for zero, floor(log2(n)) + 1 otherwise.
  std::size_t BitLength() const;
  bool TestBit(std::size_t index) const;
  std::size_t Popcount() const;
  // value mod 2^count.
  Nat LowBits(std::size_t count) const;
  Nat& FlipBit(std::size_t index);

  Nat& operator+=(const Nat& rhs);
  Nat& operator-=(const Nat& rhs);
  Nat& operator*=(const Nat& rhs);
  Nat& operator%=(const Nat& rhs);
  Nat& operator/=(const Nat& rhs);
  Nat& operator^=(const Nat& rhs);
  Nat& operator<<=(std::size_t shift);
  Nat& operator>>=(std::size_t shift);

  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator-(Nat lhs, const Nat& rhs) { return lhs -= rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }
  friend Nat operator%(Nat lhs, const Nat& rhs) { return lhs %= rhs; }
  friend Nat operator/(Nat lhs, const Nat& rhs) { return lhs /= rhs; }
  friend Nat operator^(Nat lhs, const Nat& rhs) { return lhs ^= rhs; }
  friend Nat operator<<(Nat lhs, std::size_t s) { return lhs <<= s; }
  friend Nat operator>>(Nat lhs, std::size_t s) { return lhs >>= s; }

  friend bool operator==(const Nat& a, const Nat& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpz_class& mpz() const { return value_; }
  mpz_class& mpz() { return value_; }

 private:
  mpz_class value_;
};

Nat Gcd(const Nat& a, const Nat& b);

// Modular inverse; throws InvalidParameterError if none exists.
Nat InverseMod(const Nat& value, const Nat& modulus);

// Miller-Rabin with 32 rounds after trial division.
bool IsProbablePrime(const Nat& n);

// Smallest probable prime strictly greater than n.
Nat NextPrime(const Nat& n);

std::ostream& operator<<(std::ostream& os, const Nat& n);

}  // namespace mxguard

#endif  // MXGUARD_NAT_HPP_
