#include "mxguard/nat.hpp"

#include <ostream>
#include <utility>

#include "mxguard/errors.hpp"

namespace mxguard {

namespace {

mpz_class Parse(std::string_view text, int base) {
  mpz_class value;
  const std::string owned(text);
  if (owned.empty() || value.set_str(owned, base) != 0 || sgn(value) < 0) {
    throw InvalidParameterError("not a non-negative integer: '" + owned + "'");
  }
  return value;
}

}  // namespace

Nat::Nat(std::uint64_t value) {
  // mpz_class has no portable uint64_t constructor on every platform.
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
}

Nat::Nat(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw InvalidParameterError("negative value for Nat");
}

Nat Nat::FromDecimal(std::string_view text) { return Nat(Parse(text, 10)); }

Nat Nat::FromHex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  return Nat(Parse(text, 16));
}

Nat Nat::PowerOfTwo(std::size_t exponent) {
  Nat n;
  mpz_setbit(n.value_.get_mpz_t(), exponent);
  return n;
}

std::string Nat::ToDecimal() const { return value_.get_str(10); }

std::string Nat::ToHex() const { return value_.get_str(16); }

std::uint64_t Nat::ToU64() const {
  if (BitLength() > 64) {
    throw InvalidParameterError("value exceeds 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

std::size_t Nat::BitLength() const {
  return IsZero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool Nat::TestBit(std::size_t index) const {
  return mpz_tstbit(value_.get_mpz_t(), index) != 0;
}

std::size_t Nat::Popcount() const {
  return IsZero() ? 0 : mpz_popcount(value_.get_mpz_t());
}

Nat Nat::LowBits(std::size_t count) const {
  Nat out;
  mpz_fdiv_r_2exp(out.value_.get_mpz_t(), value_.get_mpz_t(), count);
  return out;
}

Nat& Nat::FlipBit(std::size_t index) {
  mpz_combit(value_.get_mpz_t(), index);
  return *this;
}

Nat& Nat::operator+=(const Nat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Nat& Nat::operator-=(const Nat& rhs) {
  if (cmp(value_, rhs.value_) < 0) {
    throw InvalidParameterError("Nat subtraction would go negative");
  }
  value_ -= rhs.value_;
  return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Nat& Nat::operator%=(const Nat& rhs) {
  if (rhs.IsZero()) throw InvalidParameterError("division by zero");
  mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Nat& Nat::operator/=(const Nat& rhs) {
  if (rhs.IsZero()) throw InvalidParameterError("division by zero");
  mpz_tdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Nat& Nat::operator^=(const Nat& rhs) {
  value_ ^= rhs.value_;
  return *this;
}

Nat& Nat::operator<<=(std::size_t shift) {
  mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), shift);
  return *this;
}

Nat& Nat::operator>>=(std::size_t shift) {
  mpz_fdiv_q_2exp(value_.get_mpz_t(), value_.get_mpz_t(), shift);
  return *this;
}

Nat Gcd(const Nat& a, const Nat& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Nat(std::move(g));
}

Nat InverseMod(const Nat& value, const Nat& modulus) {
  mpz_class inv;
  if (modulus.IsZero() ||
      mpz_invert(inv.get_mpz_t(), value.mpz().get_mpz_t(),
                 modulus.mpz().get_mpz_t()) == 0) {
    throw InvalidParameterError("value has no inverse modulo " +
                                modulus.ToDecimal());
  }
  return Nat(std::move(inv));
}

bool IsProbablePrime(const Nat& n) {
  return mpz_probab_prime_p(n.mpz().get_mpz_t(), 32) != 0;
}

Nat NextPrime(const Nat& n) {
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), n.mpz().get_mpz_t());
  return Nat(std::move(p));
}

std::ostream& operator<<(std::ostream& os, const Nat& n) {
  return os << n.ToDecimal();
}

}  // namespace mxguard
