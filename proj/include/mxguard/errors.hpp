#ifndef MXGUARD_ERRORS_HPP_
#define MXGUARD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mxguard {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Modulus below 2, or a totient outside [1, modulus).
class InvalidModulusError : public Error {
 public:
  using Error::Error;
};

// gcd(base mod N, N) != 1, so the exponent cannot be reduced modulo the
// totient without changing the result.
class NonUnitBaseError : public Error {
 public:
  using Error::Error;
};

// Out-of-range scalar parameter (l = 0, k > width, empty target list, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace mxguard

#endif  // MXGUARD_ERRORS_HPP_
