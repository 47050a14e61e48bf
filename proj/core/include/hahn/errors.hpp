#ifndef HAHN_ERRORS_HPP
#define HAHN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hahn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Arithmetic in a coefficient field failed (division by zero, bad modulus).
class FieldError : public Error {
 public:
  using Error::Error;
};

// The series is only known modulo B_trunc(0), so its value is not determined.
class IndeterminateValuation : public Error {
 public:
  using Error::Error;
};

class EmptySupport : public Error {
 public:
  using Error::Error;
};

class InvalidNest : public Error {
 public:
  using Error::Error;
};

class AlphaNotInDomain : public Error {
 public:
  using Error::Error;
};

}  // namespace hahn

#endif  // HAHN_ERRORS_HPP
