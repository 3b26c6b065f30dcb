#ifndef ICVP_ERRORS_HPP
#define ICVP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace icvp {

// Base of everything the engine throws. CLI maps these to exit code 1,
// except ParseError/InvalidArgs which are usage errors (exit code 2).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgs : public Error {
 public:
  using Error::Error;
};

class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class NonIntegralCoefficient : public Error {
 public:
  using Error::Error;
};

class VerificationMismatch : public Error {
 public:
  using Error::Error;
};

class NonIntegralPLog : public Error {
 public:
  using Error::Error;
};

// A diagram component that matches no Dynkin type, a corrupted cache file,
// or any other state that valid inputs cannot reach.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace icvp

#endif  // ICVP_ERRORS_HPP
