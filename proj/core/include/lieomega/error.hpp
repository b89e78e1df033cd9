#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieomega {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An associative polynomial whose leading word is not Lyndon–Shirshov, so it
/// is not in the Lie subalgebra.
class NotLieElement : public Error {
 public:
  using Error::Error;
};

/// A word that was required to be an associative Lyndon–Shirshov word is not.
class NotAlsw : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class NonConstantLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

class NonMonicRule : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace lieomega
