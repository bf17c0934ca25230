#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace frobcheck {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Syntax error in polynomial, class or ambient text. `position` is a
/// zero-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

/// Two terms of a polynomial disagree in weighted degree.
class NonHomogeneous : public Error {
 public:
  NonHomogeneous(std::string first, std::string second)
      : Error("polynomial is not weighted-homogeneous: terms " + first +
              " and " + second + " have different degrees"),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const std::string& first_witness() const noexcept { return first_; }
  const std::string& second_witness() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("monomial exponent exceeds 16-bit range") {}
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonP1Factor : public Error {
 public:
  NonP1Factor() : Error("every factor of the base must be P^1") {}
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class UnsupportedFieldSize : public Error {
 public:
  explicit UnsupportedFieldSize(unsigned q)
      : Error("unsupported field size q=" + std::to_string(q)) {}
};

}  // namespace frobcheck
