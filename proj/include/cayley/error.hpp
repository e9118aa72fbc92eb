#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayley {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Raised when a generator list is not a set of involutions with disjoint support.
class IdsViolation : public Error {
 public:
  IdsViolation(std::size_t point, const std::string& what)
      : Error("ids violation at point " + std::to_string(point) + ": " + what), point_(point) {}
  std::size_t point() const noexcept { return point_; }

 private:
  std::size_t point_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive oracle refused to run because its search space exceeds the cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cayley
