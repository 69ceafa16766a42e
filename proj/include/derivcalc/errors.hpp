#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace derivcalc {

// Every library error derives from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Denominator vanishes at an evaluation point.
class PoleError : public Error {
 public:
  PoleError() : Error("pole: denominator vanishes at evaluation point") {}
};

// Operands live in different ambient variable counts.
class DimensionError : public Error {
 public:
  DimensionError(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              " variables, got " + std::to_string(got)) {}
  explicit DimensionError(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)),
        message_(message),
        offset_(offset) {}

  const std::string& message() const { return message_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

inline void require_same_arity(std::size_t expected, std::size_t got) {
  if (expected != got) throw DimensionError(expected, got);
}

}  // namespace derivcalc
