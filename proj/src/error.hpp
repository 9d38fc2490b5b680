#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition: rank mismatch, index out of range, invalid partition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A mathematical check that was expected to hold did not (e.g. AutPair inverse).
class CheckFailure : public Error {
 public:
  using Error::Error;
};

// Malformed word/braid/cycle text. `position` is a 0-based column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at column " + std::to_string(position + 1)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tmm
