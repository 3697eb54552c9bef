#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symideal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, column maps, permutations, JSON).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(0) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical precondition of an operation does not hold
/// (ring mismatch, wrong variable kind, bounds, non-field ring, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// n! is not invertible in the coefficient field (characteristic p <= n).
class CharacteristicObstruction : public PreconditionError {
 public:
  CharacteristicObstruction() : PreconditionError("characteristic obstruction: p <= n") {}
};

}  // namespace symideal
