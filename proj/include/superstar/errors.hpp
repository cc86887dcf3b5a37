#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superstar {

// Violation of a mathematical precondition (signature mismatch, parity
// discipline, non-member matrix, ...). The CLI maps these to exit code 2.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureMismatch : public MathError {
 public:
  SignatureMismatch() : MathError("operands have different signatures") {}
};

class ParityError : public MathError {
 public:
  using MathError::MathError;
};

class DimensionError : public MathError {
 public:
  using MathError::MathError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace superstar
