#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace endorsim {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structure or argument violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Model parameters out of their admissible domain.
class ParameterError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownVertexError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SelfLoopError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Malformed serialized input; carries the 1-based line number.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace endorsim
