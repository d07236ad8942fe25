#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycode {

/// Base class for all domain errors raised by the library. The CLI maps these
/// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is 1-based: a column for Pauli strings,
/// a line number for polyhedron files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A polyhedron violates a closed-sphere invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// No admissible face coloring exists.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes disagree (qubit counts, vector lengths, syndrome sizes).
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace polycode
