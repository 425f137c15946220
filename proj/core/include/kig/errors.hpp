#pragma once

#include <stdexcept>
#include <string>

namespace kig {

// Invalid input: malformed specs, out-of-domain parameters, violated
// preconditions.  The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A model fails the structural requirement for Kahler geometry (the constant
// term of the log transfer function varies with the parameter).  Geometry
// routines refuse to proceed on such models.
class NotKahlerError : public ValidationError {
 public:
  explicit NotKahlerError(const std::string& what) : ValidationError(what) {}
};

// Numerical breakdown that could not be repaired (e.g. a finite-difference
// stencil that still leaves the admissible domain after the maximum number of
// step reductions).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kig
