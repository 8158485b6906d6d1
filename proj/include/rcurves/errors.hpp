#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rcurves {

/// Base class for all library errors. `kind()` is a stable machine-readable
/// tag (e.g. "NotOnHypersurface"); the what() string is human-oriented.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed input: bad arity, wrong degrees, schema violations.
/// The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that violates a mathematical precondition
/// (curve not on the hypersurface, hypersurface singular along the curve,
/// non-surjective sheaf map, ...). The CLI maps these to exit code 3.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rcurves
