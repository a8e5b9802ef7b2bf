#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace phasediag {

/// Input violates a documented precondition or invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hard size limit (group order, object count, ...) was exceeded.
class CapExceeded : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Argument outside the domain of a function (e.g. a rate function
/// evaluated outside the convex hull of the outcomes).
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Syntax error in a textual input, with the 0-based character offset.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : ValidationError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Non-fatal notes collected while validating inputs.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
};

}  // namespace phasediag
