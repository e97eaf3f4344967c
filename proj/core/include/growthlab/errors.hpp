#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace growthlab {

/// Process exit codes shared by the CLI and the library's error taxonomy.
enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 2,
  kExitAssertionFailed = 3,
  kExitBudgetExceeded = 4,
  kExitInternal = 5,
};

/// Malformed group spec / word / input file. Carries the offending position
/// when it refers to a spec string.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  explicit ParseError(std::string message)
      : std::runtime_error(std::move(message)), position_(0) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Structurally valid input that violates a precondition (m < 2, singular
/// matrix, mixed realizations, mismatched radii, ...).
class SemanticError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured element / candidate budget was hit. Not a crash: callers can
/// report the partial radius that was completed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string message, long completed_radius = -1)
      : std::runtime_error(std::move(message)),
        completed_radius_(completed_radius) {}
  long completed_radius() const noexcept { return completed_radius_; }

 private:
  long completed_radius_;
};

}  // namespace growthlab
