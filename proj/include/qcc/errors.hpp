#pragma once

#include <stdexcept>
#include <string>

namespace qcc {

// Input rejected before any computation (maps to CLI exit code 2).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quotient is not a Laurent polynomial (maps to CLI exit code 3).
struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FractionalPowerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrix : ValidationError {
  using ValidationError::ValidationError;
};

struct FormMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct NotAdmissible : ValidationError {
  using ValidationError::ValidationError;
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& what, double estimate)
      : std::runtime_error(what), estimate(estimate) {}
  double estimate;
};

struct NotBCompatible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonDividingDegree : ValidationError {
  using ValidationError::ValidationError;
};

struct AdjacentVertices : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace qcc
