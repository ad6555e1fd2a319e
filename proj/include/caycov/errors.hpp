#pragma once

#include <stdexcept>
#include <string>

namespace caycov {

// Base of everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad mathematical input or malformed query (CLI exit code 2).
class ValidationError : public Error {
public:
  using Error::Error;
};

class MissingInverseError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class ContainsZeroError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotGeneratingError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DuplicateGeneratorError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NonCyclicKernelError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Query-mode misuse (e.g. --total without --kernel).
class OrderMismatchError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// A constructed covering graph came out with a loop or parallel edge.
class SimplicityViolatedError : public Error {
public:
  using Error::Error;
};

// Enumeration would exceed a configured budget (CLI exit code 3).
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

// A theorem-guaranteed property failed at runtime (inexact division,
// nonnegativity of an exponent, ...). Always a bug, never an input problem.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace caycov
