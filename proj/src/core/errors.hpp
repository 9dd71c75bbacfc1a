#pragma once

#include <stdexcept>
#include <string>

namespace lux {

// Base class for all toolkit errors. The concrete subclasses map one-to-one
// onto the status codes of the C API boundary.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad sizes, non-finite values, parameters out of range.
class invalid_argument : public error {
public:
  using error::error;
};

// Operands live on different measure spaces.
class domain_mismatch : public error {
public:
  using error::error;
};

// A documented precondition of an operation does not hold.
class precondition_failed : public error {
public:
  using error::error;
};

// An iterative method exhausted its iteration budget.
class nonconvergence : public error {
public:
  using error::error;
};

// A numerical kernel produced an inconsistent result (failed sanity check,
// factorization breakdown, and so on).
class numerical_failure : public error {
public:
  using error::error;
};

}  // namespace lux
