#pragma once

#include <stdexcept>
#include <string>

namespace sagrs {

/// A precondition of an operation was violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The linear system has a (numerically) singular coefficient matrix.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A surrogate model could not be fitted to the given pool.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration value (unknown name, out-of-range knob).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A budgeted objective was asked for more evaluations than it allows.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be created or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}
}  // namespace detail

}  // namespace sagrs
