#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tra {

/// Invalid numeric parameter (order, degree, scale, size, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request incompatible with the selected expansion mode, e.g. the
/// printed monomial expansion used with a non-integer exponent.
class ModeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Violated input contract such as an asymmetric matrix handed to a
/// symmetric-only routine.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Iterative numerics failed to converge. Carries the iteration count and
/// whatever eigenvalue estimates were available when the solver gave up.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, long iterations = 0,
               std::vector<double> partial = {})
      : std::runtime_error(what),
        iterations_(iterations),
        partial_(std::move(partial)) {}

  long iterations() const noexcept { return iterations_; }
  const std::vector<double>& partial() const noexcept { return partial_; }

 private:
  long iterations_;
  std::vector<double> partial_;
};

/// Three-term recursion hit a vanishing off-diagonal coupling.
class DegenerateRecursionError : public std::runtime_error {
 public:
  DegenerateRecursionError(const std::string& what, long index)
      : std::runtime_error(what), index_(index) {}

  long index() const noexcept { return index_; }

 private:
  long index_;
};

}  // namespace tra
