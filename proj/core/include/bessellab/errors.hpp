#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

namespace bessellab {

// Argument outside the mathematical domain of an operation (lambda <= -1/2,
// z >= 1 for the hypergeometric function, nonpositive time, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Result not representable in double precision (for instance I_nu(z) with
// z beyond ~700). Callers are expected to switch to a scaled variant.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// A numerical procedure could not reach its tolerance. Carries the
// diagnostics that explain why.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::map<std::string, double> diagnostics = {})
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

  const std::map<std::string, double>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::map<std::string, double> diagnostics_;
};

// The integral being evaluated does not converge (non-Cauchy tails, a
// non-integrable singularity at the origin, ...).
class DivergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Malformed textual input (weight or data grammar, CLI arguments).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bessellab
