#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace grauert {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
using RVector = std::vector<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input rejected by a precondition check.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Iterative procedure failed; carries the residual history.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, RVector history)
      : Error(what), history_(std::move(history)) {}
  const RVector& history() const { return history_; }

 private:
  RVector history_;
};

// Fixed point iteration stopped contracting.
class ContractionLost : public Error {
 public:
  using Error::Error;
};

// A closed curve has the wrong winding number or passes through zero.
class WindingError : public Error {
 public:
  using Error::Error;
};

}  // namespace grauert
