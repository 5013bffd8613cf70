#pragma once

#include <stdexcept>
#include <string>

namespace holedim {

/// Raised when a requested depth would exceed the configured state budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when power iteration does not settle within its iteration cap.
/// Carries the last Collatz-Wielandt bracket, which is still a valid
/// enclosure of the spectral radius.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double lower, double upper)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace holedim
