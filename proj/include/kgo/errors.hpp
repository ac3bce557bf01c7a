#pragma once

#include <stdexcept>
#include <string>

namespace kgo {

/// Precondition violated by caller-supplied values (nonpositive mass, sign mismatch, ...).
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f = 0 requested on a path that quantizes the frequency through the Coulomb term.
class degenerate_case : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class not_found : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A non-terminated series did not converge at the requested point.
class truncation_error : public std::runtime_error {
 public:
  truncation_error(const std::string& what, double achieved_bound)
      : std::runtime_error(what), achieved_bound_(achieved_bound) {}

  double achieved_bound() const noexcept { return achieved_bound_; }

 private:
  double achieved_bound_;
};

/// Quadrature interval too short for the integrand to have decayed.
class tail_too_large : public std::runtime_error {
 public:
  tail_too_large(const std::string& what, double relative_tail)
      : std::runtime_error(what), relative_tail_(relative_tail) {}

  double relative_tail() const noexcept { return relative_tail_; }

 private:
  double relative_tail_;
};

}  // namespace kgo
