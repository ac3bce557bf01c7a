#pragma once

// Power-series solution H(xi) = sum_j a_j xi^j of the biconfluent Heun equation
//
//   H'' + [alpha / xi - 2 xi] H' + [theta - delta / xi] H = 0,
//   alpha = 2|gamma| + 1,  theta = beta^2 / (m omega) - 2 - 2|gamma|,
//
// whose coefficients obey the three-term recurrence
//
//   a_{j+2} = [delta a_{j+1} - (theta - 2j) a_j] / [(j + 2)(j + 1 + alpha)],
//
// seeded with a_0 = 1 and a_1 = delta / alpha.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "kgo/errors.hpp"
#include "kgo/polynomial.hpp"

namespace kgo {

template <class Real = double>
struct SeriesCoefficients {
  Real alpha{1};
  Real theta{0};
  Real delta{0};
  std::vector<Real> coeffs;
  // Set when coeffs is known to be an exact polynomial (every a_j past the end is zero).
  bool terminated = false;
};

/// a_j as polynomials in delta: polys[j][k] is the coefficient of delta^k in a_j.
template <class Real = double>
struct CoefficientPolynomials {
  Real alpha{1};
  Real theta{0};
  std::vector<std::vector<Real>> polys;
};

namespace detail {

template <class Real>
Real recurrence_denominator(std::size_t j, const Real& alpha) {
  return Real(static_cast<long>(j) + 2) * (Real(static_cast<long>(j) + 1) + alpha);
}

template <class Real>
void check_alpha(const Real& alpha) {
  if (!(alpha >= Real{1})) throw invalid_input("series: alpha = 2|gamma| + 1 must be >= 1");
}

}  // namespace detail

template <class Real = double>
SeriesCoefficients<Real> generate_coefficients(Real alpha, Real theta, Real delta, std::size_t count) {
  detail::check_alpha(alpha);
  if (count < 2) throw invalid_input("generate_coefficients: count must be >= 2");
  SeriesCoefficients<Real> out{alpha, theta, delta, {}, false};
  auto& a = out.coeffs;
  a.reserve(count);
  a.push_back(Real{1});
  a.push_back(delta / alpha);
  for (std::size_t j = 0; j + 2 < count; ++j) {
    const Real shift = theta - Real(2 * static_cast<long>(j));
    a.push_back((delta * a[j + 1] - shift * a[j]) / detail::recurrence_denominator(j, alpha));
  }
  return out;
}

/// a_index(delta) together with d a_index / d delta, by differentiating the recurrence.
template <class Real = double>
std::pair<Real, Real> coefficient_with_derivative(Real alpha, Real theta, Real delta, std::size_t index) {
  detail::check_alpha(alpha);
  Real a_prev{1}, a_cur = delta / alpha;
  Real d_prev{0}, d_cur = Real{1} / alpha;
  if (index == 0) return {a_prev, d_prev};
  for (std::size_t j = 0; j + 1 < index; ++j) {
    const Real shift = theta - Real(2 * static_cast<long>(j));
    const Real den = detail::recurrence_denominator(j, alpha);
    const Real a_next = (delta * a_cur - shift * a_prev) / den;
    const Real d_next = (a_cur + delta * d_cur - shift * d_prev) / den;
    a_prev = a_cur;
    a_cur = a_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return {a_cur, d_cur};
}

/// The recurrence with delta kept symbolic; polys[j] has degree j and the parity of j.
template <class Real = double>
CoefficientPolynomials<Real> coefficient_polynomials(Real alpha, Real theta, std::size_t n_max) {
  detail::check_alpha(alpha);
  if (n_max < 1) throw invalid_input("coefficient_polynomials: n_max must be >= 1");
  CoefficientPolynomials<Real> out{alpha, theta, {}};
  auto& p = out.polys;
  p.reserve(n_max + 1);
  p.push_back({Real{1}});
  p.push_back({Real{0}, Real{1} / alpha});
  for (std::size_t j = 0; j + 2 <= n_max; ++j) {
    const Real shift = theta - Real(2 * static_cast<long>(j));
    const Real den = detail::recurrence_denominator(j, alpha);
    std::vector<Real> next(j + 3, Real{0});
    // delta * a_{j+1}
    for (std::size_t k = 0; k < p[j + 1].size(); ++k) next[k + 1] += p[j + 1][k];
    // - (theta - 2j) * a_j
    for (std::size_t k = 0; k < p[j].size(); ++k) next[k] -= shift * p[j][k];
    for (auto& c : next) c /= den;
    p.push_back(std::move(next));
  }
  return out;
}

/// Sum a_j xi^j. A terminated coefficient list is evaluated as an exact polynomial;
/// otherwise summation stops once |a_j xi^j| < tail_tolerance for five consecutive j,
/// and running out of coefficients first throws truncation_error.
inline double evaluate_H(const SeriesCoefficients<double>& s, double xi, double tail_tolerance) {
  if (!(xi >= 0.0)) throw invalid_input("evaluate_H: xi must be non-negative");
  if (s.terminated) return poly::evaluate(s.coeffs, xi);

  constexpr int kQuietRun = 5;
  double sum = 0.0;
  double power = 1.0;
  int quiet = 0;
  // largest of the most recent kQuietRun terms, reported on failure
  std::vector<double> recent(kQuietRun, std::numeric_limits<double>::infinity());
  std::size_t j = 0;
  for (double a : s.coeffs) {
    const double term = a * power;
    sum += term;
    recent[j++ % kQuietRun] = std::abs(term);
    quiet = std::abs(term) < tail_tolerance ? quiet + 1 : 0;
    if (quiet >= kQuietRun) return sum;
    power *= xi;
  }
  const double bound = *std::max_element(recent.begin(), recent.end());
  throw truncation_error("evaluate_H: series not converged at xi = " + std::to_string(xi) +
                             " with " + std::to_string(s.coeffs.size()) + " coefficients",
                         bound);
}

/// Evaluates the untruncated series at xi, generating up to 10000 coefficients.
inline double evaluate_H(double alpha, double theta, double delta, double xi, double tail_tolerance) {
  constexpr std::size_t kMaxTerms = 10000;
  return evaluate_H(generate_coefficients(alpha, theta, delta, kMaxTerms), xi, tail_tolerance);
}

}  // namespace kgo
