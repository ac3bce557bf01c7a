#pragma once

// Bound states of the radial equation are polynomial solutions of the Heun
// series. The series truncates at degree n when
//
//   theta = 2n        (fixes the energy for a given omega), and
//   a_{n+1} = 0       (fixes delta, hence omega = 4 m f^2 / delta^2).
//
// The first condition is imposed directly. The second is a polynomial equation
// of degree n+1 in delta with definite parity, solved here with companion-matrix
// eigenvalues in t = delta^2 followed by Newton polishing on the recurrence.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "kgo/errors.hpp"
#include "kgo/heun_series.hpp"
#include "kgo/params.hpp"
#include "kgo/polynomial.hpp"

namespace kgo {

struct ModeSolution {
  int n = 1;
  int l = 0;
  double m = 1.0;
  double f = 0.0;
  double gamma_abs = 0.0;
  double delta_root = 0.0;
  double omega = 0.0;
  double energy_plus = 0.0;
  double energy_minus = 0.0;
  std::vector<double> coefficients;  // a_0 .. a_n; a_j = 0 for j > n

  double alpha() const { return alpha_from_gamma(gamma_abs); }
  double theta() const { return 2.0 * n; }
  /// Eigenvalue beta^2 / (m omega) of the dimensionless radial equation.
  double lambda() const { return lambda_from_theta(theta(), gamma_abs); }

  SeriesCoefficients<double> series() const {
    return {alpha(), theta(), delta_root, coefficients, true};
  }
};

namespace detail {

constexpr double kImagTolerance = 1e-10;
constexpr double kRootRelTol = 1e-12;

inline std::complex<double> polish_complex(const std::vector<double>& q, std::complex<double> t) {
  for (int it = 0; it < 20; ++it) {
    std::complex<double> p{0.0}, dp{0.0};
    for (std::size_t i = q.size(); i-- > 0;) {
      dp = dp * t + p;
      p = p * t + q[i];
    }
    if (dp == std::complex<double>{0.0}) break;
    const auto step = p / dp;
    t -= step;
    if (std::abs(step) <= 1e-16 * std::abs(t)) break;
  }
  return t;
}

/// Newton on a_{n+1}(delta) using the numeric recurrence as function oracle.
inline double polish_delta(double alpha, double theta, std::size_t index, double delta) {
  double best = delta;
  double best_res = std::abs(coefficient_with_derivative(alpha, theta, delta, index).first);
  for (int it = 0; it < 60; ++it) {
    const auto [value, slope] = coefficient_with_derivative(alpha, theta, delta, index);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double step = value / slope;
    delta -= step;
    const double res = std::abs(coefficient_with_derivative(alpha, theta, delta, index).first);
    if (res < best_res) {
      best_res = res;
      best = delta;
    }
    if (std::abs(step) <= 1e-16 * std::abs(delta)) break;
  }
  return best;
}

inline ModeSolution assemble_mode(const ModelParams& p, double gamma_abs, double delta, double omega) {
  ModeSolution mode;
  mode.n = p.n;
  mode.l = p.l;
  mode.m = p.m;
  mode.f = p.f;
  mode.gamma_abs = gamma_abs;
  mode.delta_root = delta;
  mode.omega = omega;
  const auto e = energy_from_theta_condition(p.m, omega, p.n, gamma_abs);
  mode.energy_plus = e.plus;
  mode.energy_minus = e.minus;
  const auto degree = static_cast<std::size_t>(p.n);
  mode.coefficients =
      generate_coefficients(alpha_from_gamma(gamma_abs), 2.0 * p.n, delta, std::max<std::size_t>(2, degree + 1))
          .coeffs;
  mode.coefficients.resize(degree + 1);
  return mode;
}

}  // namespace detail

/// Admissible Coulomb parameters delta (same sign as f) solving a_{n+1}(delta) = 0 with theta = 2n.
inline std::vector<double> admissible_deltas(double gamma_abs, int n, double f) {
  const double alpha = alpha_from_gamma(gamma_abs);
  const double theta = 2.0 * n;
  const auto index = static_cast<std::size_t>(n) + 1;
  const auto target = coefficient_polynomials(alpha, theta, index).polys[index];

  // a_{n+1}(delta) = delta^parity * q(delta^2)
  const auto q = poly::even_part(std::span<const double>(target), index % 2);
  std::vector<double> deltas;
  if (poly::degree(std::span<const double>(q)) < 1) return deltas;

  const double sign = std::signbit(f) ? -1.0 : 1.0;
  for (auto t : poly::roots(q)) {
    t = detail::polish_complex(q, t);
    if (std::abs(t.imag()) > detail::kImagTolerance * std::max(1.0, std::abs(t))) continue;
    if (!(t.real() > 0.0)) continue;
    const double delta = detail::polish_delta(alpha, theta, index, sign * std::sqrt(t.real()));
    if (delta == 0.0 || std::signbit(delta) != std::signbit(f)) continue;
    const bool duplicate = std::any_of(deltas.begin(), deltas.end(), [&](double d) {
      return std::abs(d - delta) <= 1e3 * detail::kRootRelTol * std::abs(delta);
    });
    if (!duplicate) deltas.push_back(delta);
  }
  return deltas;
}

/// Every quantized mode for (m, f, l, n), sorted by descending omega. May be empty.
inline std::vector<ModeSolution> allowed_frequencies(const ModelParams& p) {
  validate(p);
  if (p.f == 0.0) {
    throw degenerate_case(
        "coupling f = 0: omega is not quantized by the Coulomb term; use pure_oscillator_mode");
  }
  const double gamma_abs = derive_gamma(p.l, p.f);
  std::vector<ModeSolution> modes;
  for (double delta : admissible_deltas(gamma_abs, p.n, p.f)) {
    modes.push_back(detail::assemble_mode(p, gamma_abs, delta, omega_from_delta(p.m, p.f, delta)));
  }
  std::sort(modes.begin(), modes.end(),
            [](const ModeSolution& a, const ModeSolution& b) { return a.omega > b.omega; });
  return modes;
}

inline ModeSolution solve_mode(const ModelParams& p, std::size_t root_index) {
  auto modes = allowed_frequencies(p);
  if (root_index >= modes.size()) {
    throw not_found("solve_mode: root index " + std::to_string(root_index) + " out of range (" +
                    std::to_string(modes.size()) + " admissible roots)");
  }
  return std::move(modes[root_index]);
}

/// omega_{1,l} = 2 m f^2 / (2|gamma| + 1).
inline double ground_state_frequency(double m, double f, int l) {
  if (!(m > 0.0)) throw invalid_input("ground_state_frequency: mass must be positive");
  if (f == 0.0) throw degenerate_case("ground_state_frequency: f = 0 has no quantized frequency");
  return 2.0 * m * f * f / alpha_from_gamma(derive_gamma(l, f));
}

/// E_{1,l} = +-m [1 + 4 f^2 (|gamma| + 3/2) / (2|gamma| + 1)]^{1/2}.
inline EnergyPair ground_state_energy(double m, double f, int l) {
  if (!(m > 0.0)) throw invalid_input("ground_state_energy: mass must be positive");
  if (f == 0.0) throw degenerate_case("ground_state_energy: f = 0 has no quantized frequency");
  const double g = derive_gamma(l, f);
  const double e = m * std::sqrt(1.0 + 4.0 * f * f * (g + 1.5) / (2.0 * g + 1.0));
  return {e, -e};
}

/// f = 0: delta vanishes, every omega > 0 is allowed, and the series terminates
/// only for even n (odd coefficients vanish identically). Reproduces the planar
/// oscillator ladder lambda = 2(n + |l| + 1).
inline ModeSolution pure_oscillator_mode(double m, double omega, int l, int n) {
  if (!(m > 0.0)) throw invalid_input("pure_oscillator_mode: mass must be positive");
  if (!(omega > 0.0)) throw invalid_input("pure_oscillator_mode: omega must be positive");
  if (n < 0 || n % 2 != 0) {
    throw invalid_input("pure_oscillator_mode: with f = 0 the series terminates only for even n >= 0");
  }
  const ModelParams p{m, 0.0, l, n};
  return detail::assemble_mode(p, derive_gamma(l, 0.0), 0.0, omega);
}

}  // namespace kgo
