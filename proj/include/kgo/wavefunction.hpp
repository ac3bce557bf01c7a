#pragma once

// Regular (sigma = +1) radial solution R(xi) = N exp(-xi^2/2) xi^|gamma| H(xi)
// of a quantized mode, normalized under the planar measure xi dxi.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kgo/errors.hpp"
#include "kgo/polynomial.hpp"
#include "kgo/quantization.hpp"

namespace kgo {

inline constexpr double kDefaultXiMax = 12.0;
inline constexpr int kDefaultQuadraturePoints = 4001;

/// Composite Simpson on uniformly spaced samples. An odd number of intervals
/// closes with a 3/8-rule panel.
inline double simpson(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (y[0] + y[1]);
  if (n == 3) return h / 3.0 * (y[0] + 4.0 * y[1] + y[2]);
  std::size_t end = n - 1;  // last index covered by the 1/3 rule
  double tail = 0.0;
  if ((n - 1) % 2 != 0) {
    end = n - 4;
    tail = 3.0 * h / 8.0 * (y[n - 4] + 3.0 * y[n - 3] + 3.0 * y[n - 2] + y[n - 1]);
  }
  double sum = y[0] + y[end];
  for (std::size_t i = 1; i < end; ++i) sum += (i % 2 ? 4.0 : 2.0) * y[i];
  return h / 3.0 * sum + tail;
}

struct RadialWavefunction {
  double gamma_abs = 0.0;
  std::vector<double> coefficients;  // terminated a_0 .. a_n
  double normalization = 1.0;
  double omega = 1.0;
  double m = 1.0;

  /// exp(-xi^2/2) xi^|gamma| H(xi), without the normalization constant.
  double shape(double xi) const {
    return std::exp(-0.5 * xi * xi) * std::pow(xi, gamma_abs) * poly::evaluate(coefficients, xi);
  }

  double operator()(double xi) const { return normalization * shape(xi); }

  /// Physical radius rho = xi / sqrt(m omega).
  double rho(double xi) const { return xi / std::sqrt(m * omega); }
};

struct RadialTable {
  std::vector<double> xi_values;
  std::vector<double> r_values;
  std::vector<double> rho_values;
};

/// The constant N with int_0^xi_max |N shape|^2 xi dxi = 1 (Simpson, uniform grid).
inline double normalize(const RadialWavefunction& wf, double xi_max, int points) {
  if (!(xi_max > 0.0)) throw invalid_input("normalize: xi_max must be positive");
  if (points < 200) throw invalid_input("normalize: at least 200 quadrature points required");
  const double h = xi_max / (points - 1);
  std::vector<double> integrand(static_cast<std::size_t>(points));
  double peak = 0.0;
  for (int i = 0; i < points; ++i) {
    const double xi = i * h;
    const double r = wf.shape(xi);
    integrand[static_cast<std::size_t>(i)] = r * r * xi;
    peak = std::max(peak, integrand[static_cast<std::size_t>(i)]);
  }
  if (!(peak > 0.0)) throw invalid_input("normalize: wavefunction vanishes on the grid");
  const double tail = integrand.back() / peak;
  if (tail >= 1e-14) {
    throw tail_too_large("normalize: integrand at xi_max = " + std::to_string(xi_max) +
                             " is not negligible relative to its peak",
                         tail);
  }
  return 1.0 / std::sqrt(simpson(integrand, h));
}

inline RadialWavefunction build_radial(const ModeSolution& mode, double xi_max = kDefaultXiMax,
                                       int points = kDefaultQuadraturePoints) {
  RadialWavefunction wf{mode.gamma_abs, mode.coefficients, 1.0, mode.omega, mode.m};
  wf.normalization = normalize(wf, xi_max, points);
  return wf;
}

/// Uniform samples on [0, xi_max], endpoints included.
inline RadialTable sample_to_table(const RadialWavefunction& wf, double xi_max, int points) {
  if (points < 2) throw invalid_input("sample_to_table: at least 2 points required");
  if (!(xi_max > 0.0)) throw invalid_input("sample_to_table: xi_max must be positive");
  RadialTable t;
  const auto n = static_cast<std::size_t>(points);
  t.xi_values.reserve(n);
  t.r_values.reserve(n);
  t.rho_values.reserve(n);
  const double h = xi_max / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double xi = i == points - 1 ? xi_max : i * h;
    t.xi_values.push_back(xi);
    t.r_values.push_back(wf(xi));
    t.rho_values.push_back(wf.rho(xi));
  }
  return t;
}

}  // namespace kgo
