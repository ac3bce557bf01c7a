#pragma once

// Independent check of quantized modes: the dimensionless radial equation
//
//   R'' + R'/xi - gamma^2/xi^2 R - delta/xi R - xi^2 R + lambda R = 0
//
// is discretized on [0, xi_max] as a symmetric tridiagonal eigenproblem in
// u = sqrt(xi) R, and a mode is accepted when lambda_pred = 2n + 2|gamma| + 2
// appears in its low spectrum.
//
// For |gamma| >= kCellCenteredBelow the Liouville form
//   -u'' + [(gamma^2 - 1/4)/xi^2 + delta/xi + xi^2] u = lambda u
// is discretized on vertices xi_i = i h with u(0) = u(xi_max) = 0. Near
// gamma = 0 the -1/(4 xi^2) term makes that scheme converge only
// logarithmically, so small |gamma| uses the flux form
//   -(xi R')' + (gamma^2/xi + delta + xi^3) R = lambda xi R
// on cell centres xi_i = (i - 1/2) h (zero flux through xi = 0, R = 0 at
// xi_max), symmetrized by sqrt(xi_i). Both are second order away from
// 0 < |gamma| < 1/2, where solutions ~ xi^|gamma| slow every uniform grid.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "kgo/errors.hpp"
#include "kgo/quantization.hpp"

namespace kgo {

inline constexpr double kCellCenteredBelow = 0.2;

struct GridSpec {
  double xi_max = 12.0;
  int points = 4000;

  double spacing() const { return xi_max / points; }
};

inline void validate(const GridSpec& g) {
  if (!(g.xi_max > 0.0)) throw invalid_input("grid: xi_max must be positive");
  if (g.points < 100) throw invalid_input("grid: at least 100 points required");
}

struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples rows i and i+1

  std::size_t size() const { return diag.size(); }
};

struct OracleReport {
  double predicted_lambda = 0.0;
  double matched_lambda = 0.0;
  double relative_error = 0.0;
  GridSpec grid;
  bool passed = false;
};

inline SymTridiagonal discretize_radial_operator(double gamma_abs, double delta, const GridSpec& grid) {
  validate(grid);
  if (!(gamma_abs >= 0.0)) throw invalid_input("discretize: gamma_abs must be non-negative");
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  SymTridiagonal a;

  if (gamma_abs >= kCellCenteredBelow) {
    const auto n = static_cast<std::size_t>(grid.points - 1);
    const double centrifugal = gamma_abs * gamma_abs - 0.25;
    a.diag.resize(n);
    a.off.assign(n - 1, -inv_h2);
    for (std::size_t i = 0; i < n; ++i) {
      const double xi = static_cast<double>(i + 1) * h;
      a.diag[i] = 2.0 * inv_h2 + centrifugal / (xi * xi) + delta / xi + xi * xi;
    }
    return a;
  }

  const auto n = static_cast<std::size_t>(grid.points);
  const double g2 = gamma_abs * gamma_abs;
  a.diag.resize(n);
  a.off.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double centre = (static_cast<double>(i) + 0.5) * h;
    const double face_lo = static_cast<double>(i) * h;
    // The ghost value -R_i past xi_max doubles the outer face coupling.
    const double face_hi = static_cast<double>(i + 1) * h * (i + 1 == n ? 2.0 : 1.0);
    const double stiffness = (face_lo + face_hi) * inv_h2 + g2 / centre + delta + centre * centre * centre;
    a.diag[i] = stiffness / centre;
    if (i + 1 < n) {
      const double next = centre + h;
      a.off[i] = -static_cast<double>(i + 1) * h * inv_h2 / std::sqrt(centre * next);
    }
  }
  return a;
}

namespace detail {

/// Number of eigenvalues strictly below x (Sturm sequence of the LDL^T pivots).
inline std::size_t count_below(const SymTridiagonal& a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double coupling = i == 0 ? 0.0 : a.off[i - 1] * a.off[i - 1] / pivot;
    pivot = a.diag[i] - x - coupling;
    if (std::abs(pivot) < tiny) pivot = -tiny;
    if (pivot < 0.0) ++count;
  }
  return count;
}

}  // namespace detail

/// The k smallest eigenvalues in ascending order, by bisection on Sturm counts.
inline std::vector<double> lowest_eigenvalues(const SymTridiagonal& a, std::size_t k) {
  const std::size_t n = a.size();
  if (k < 1 || k > n) throw invalid_input("lowest_eigenvalues: k must lie in [1, dimension]");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(a.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(a.off[i]) : 0.0);
    lo = std::min(lo, a.diag[i] - radius);
    hi = std::max(hi, a.diag[i] + radius);
  }
  const double pad = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)) + 1e-300;
  lo -= pad;
  hi += pad;

  std::vector<double> out;
  out.reserve(k);
  double floor = lo;
  for (std::size_t idx = 0; idx < k; ++idx) {
    // eigenvalue idx is the smallest x with count_below(x) > idx
    double left = floor, right = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (left + right);
      if (mid <= left || mid >= right) break;
      if (detail::count_below(a, mid) > idx) {
        right = mid;
      } else {
        left = mid;
      }
    }
    const double value = 0.5 * (left + right);
    out.push_back(value);
    floor = left;
  }
  return out;
}

inline OracleReport verify_mode(const ModeSolution& mode, const GridSpec& grid, double tol) {
  const auto matrix = discretize_radial_operator(mode.gamma_abs, mode.delta_root, grid);
  const auto window = std::min<std::size_t>(static_cast<std::size_t>(2 * mode.n + 4), matrix.size());
  const auto spectrum = lowest_eigenvalues(matrix, window);

  OracleReport report;
  report.grid = grid;
  report.predicted_lambda = mode.lambda();
  report.matched_lambda = *std::min_element(spectrum.begin(), spectrum.end(), [&](double x, double y) {
    return std::abs(x - report.predicted_lambda) < std::abs(y - report.predicted_lambda);
  });
  report.relative_error = std::abs(report.matched_lambda - report.predicted_lambda) / report.predicted_lambda;
  report.passed = report.relative_error < tol;
  return report;
}

}  // namespace kgo
