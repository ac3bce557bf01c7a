#pragma once

// Physical inputs of the Klein-Gordon oscillator with a Coulomb-type scalar
// potential S(rho) = f / rho, and the scalar quantities that map them onto the
// dimensionless series equation. Natural units (c = hbar = 1) throughout; the
// coupling f is a dimensionless real.

#include <cmath>
#include <string>

#include "kgo/errors.hpp"

namespace kgo {

struct ModelParams {
  double m = 1.0;  // rest mass, > 0
  double f = 0.0;  // Coulomb coupling; f > 0 repulsive, f < 0 attractive
  int l = 0;       // azimuthal quantum number
  int n = 1;       // radial quantum number; 0 only allowed when f == 0
};

/// Throws invalid_input unless m > 0, n >= 0 and (n >= 1 whenever f != 0).
inline void validate(const ModelParams& p) {
  if (!(p.m > 0.0) || !std::isfinite(p.m)) {
    throw invalid_input("mass must be positive and finite, got " + std::to_string(p.m));
  }
  if (!std::isfinite(p.f)) throw invalid_input("coupling must be finite");
  if (p.n < 0) throw invalid_input("radial quantum number must be non-negative");
  if (p.n == 0 && p.f != 0.0) {
    throw invalid_input("n = 0 is not a bound state when f != 0; the ground state is n = 1");
  }
}

struct EnergyPair {
  double plus = 0.0;
  double minus = 0.0;
};

/// |gamma| = sqrt(l^2 + f^2).
inline double derive_gamma(int l, double f) {
  const double ld = static_cast<double>(l);
  return std::hypot(ld, f);
}

inline double alpha_from_gamma(double gamma_abs) { return 2.0 * gamma_abs + 1.0; }

/// delta = 2 m f / sqrt(m omega).
inline double derive_delta(double m, double f, double omega) {
  if (!(m > 0.0)) throw invalid_input("derive_delta: mass must be positive");
  if (!(omega > 0.0)) throw invalid_input("derive_delta: omega must be positive");
  return 2.0 * m * f / std::sqrt(m * omega);
}

/// Inverse of derive_delta in omega: omega = 4 m f^2 / delta^2.
inline double omega_from_delta(double m, double f, double delta) {
  if (!(m > 0.0)) throw invalid_input("omega_from_delta: mass must be positive");
  if (f == 0.0) throw degenerate_case("omega_from_delta: f = 0 leaves omega undetermined");
  if (delta == 0.0) throw invalid_input("omega_from_delta: delta must be nonzero");
  if (std::signbit(delta) != std::signbit(f)) {
    throw invalid_input("omega_from_delta: sign of delta must match sign of f");
  }
  return 4.0 * m * f * f / (delta * delta);
}

/// Both energy branches E = +-sqrt(m^2 + 2 m omega (n + |gamma| + 1/2)) implied by theta = 2n.
inline EnergyPair energy_from_theta_condition(double m, double omega, int n, double gamma_abs) {
  if (!(m > 0.0)) throw invalid_input("energy: mass must be positive");
  if (!(omega > 0.0)) throw invalid_input("energy: omega must be positive");
  if (n < 0) throw invalid_input("energy: n must be non-negative");
  const double e = std::sqrt(m * m + 2.0 * m * omega * (n + gamma_abs + 0.5));
  return {e, -e};
}

/// lambda = beta^2 / (m omega), the eigenvalue of the dimensionless radial equation.
inline double lambda_from_theta(double theta, double gamma_abs) { return theta + 2.0 + 2.0 * gamma_abs; }

inline double theta_from_lambda(double lambda, double gamma_abs) { return lambda - 2.0 - 2.0 * gamma_abs; }

struct DerivedParams {
  double gamma_abs = 0.0;
  double alpha = 1.0;
  double delta = 0.0;
  double beta_sq = 0.0;  // E^2 - m^2 + m omega
  double theta = 0.0;    // beta^2 / (m omega) - 2 - 2|gamma|
};

/// Everything that follows from the physical inputs once omega and an energy are fixed.
inline DerivedParams derive_params(const ModelParams& p, double omega, double energy) {
  validate(p);
  DerivedParams d;
  d.gamma_abs = derive_gamma(p.l, p.f);
  d.alpha = alpha_from_gamma(d.gamma_abs);
  d.delta = derive_delta(p.m, p.f, omega);
  d.beta_sq = energy * energy - p.m * p.m + p.m * omega;
  d.theta = theta_from_lambda(d.beta_sq / (p.m * omega), d.gamma_abs);
  return d;
}

}  // namespace kgo
