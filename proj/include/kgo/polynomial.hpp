#pragma once

// Dense univariate polynomials stored as ascending-power coefficient vectors,
// and their complex roots via companion-matrix eigenvalues.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "kgo/errors.hpp"

namespace kgo::poly {

template <class Real>
Real evaluate(std::span<const Real> c, const Real& x) {
  Real acc{0};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

template <class Real>
Real evaluate(const std::vector<Real>& c, const Real& x) {
  return evaluate(std::span<const Real>(c), x);
}

/// Index of the highest nonzero coefficient; -1 for the zero polynomial.
template <class Real>
int degree(std::span<const Real> c) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] != Real{0}) return static_cast<int>(i);
  }
  return -1;
}

/// Every other coefficient starting at `offset`: q(t) with p(x) = x^offset q(x^2)
/// when p has definite parity.
template <class Real>
std::vector<Real> even_part(std::span<const Real> c, std::size_t offset) {
  std::vector<Real> out;
  for (std::size_t i = offset; i < c.size(); i += 2) out.push_back(c[i]);
  return out;
}

/// All complex roots of the polynomial, as eigenvalues of the companion matrix of
/// its monic form. Leading zero coefficients are dropped; roots at the origin are
/// returned explicitly.
inline std::vector<std::complex<double>> roots(std::span<const double> c) {
  const int deg = degree(c);
  if (deg < 0) throw invalid_input("roots: zero polynomial has no isolated roots");
  std::vector<std::complex<double>> out;
  int low = 0;
  while (low < deg && c[static_cast<std::size_t>(low)] == 0.0) {
    out.emplace_back(0.0, 0.0);
    ++low;
  }
  const int n = deg - low;
  if (n == 0) return out;
  const double lead = c[static_cast<std::size_t>(deg)];
  if (n == 1) {
    out.emplace_back(-c[static_cast<std::size_t>(low)] / lead, 0.0);
    return out;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  companion.diagonal(-1).setOnes();
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = -c[static_cast<std::size_t>(low + i)] / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("roots: companion-matrix eigenvalue iteration did not converge");
  }
  const auto& ev = solver.eigenvalues();
  for (int i = 0; i < n; ++i) out.push_back(ev(i));
  return out;
}

inline std::vector<std::complex<double>> roots(const std::vector<double>& c) {
  return roots(std::span<const double>(c));
}

}  // namespace kgo::poly
