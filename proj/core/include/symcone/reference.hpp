#pragma once

// Reference computations that avoid the library's spectral machinery.
// Positivity is decided from the multiplication operator: x lies in the
// closed cone iff L_x is positive semidefinite, and the smallest
// eigenvalue of L_x equals the smallest spectral value of x.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "symcone/algebra.hpp"

namespace symcone::reference {

inline double min_spectral_value(const Element& x) {
  const Eigen::MatrixXd l = symcone::multiplication_operator(x);
  const Eigen::MatrixXd sym = 0.5 * (l + l.transpose());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sym, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

inline bool dominated(const Element& a, const Element& b, double beta) {
  return min_spectral_value(beta * b - a) >= 0.0;
}

/// inf{β > 0 : a ≤ βb} by bracketing and 60 bisection steps.
inline double bisection_gauge(const Element& a, const Element& b) {
  double hi = 1.0;
  while (!dominated(a, b, hi)) {
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("reference gauge: no upper bracket");
  }
  double lo = hi / 2.0;
  while (dominated(a, b, lo)) {
    hi = lo;
    lo /= 2.0;
    if (lo < 1e-300) throw std::runtime_error("reference gauge: no lower bracket");
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (dominated(a, b, mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double thompson(const Element& a, const Element& b) {
  return std::log(std::max(bisection_gauge(a, b), bisection_gauge(b, a)));
}

inline double hilbert(const Element& a, const Element& b) {
  return std::log(bisection_gauge(a, b) * bisection_gauge(b, a));
}

/// Sym(n) only: generalized eigenvalues of (A, B).
inline Eigen::VectorXd generalized_eigenvalues(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, b, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline double thompson_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::VectorXd ev = generalized_eigenvalues(a, b);
  return std::max(std::abs(std::log(ev.minCoeff())), std::abs(std::log(ev.maxCoeff())));
}

inline double hilbert_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::VectorXd ev = generalized_eigenvalues(a, b);
  return std::log(ev.maxCoeff() / ev.minCoeff());
}

}  // namespace symcone::reference
