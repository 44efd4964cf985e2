// Shared helpers for the test suites.

#pragma once

#include <cmath>
#include <complex>

#include "jacspec/operator_model.hpp"
#include "jacspec/random_ops.hpp"

namespace jacspec::testing {

inline double cdist(Complex a, Complex b) { return std::abs(a - b); }

// |a-b| <= tol (1 + |b|)
inline bool close(Complex a, Complex b, double tol) {
  return cdist(a, b) <= tol * (1.0 + std::abs(b));
}

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

// Independent quadratic-formula oracle for the disk root of z² - λz + 1.
inline Complex disk_root_of_quadratic(Complex lambda) {
  Complex s = std::sqrt(lambda * lambda - 4.0);
  Complex r1 = (lambda + s) / 2.0, r2 = (lambda - s) / 2.0;
  return std::abs(r1) < std::abs(r2) ? r1 : r2;
}

// Single-site operator with diagonal entry b has U(z) = 1 + bz/(z²-1); its
// zero in the disk solves z² + bz - 1 = 0.
inline Complex single_site_zero(Complex b) {
  Complex s = std::sqrt(b * b + 4.0);
  Complex r1 = (-b + s) / 2.0, r2 = (-b - s) / 2.0;
  return std::abs(r1) < std::abs(r2) ? r1 : r2;
}

}  // namespace jacspec::testing
