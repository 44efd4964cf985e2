#include "jacspec/kernels.hpp"

#include <cmath>

namespace jacspec {

namespace {

// The closed ratio forms cancel catastrophically near z = ±1; beyond this
// radius the finite-sum forms are mandatory.
constexpr double kRatioFormRadius = 0.9;

void check_kernel_z(Complex z) {
  if (z == Complex(0.0)) throw std::invalid_argument("kernel: z must be nonzero");
  if (std::abs(z - 1.0) <= kTolEdge || std::abs(z + 1.0) <= kTolEdge)
    throw EdgeProximityError("kernel: z too close to ±1");
}

// (z^k - z^{-k}) / (z - 1/z) for k >= 1.
Complex green_positive(long k, Complex z) {
  if (std::abs(z) <= kRatioFormRadius) {
    Complex zk = std::pow(z, static_cast<double>(k));
    return (zk - 1.0 / zk) / (z - 1.0 / z);
  }
  // z^{1-k} (1 + z² + ... + z^{2(k-1)}), exact rewriting of the ratio.
  Complex z2 = z * z, term = 1.0, sum = 1.0;
  for (long i = 1; i < k; ++i) {
    term *= z2;
    sum += term;
  }
  return std::pow(z, static_cast<double>(1 - k)) * sum;
}

}  // namespace

Complex scaled_green_sum(long k, Complex z) {
  if (k <= 0) return Complex(0.0);
  if (z == Complex(0.0)) return Complex(0.0);
  if (std::abs(z) <= kRatioFormRadius)
    return z * (1.0 - std::pow(z * z, static_cast<double>(k))) / (1.0 - z * z);
  Complex z2 = z * z, term = z, sum = z;
  for (long i = 1; i < k; ++i) {
    term *= z2;
    sum += term;
  }
  return sum;
}

Complex green_r(long n, long m, Complex z) {
  check_kernel_z(z);
  if (m <= n) return Complex(0.0);
  return green_positive(m - n, z);
}

Complex green_l(long n, long m, Complex z) {
  check_kernel_z(z);
  if (m >= n) return Complex(0.0);
  return green_positive(n - m, z);
}

Complex transition_kernel(const JacobiOperator& op, Side side, long n, long m, Complex z) {
  if (side == Side::right)
    return -op.b(m) * green_r(n, m, z) + (1.0 - op.ac(m - 1)) * green_r(n, m - 1, z);
  return -op.b(m) * green_l(n, m, z) + (1.0 - op.ac(m)) * green_l(n, m + 1, z);
}

Complex scaled_kernel(const JacobiOperator& op, Side side, long n, long m, Complex z) {
  if (std::abs(z - 1.0) <= kTolEdge || std::abs(z + 1.0) <= kTolEdge)
    throw EdgeProximityError("scaled_kernel: z too close to ±1");
  if (side == Side::right)
    return -op.b(m) * scaled_green_sum(m - n, z) +
           (1.0 - op.ac(m - 1)) * z * scaled_green_sum(m - n - 1, z);
  return -op.b(m) * scaled_green_sum(n - m, z) +
         (1.0 - op.ac(m)) * z * scaled_green_sum(n - m - 1, z);
}

}  // namespace jacspec
