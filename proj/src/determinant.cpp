#include "jacspec/determinant.hpp"

#include <algorithm>
#include <cmath>

#include "jacspec/jost.hpp"
#include "jacspec/kernels.hpp"

namespace jacspec {

namespace {

// det of a dense complex matrix by in-place LU with partial pivoting.
// m is row-major n×n and is destroyed.
Complex lu_determinant(std::vector<Complex>& m, std::size_t n) {
  Complex det(1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(m[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      double mag = std::abs(m[i * n + k]);
      if (mag > best) {
        best = mag;
        piv = i;
      }
    }
    if (best == 0.0) return Complex(0.0);
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      det = -det;
    }
    Complex pivot = m[k * n + k];
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex factor = m[i * n + k] / pivot;
      if (factor == Complex(0.0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) m[i * n + j] -= factor * m[k * n + j];
    }
  }
  return det;
}

}  // namespace

Complex wronskian_at(const JacobiOperator& op, const SpectralParameter& z, long n) {
  long lo = op.is_free() ? 0 : op.support_lo();
  long hi = op.is_free() ? 0 : op.support_hi();
  long margin = std::max({5L, std::abs(n - lo) + 2, std::abs(n - hi) + 2});
  auto up = reconstruct_u(op, solve_volterra_right(op, z, margin));
  auto um = reconstruct_u(op, solve_volterra_left(op, z, margin));
  long n_min = lo - margin;
  TransitionFactors tf(op);
  return tf.beta(n) *
         (up[n - n_min] * um[n + 1 - n_min] - up[n + 1 - n_min] * um[n - n_min]);
}

Complex wronskian(const JacobiOperator& op, const SpectralParameter& z) {
  return wronskian_at(op, z, 0);
}

Complex determinant_u(const JacobiOperator& op, Complex z) {
  if (z != Complex(0.0)) check_spectral_z(z);
  return determinant_u_extended(op, z);
}

Complex determinant_u_extended(const JacobiOperator& op, Complex z) {
  if (std::abs(z - 1.0) <= kTolEdge || std::abs(z + 1.0) <= kTolEdge)
    throw EdgeProximityError("determinant_u_extended: z too close to ±1");
  if (op.is_free() || z == Complex(0.0)) return Complex(1.0);
  long lo = op.support_lo(), hi = op.support_hi();
  long n_lo = std::min(0L, lo - 1), n_hi = std::max(1L, hi + 1);
  // Same substitution as volterra_remainders_*, without the disk check;
  // every remainder is a polynomial in z, so the recursion is global.
  std::vector<Complex> fr(static_cast<std::size_t>(n_hi - n_lo + 1), Complex(0.0));
  for (long n = std::min(hi - 1, n_hi); n >= n_lo; --n) {
    Complex acc(0.0);
    for (long m = n + 1; m <= hi + 1; ++m) {
      Complex fm = (m <= n_hi) ? fr[m - n_lo] : Complex(0.0);
      acc += scaled_kernel(op, Side::right, n, m, z) * (1.0 + fm);
    }
    fr[n - n_lo] = acc;
  }
  std::vector<Complex> fl(static_cast<std::size_t>(n_hi - n_lo + 1), Complex(0.0));
  for (long n = std::max(lo + 1, n_lo); n <= n_hi; ++n) {
    Complex acc(0.0);
    for (long m = lo; m < n; ++m) {
      Complex fm = (m >= n_lo) ? fl[m - n_lo] : Complex(0.0);
      acc += scaled_kernel(op, Side::left, n, m, z) * (1.0 + fm);
    }
    fl[n - n_lo] = acc;
  }
  Complex f0r = fr[0 - n_lo], f1r = fr[1 - n_lo];
  Complex f0l = fl[0 - n_lo], f1l = fl[1 - n_lo];
  return ((1.0 + f0r) * (1.0 + f1l) - op.ac(0) * z * z * (1.0 + f1r) * (1.0 + f0l)) /
         (1.0 - z * z);
}

Complex determinant_oracle(const JacobiOperator& op, Complex lambda) {
  Complex z = zhukovsky_inverse(lambda);
  if (op.is_free()) return Complex(1.0);
  long w_lo = op.support_lo() - 1, w_hi = op.support_hi() + 1;
  std::size_t dim = static_cast<std::size_t>(w_hi - w_lo + 1);
  Complex denom = z - 1.0 / z;
  std::vector<Complex> zpow(dim + 2);
  zpow[0] = 1.0;
  for (std::size_t k = 1; k < zpow.size(); ++k) zpow[k] = zpow[k - 1] * z;
  std::vector<Complex> m(dim * dim, Complex(0.0));
  for (long i = w_lo; i <= w_hi; ++i) {
    std::size_t row = static_cast<std::size_t>(i - w_lo);
    m[row * dim + row] = 1.0;
    // V(i,·) is tridiagonal: a_{i-1}-1, b_i, c_i-1.
    const Complex v[3] = {op.a(i - 1) - 1.0, op.b(i), op.c(i) - 1.0};
    for (int d = -1; d <= 1; ++d) {
      Complex vik = v[d + 1];
      if (vik == Complex(0.0)) continue;
      long k = i + d;
      for (long j = w_lo; j <= w_hi; ++j)
        m[row * dim + static_cast<std::size_t>(j - w_lo)] +=
            vik * zpow[static_cast<std::size_t>(std::abs(k - j))] / denom;
    }
  }
  return lu_determinant(m, dim);
}

double BoundMargins::worst() const { return std::min({perdet, expbound, log_bound}); }

BoundMargins bound_margins(Complex z, Complex u, double delta_total) {
  BoundMargins bm;
  double omega_abs = std::abs(omega_of(z));
  double size = std::sqrt(delta_total) + delta_total;
  bm.x = omega_abs * size;
  double lhs1 = std::abs(u - 1.0), lhs2 = std::abs(u);
  // (4x+5x²)e^{4x} and e^{8x} overflow for x beyond ~175 resp ~88; decide
  // the comparison in logs there and saturate the reported margin.
  auto saturated = [](double rhs, double lhs) {
    if (std::isinf(rhs)) return kMarginSaturation;
    return std::min(rhs - lhs, kMarginSaturation);
  };
  double rhs1 = (4.0 * bm.x + 5.0 * bm.x * bm.x) * std::exp(4.0 * bm.x);
  bm.perdet = saturated(rhs1, lhs1);
  double rhs2 = std::exp(8.0 * bm.x);
  bm.expbound = saturated(rhs2, lhs2);
  // log-form of the determinant bound; LHS is -inf at a zero of U, which
  // makes the margin +inf and is saturated.
  double lg = 8.0 * bm.x - std::log(lhs2);
  bm.log_bound = std::isfinite(lg) ? std::min(lg, kMarginSaturation) : kMarginSaturation;
  return bm;
}

std::vector<DeterminantEvaluation> audit_bounds(const JacobiOperator& op,
                                                std::span<const Complex> z_grid,
                                                bool with_oracle) {
  double delta = compute_gauge(op).delta_total();
  std::vector<DeterminantEvaluation> out;
  out.reserve(z_grid.size());
  for (Complex z : z_grid) {
    DeterminantEvaluation ev;
    ev.z = z;
    ev.u_value = determinant_u(op, z);
    ev.margins = bound_margins(z, ev.u_value, delta);
    ev.bound_x = ev.margins.x;
    if (with_oracle && z != Complex(0.0))
      ev.oracle_value = determinant_oracle(op, z + 1.0 / z);
    out.push_back(ev);
  }
  return out;
}

std::vector<Complex> polar_grid(int n_r, int n_theta, double r_min, double r_max) {
  if (n_r < 1 || n_theta < 1) throw std::invalid_argument("polar_grid: empty grid");
  if (!(r_min > 0.0) || !(r_max < 1.0) || r_min > r_max)
    throw std::invalid_argument("polar_grid: radii must satisfy 0 < r_min <= r_max < 1");
  std::vector<Complex> grid;
  grid.reserve(static_cast<std::size_t>(n_r) * n_theta);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < n_r; ++i) {
    double r = (n_r == 1) ? r_min : r_min + i * (r_max - r_min) / (n_r - 1);
    for (int j = 0; j < n_theta; ++j) {
      double theta = (j + 0.5) * 2.0 * pi / n_theta;
      grid.push_back(std::polar(r, theta));
    }
  }
  return grid;
}

}  // namespace jacspec
