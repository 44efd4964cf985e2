#include "jacspec/jost.hpp"

#include <algorithm>
#include <cmath>

#include "jacspec/kernels.hpp"

namespace jacspec {

namespace {

void check_remainder_z(Complex z) {
  if (std::abs(z) >= 1.0)
    throw std::invalid_argument("volterra: z must lie in the open unit disk");
  double d1 = std::abs(z - 1.0), d2 = std::abs(z + 1.0);
  if (d1 <= kTolEdge || d2 <= kTolEdge)
    throw EdgeProximityError("volterra: z too close to ±1");
  if (std::abs(z) > 1.0 - kNearEdgeRadius && std::min(d1, d2) <= kNearEdgeRadius)
    throw EdgeProximityError("volterra: z in the near-edge zone at ±1");
}

std::vector<Complex> powers_of(Complex z, long n_min, long n_max) {
  std::vector<Complex> p(static_cast<std::size_t>(n_max - n_min + 1));
  for (long n = n_min; n <= n_max; ++n) p[n - n_min] = std::pow(z, static_cast<double>(n));
  return p;
}

}  // namespace

std::vector<Complex> volterra_remainders_right(const JacobiOperator& op, Complex z,
                                               long n_lo, long n_hi) {
  check_remainder_z(z);
  if (n_hi < n_lo) throw std::invalid_argument("volterra: empty window");
  if (op.is_free())
    return std::vector<Complex>(static_cast<std::size_t>(n_hi - n_lo + 1), Complex(0.0));
  long s_hi = op.support_hi();
  // T̃_r(n,m;·) = 0 for m > s_hi + 1, and f_n^r = 0 for n >= s_hi. Always
  // substitute down from the support edge, then slice the requested window.
  long hi = std::max(n_hi, s_hi + 1);
  std::vector<Complex> f(static_cast<std::size_t>(hi - n_lo + 1), Complex(0.0));
  for (long n = std::min(s_hi - 1, hi); n >= n_lo; --n) {
    Complex acc(0.0);
    for (long m = n + 1; m <= s_hi + 1; ++m) {
      Complex t = scaled_kernel(op, Side::right, n, m, z);
      if (t == Complex(0.0)) continue;
      acc += t * (1.0 + f[m - n_lo]);
    }
    f[n - n_lo] = acc;
  }
  f.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
  return f;
}

std::vector<Complex> volterra_remainders_left(const JacobiOperator& op, Complex z,
                                              long n_lo, long n_hi) {
  check_remainder_z(z);
  if (n_hi < n_lo) throw std::invalid_argument("volterra: empty window");
  if (op.is_free())
    return std::vector<Complex>(static_cast<std::size_t>(n_hi - n_lo + 1), Complex(0.0));
  long s_lo = op.support_lo();
  // T̃_l(n,m;·) = 0 for m < s_lo, and f_n^l = 0 for n <= s_lo. Substitute
  // upward from the support edge, then slice the requested window.
  long lo = std::min(n_lo, s_lo);
  std::vector<Complex> f(static_cast<std::size_t>(n_hi - lo + 1), Complex(0.0));
  for (long n = std::max(s_lo + 1, lo); n <= n_hi; ++n) {
    Complex acc(0.0);
    for (long m = s_lo; m < n; ++m) {
      Complex t = scaled_kernel(op, Side::left, n, m, z);
      if (t == Complex(0.0)) continue;
      acc += t * (1.0 + f[m - lo]);
    }
    f[n - lo] = acc;
  }
  if (lo < n_lo) f.erase(f.begin(), f.begin() + (n_lo - lo));
  return f;
}

JostSolution solve_volterra_right(const JacobiOperator& op, const SpectralParameter& z,
                                  long margin) {
  long lo = op.is_free() ? 0 : op.support_lo();
  long hi = op.is_free() ? 0 : op.support_hi();
  long n_min = lo - margin, n_max = hi + margin;
  JostSolution sol{JostSide::plus, n_min, n_max, z,
                   powers_of(z.z(), n_min, n_max),
                   volterra_remainders_right(op, z.z(), n_min, n_max)};
  for (std::size_t i = 0; i < sol.values.size(); ++i)
    sol.values[i] *= 1.0 + sol.remainders[i];
  return sol;
}

JostSolution solve_volterra_left(const JacobiOperator& op, const SpectralParameter& z,
                                 long margin) {
  long lo = op.is_free() ? 0 : op.support_lo();
  long hi = op.is_free() ? 0 : op.support_hi();
  long n_min = lo - margin, n_max = hi + margin;
  std::vector<Complex> values = powers_of(1.0 / z.z(), n_min, n_max);
  JostSolution sol{JostSide::minus, n_min, n_max, z, std::move(values),
                   volterra_remainders_left(op, z.z(), n_min, n_max)};
  for (std::size_t i = 0; i < sol.values.size(); ++i)
    sol.values[i] *= 1.0 + sol.remainders[i];
  return sol;
}

std::vector<Complex> resolve_pass(const JacobiOperator& op, const JostSolution& jost) {
  std::vector<Complex> out(jost.remainders.size(), Complex(0.0));
  if (op.is_free()) return out;
  Complex z = jost.z.z();
  for (long n = jost.n_min; n <= jost.n_max; ++n) {
    Complex acc(0.0);
    if (jost.side == JostSide::plus) {
      for (long m = n + 1; m <= op.support_hi() + 1; ++m) {
        Complex fm = (m <= jost.n_max) ? jost.remainder(m) : Complex(0.0);
        acc += scaled_kernel(op, Side::right, n, m, z) * (1.0 + fm);
      }
    } else {
      for (long m = op.support_lo(); m < n; ++m) {
        Complex fm = (m >= jost.n_min) ? jost.remainder(m) : Complex(0.0);
        acc += scaled_kernel(op, Side::left, n, m, z) * (1.0 + fm);
      }
    }
    out[n - jost.n_min] = acc;
  }
  return out;
}

TransitionFactors::TransitionFactors(const JacobiOperator& op)
    : op_(&op), lo_(op.is_free() ? 0 : op.support_lo()) {
  std::size_t len = op.is_free() ? 0 : static_cast<std::size_t>(op.support_hi() - lo_ + 1);
  pa_.resize(len + 1);
  pc_.resize(len + 1);
  pa_[0] = pc_[0] = Complex(1.0);
  for (std::size_t i = 0; i < len; ++i) {
    pa_[i + 1] = pa_[i] * op.a(lo_ + static_cast<long>(i));
    pc_[i + 1] = pc_[i] * op.c(lo_ + static_cast<long>(i));
  }
}

Complex TransitionFactors::prefix_a(long n) const {
  long i = std::clamp(n - lo_, 0L, static_cast<long>(pa_.size()) - 1);
  return pa_[i];
}

Complex TransitionFactors::prefix_c(long n) const {
  long i = std::clamp(n - lo_, 0L, static_cast<long>(pc_.size()) - 1);
  return pc_[i];
}

Complex TransitionFactors::alpha(long n) const { return prefix_a(n); }

Complex TransitionFactors::gamma(long n) const { return 1.0 / prefix_c(n); }

Complex TransitionFactors::beta(long n) const {
  return op_->a(n) * prefix_c(n + 1) / prefix_a(n + 1);
}

std::vector<Complex> reconstruct_u(const JacobiOperator& op, const JostSolution& jost) {
  TransitionFactors tf(op);
  std::vector<Complex> u(jost.values.size());
  for (long n = jost.n_min; n <= jost.n_max; ++n) {
    if (jost.side == JostSide::plus)
      u[n - jost.n_min] = tf.alpha(n) / tf.product_a() * jost.value(n);
    else
      u[n - jost.n_min] = tf.gamma(n) * jost.value(n);
  }
  return u;
}

ResidualReport recurrence_residual(const JacobiOperator& op, long first_index,
                                   std::span<const Complex> seq, Complex z,
                                   Recurrence relation) {
  if (seq.size() < 3)
    throw std::invalid_argument("recurrence_residual: window must hold >= 3 points");
  Complex lambda = z + 1.0 / z;
  ResidualReport rep;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    long k = first_index + static_cast<long>(i);
    Complex left, mid = op.b(k) * seq[i], right;
    switch (relation) {
      case Recurrence::main:
        left = op.a(k - 1) * seq[i - 1];
        right = op.c(k) * seq[i + 1];
        break;
      case Recurrence::der:
        left = seq[i - 1];
        right = op.ac(k) * seq[i + 1];
        break;
      case Recurrence::del:
        left = op.ac(k - 1) * seq[i - 1];
        right = seq[i + 1];
        break;
    }
    double resid = std::abs(left + mid + right - lambda * seq[i]);
    double scale = std::abs(left) + std::abs(mid) + std::abs(right) +
                   std::abs(lambda * seq[i]);
    rep.max_abs = std::max(rep.max_abs, resid);
    rep.max_rel = std::max(rep.max_rel, resid / std::max(1.0, scale));
  }
  return rep;
}

}  // namespace jacspec
