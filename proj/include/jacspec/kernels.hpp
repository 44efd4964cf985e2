// kernels.hpp — lattice Green kernels of the free operator, the transition
// kernels driving the discrete Volterra equations, and their scaled
// (polynomial) forms:
//   G_r(n,m;z) = (z^{m-n} - z^{n-m}) / (z - 1/z)  for m >= n, 0 otherwise,
//   G_l(n,m;z) = G_r(m,n;z),
//   T_r(n,m;z) = -b_m G_r(n,m;z) + (1 - a_{m-1}c_{m-1}) G_r(n,m-1;z),
//   T_l(n,m;z) = -b_m G_l(n,m;z) + (1 - a_m c_m) G_l(n,m+1;z),
//   T̃_r = T_r z^{m-n},  T̃_l = T_l z^{n-m}   (polynomials in z).

#pragma once

#include "jacspec/operator_model.hpp"

namespace jacspec {

enum class Side { right, left };

struct KernelEvaluation {
  Side side;
  long n, m;
  Complex z;
  Complex value;
};

// z^k G_r(n, n+k; z) = z + z³ + ... + z^{2k-1}; zero for k <= 0. Polynomial
// form with nonnegative powers only, stable up to and including |z| = 1.
Complex scaled_green_sum(long k, Complex z);

Complex green_r(long n, long m, Complex z);
Complex green_l(long n, long m, Complex z);

Complex transition_kernel(const JacobiOperator& op, Side side, long n, long m, Complex z);

// T̃_r(n,m;z) resp. T̃_l(n,m;z), evaluated without negative powers of z.
Complex scaled_kernel(const JacobiOperator& op, Side side, long n, long m, Complex z);

}  // namespace jacspec
