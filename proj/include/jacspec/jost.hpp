// jost.hpp — Jost solutions of the three-term recurrences via the discrete
// Volterra equations in scaled variables:
//   f_n^r = g_n^r + Σ_{m>n} T̃_r(n,m;z) f_m^r,   v⁺_n = z^n (1 + f_n^r),
//   f_n^l = g_n^l + Σ_{m<n} T̃_l(n,m;z) f_m^l,   w⁻_n = z^{-n}(1 + f_n^l).
// The scaled kernels vanish outside the perturbation window, so the
// remainders are computed by exact back/forward substitution; no iteration.

#pragma once

#include <span>
#include <vector>

#include "jacspec/operator_model.hpp"

namespace jacspec {

enum class JostSide { plus, minus };  // v⁺ normalized at +∞, w⁻ at -∞

struct JostSolution {
  JostSide side;
  long n_min, n_max;
  SpectralParameter z;
  std::vector<Complex> values;      // v⁺_n or w⁻_n, n = n_min..n_max
  std::vector<Complex> remainders;  // f_n^r or f_n^l

  Complex value(long n) const { return values.at(static_cast<std::size_t>(n - n_min)); }
  Complex remainder(long n) const {
    return remainders.at(static_cast<std::size_t>(n - n_min));
  }
};

// Remainders f^r (resp. f^l) on [n_lo, n_hi]. Valid for any |z| < 1 away
// from ±1, including z = 0 (every remainder is a polynomial in z).
std::vector<Complex> volterra_remainders_right(const JacobiOperator& op, Complex z,
                                               long n_lo, long n_hi);
std::vector<Complex> volterra_remainders_left(const JacobiOperator& op, Complex z,
                                              long n_lo, long n_hi);

// Solves on [support_lo - margin, support_hi + margin] ([-margin, margin]
// for the free operator).
JostSolution solve_volterra_right(const JacobiOperator& op, const SpectralParameter& z,
                                  long margin = 5);
JostSolution solve_volterra_left(const JacobiOperator& op, const SpectralParameter& z,
                                 long margin = 5);

// One more substitution sweep through the Volterra equation, reusing the
// solved remainders on the right-hand side. Exact substitution is a fixed
// point, so this must reproduce the input to roundoff.
std::vector<Complex> resolve_pass(const JacobiOperator& op, const JostSolution& jost);

// Finite products of the off-diagonal entries:
//   α_n = Π_{j<n} a_j,  γ_n = Π_{j<n} c_j^{-1},  β_n = a_n Π_{j<=n} (c_j/a_j).
// β_n is the weight that makes the Wronskian independent of n.
class TransitionFactors {
 public:
  explicit TransitionFactors(const JacobiOperator& op);

  Complex alpha(long n) const;
  Complex gamma(long n) const;
  Complex beta(long n) const;
  Complex product_a() const { return pa_.back(); }
  Complex product_c() const { return pc_.back(); }

 private:
  Complex prefix_a(long n) const;  // Π_{j<n} a_j
  Complex prefix_c(long n) const;  // Π_{j<n} c_j
  const JacobiOperator* op_;
  long lo_;
  std::vector<Complex> pa_, pc_;  // pa_[i] = Π_{j<lo_+i} a_j
};

// u⁺_n = (Π_{j>=n} a_j^{-1}) v⁺_n resp. u⁻_n = (Π_{j<n} c_j^{-1}) w⁻_n,
// turning the Jost solutions of the companion recurrences into Jost
// solutions of the main one. Products truncate to the support window.
std::vector<Complex> reconstruct_u(const JacobiOperator& op, const JostSolution& jost);

enum class Recurrence {
  main,  // a_{k-1}u_{k-1} + b_k u_k + c_k u_{k+1} = λ u_k
  der,   // u_{k-1} + b_k u_k + a_k c_k u_{k+1} = λ u_k
  del,   // a_{k-1}c_{k-1} u_{k-1} + b_k u_k + u_{k+1} = λ u_k
};

struct ResidualReport {
  double max_abs = 0.0;
  double max_rel = 0.0;  // residual over the magnitude of the terms involved
};

// Max residual of the selected three-term relation over interior indices of
// the sequence (seq[i] is the value at first_index + i). λ = z + 1/z.
ResidualReport recurrence_residual(const JacobiOperator& op, long first_index,
                                   std::span<const Complex> seq, Complex z,
                                   Recurrence relation);

}  // namespace jacspec
