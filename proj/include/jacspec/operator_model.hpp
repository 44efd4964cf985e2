// operator_model.hpp — whole-line Jacobi matrices J({a_j},{b_j},{c_j}) with a
// finitely supported deviation from the free operator J0 = J({1},{0},{1}),
// their perturbation-size functionals, and the conformal geometry of the
// resolvent set (Zhukovsky map, distance to the band [-2,2]).

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacspec {

using Complex = std::complex<double>;

// Exclusion tolerance around the band [-2,2] and around z = ±1, where the
// kernel bounds blow up (ω(z) = 2z/(1-z²) has poles at ±1).
inline constexpr double kTolEdge = 1e-12;

// Solver-side rejection radius around z = ±1 for points with |z| > 1 - 1e-6.
inline constexpr double kNearEdgeRadius = 1e-6;

// A spectral parameter too close to [-2,2] (resp. z too close to ±1).
class EdgeProximityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Whole-line Jacobi matrix acting on two-sided sequences by
//   (J u)_k = a_{k-1} u_{k-1} + b_k u_k + c_k u_{k+1},
// equal to the free operator outside a finite window: a_j = c_j = 1, b_j = 0
// for j outside [support_lo, support_hi]. The stored window is minimal; free
// rows at either end are trimmed on construction. Requires a_j c_j != 0.
class JacobiOperator {
 public:
  // The free operator J0 (empty window).
  JacobiOperator() = default;

  JacobiOperator(long support_lo, std::vector<Complex> a, std::vector<Complex> b,
                 std::vector<Complex> c);

  static JacobiOperator single_site(Complex b, long site = 0);
  // Discrete Schrödinger operator: a = c = 1, diagonal b on the given window.
  static JacobiOperator schroedinger(long support_lo, std::vector<Complex> b);

  bool is_free() const { return a_.empty(); }
  // a = c = 1 on the stored window (then trace_norm_proxy = Σ|b| = ‖J-J0‖₁).
  bool is_schrodinger() const;

  // Window [support_lo, support_hi]; empty window is [0, -1].
  long support_lo() const { return lo_; }
  long support_hi() const { return lo_ + static_cast<long>(a_.size()) - 1; }

  Complex a(long j) const { return in_window(j) ? a_[j - lo_] : Complex(1.0); }
  Complex b(long j) const { return in_window(j) ? b_[j - lo_] : Complex(0.0); }
  Complex c(long j) const { return in_window(j) ? c_[j - lo_] : Complex(1.0); }
  Complex ac(long j) const { return a(j) * c(j); }

  // Diagonal similarity: â_j = a_j r_j, ĉ_j = c_j / r_j, b̂_j = b_j, with
  // r_j = 1 outside [r_lo, r_lo + r.size()). Requires all r_j != 0.
  JacobiOperator gauge_transformed(long r_lo, const std::vector<Complex>& r) const;

  bool operator==(const JacobiOperator&) const = default;

 private:
  bool in_window(long j) const { return j >= lo_ && j < lo_ + static_cast<long>(a_.size()); }

  long lo_ = 0;
  std::vector<Complex> a_, b_, c_;
};

// Perturbation gauge functionals of the operator:
//   δ_m^r = |b_m| + |1 - a_{m-1} c_{m-1}|,   δ_m^l = |b_m| + |1 - a_m c_m|,
//   Δ     = Σ_m (|b_m| + |1 - a_m c_m|)  (equals Σ δ^r = Σ δ^l),
//   Δ_n^r = Σ_{m>n} δ_m^r,  Δ_n^l = Σ_{m<n} δ_m^l,
// and the trace-norm proxy Σ_m (|1-a_m| + |b_m| + |1-c_m|), which dominates
// ‖J-J0‖₁ and coincides with it in the Schrödinger case.
class PerturbationGauge {
 public:
  double delta_total() const { return delta_total_; }
  double trace_norm_proxy() const { return proxy_; }

  double delta_r(long m) const { return at(dr_, m); }
  double delta_l(long m) const { return at(dl_, m); }

  // Tails Δ_n^r and Δ_n^l, finite sums over the stored window.
  double tail_right(long n) const;
  double tail_left(long n) const;

 private:
  double at(const std::vector<double>& v, long m) const {
    long i = m - lo_;
    return (i >= 0 && i < static_cast<long>(v.size())) ? v[i] : 0.0;
  }

  long lo_ = 0;
  std::vector<double> dr_, dl_;  // δ^r, δ^l on [lo_, lo_ + size)
  double delta_total_ = 0.0;
  double proxy_ = 0.0;

  friend PerturbationGauge compute_gauge(const JacobiOperator& op);
};

PerturbationGauge compute_gauge(const JacobiOperator& op);

// Rejects z outside the admissible set: 0 < |z| < 1, |z ∓ 1| > kTolEdge, and
// not within kNearEdgeRadius of ±1 when |z| > 1 - kNearEdgeRadius.
void check_spectral_z(Complex z);

// ω(z) = 2z / (1 - z²).
inline Complex omega_of(Complex z) { return 2.0 * z / (1.0 - z * z); }

// A point of the punctured disk together with its Zhukovsky image
// λ = z + 1/z and the weight ω = 2z/(1-z²).
class SpectralParameter {
 public:
  explicit SpectralParameter(Complex z);

  // Inverse construction from λ outside [-2,2].
  static SpectralParameter from_lambda(Complex lambda);

  Complex z() const { return z_; }
  Complex lambda() const { return lambda_; }
  Complex omega() const { return omega_; }

 private:
  Complex z_, lambda_, omega_;
};

// The unique root of z² - λz + 1 = 0 with |z| < 1, i.e. the preimage of λ
// under the Zhukovsky map z + 1/z. Rejects λ within kTolEdge of [-2,2].
Complex zhukovsky_inverse(Complex lambda);

// Euclidean distance from λ to the segment [-2,2].
double dist_to_band(Complex lambda);

}  // namespace jacspec
