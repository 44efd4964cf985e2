// determinant.hpp — the perturbation determinant via two independent routes:
// the Wronskian of the Jost solutions,
//   U(z) = (ω(z)/2) (v⁺₀ w⁻₁ - a₀c₀ v⁺₁ w⁻₀),   U(0) = 1,
// and the finite resolvent-determinant oracle
//   L(λ,J) = det(I + (J-J0)(J0-λ)^{-1})
// restricted to the rows/columns where J-J0 acts. Bound audits check
//   |U(z)-1| <= (4x+5x²)e^{4x},  |U(z)| <= e^{8x},
//   log|U(z)| <= (16|z|/|1-z²|)(Δ^{1/2}+Δ),
// with x = |ω(z)|(Δ^{1/2}+Δ).

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jacspec/operator_model.hpp"

namespace jacspec {

// Margins are RHS - LHS; nonnegative means the bound holds. Saturated at
// ±kMarginSaturation when the exponential right side overflows a double.
inline constexpr double kMarginSaturation = 1e300;

struct BoundMargins {
  double x = 0.0;         // |ω(z)| (Δ^{1/2} + Δ)
  double perdet = 0.0;    // (4x+5x²)e^{4x} - |U-1|
  double expbound = 0.0;  // e^{8x} - |U|
  double log_bound = 0.0; // 8x - log|U|
  double worst() const;
};

struct DeterminantEvaluation {
  Complex z;
  Complex u_value;
  std::optional<Complex> oracle_value;
  double bound_x = 0.0;
  BoundMargins margins;
};

// Wronskian W(u⁺,u⁻) = β_n (u⁺_n u⁻_{n+1} - u⁺_{n+1} u⁻_n), evaluated at
// n = 0 by default; constant in n.
Complex wronskian(const JacobiOperator& op, const SpectralParameter& z);
Complex wronskian_at(const JacobiOperator& op, const SpectralParameter& z, long n);

// U(z) from the product-free display, evaluated through the Volterra
// remainders as
//   U(z) = [(1+f₀ʳ)(1+f₁ˡ) - a₀c₀ z² (1+f₁ʳ)(1+f₀ˡ)] / (1 - z²),
// a rational function of z that is regular at 0 with U(0) = 1. Requires
// |z| < 1 away from ±1.
Complex determinant_u(const JacobiOperator& op, Complex z);

// Same rational function without the unit-disk restriction, for contour
// work around the disk boundary. Still rejects z within kTolEdge of ±1.
Complex determinant_u_extended(const JacobiOperator& op, Complex z);

// Resolvent-determinant oracle at λ = z + 1/z outside [-2,2]: the free
// resolvent kernel is R0(n,m) = z^{|n-m|}/(z - 1/z); the determinant of
// I + (J-J0) R0 over the support window padded by one is computed by
// partially pivoted LU.
Complex determinant_oracle(const JacobiOperator& op, Complex lambda);

BoundMargins bound_margins(Complex z, Complex u, double delta_total);

// One evaluation per grid point; oracle route filled on request.
std::vector<DeterminantEvaluation> audit_bounds(const JacobiOperator& op,
                                                std::span<const Complex> z_grid,
                                                bool with_oracle = false);

// Polar grid with half-step angular offset, keeping every point clear of
// the real axis (and hence of ±1). n_r radii in [r_min, r_max], inclusive.
std::vector<Complex> polar_grid(int n_r, int n_theta, double r_min, double r_max);

}  // namespace jacspec
