// spectrum.hpp — localization of the zeros of U in the punctured disk (the
// discrete spectrum of J with algebraic multiplicities) by argument-principle
// rectangle subdivision, plus a finite-section dense eigensolver as an
// independent oracle, and the diagonal-similarity (gauge) spectrum check.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jacspec/operator_model.hpp"

namespace jacspec {

struct SpectralPoint {
  Complex z;         // zero of U, |z| < 1
  int multiplicity;  // winding number of the separating contour
  Complex lambda;    // Zhukovsky image z + 1/z
  double residual;   // |U| at the refined point
};

struct UnresolvedRegion {
  Complex center;
  double half_width;
  int winding;  // 0 when unknown
  std::string reason;
};

struct ZeroSearchConfig {
  double r_min = 1e-3;          // inner radius of the search annulus
  double r_max = 1.0 - 1e-4;    // outer radius; zeros beyond are near-boundary
  double coarse_box = 1e-4;     // switch from subdivision to Newton polish
  double min_box = 1e-8;        // subdivision floor for clustered zeros
  double newton_tol = 1e-11;
  int max_depth = 60;
  int max_contour_samples = 1 << 15;
};

struct ZeroSearchResult {
  std::vector<SpectralPoint> zeros;  // sorted by (Re λ, Im λ)
  std::vector<UnresolvedRegion> unresolved;
  int annulus_winding = 0;      // winding over |z| = r_max minus |z| = r_min
  bool annulus_winding_ok = false;
  int multiplicity_total() const;
};

using AnalyticFn = std::function<Complex(Complex)>;

// Zeros of an analytic function inside the annulus, with multiplicities.
ZeroSearchResult find_zeros_of(const AnalyticFn& f, const ZeroSearchConfig& cfg = {});

// Zeros of z ↦ U(z) for the operator; their Zhukovsky images are the
// discrete spectrum with algebraic multiplicity.
ZeroSearchResult find_zeros(const JacobiOperator& op, const ZeroSearchConfig& cfg = {});

struct FiniteSectionResult {
  long half_width;  // N: truncation to indices [-N, N]
  std::vector<Complex> eigenvalues;  // all 2N+1, sorted by (Re, Im)
  struct Match {
    Complex point_lambda;    // the SpectralPoint's λ
    Complex section_lambda;  // nearest truncation eigenvalue
    double distance;
  };
  std::vector<Match> matches;  // one per input point, in input order
};

// Eigenvalues of the plain (2N+1)×(2N+1) cut-off of J on [-N, N] via a dense
// non-Hermitian solver; each given point is matched to its nearest
// truncation eigenvalue. Requires N >= support radius + 10.
FiniteSectionResult finite_section_eigenvalues(const JacobiOperator& op, long N,
                                               const std::vector<SpectralPoint>& points = {});

struct SimilarityReport {
  std::vector<SpectralPoint> base_zeros;
  std::vector<SpectralPoint> transformed_zeros;
  double max_pairing_distance;  // inf when the zero divisors differ in shape
  bool zero_sets_match;         // within tolerance, multiplicities included
};

// Builds Ĵ = J({a_j r_j},{b_j},{c_j r_j^{-1}}) and checks σ_d(Ĵ) = σ_d(J).
SimilarityReport similarity_check(const JacobiOperator& op, long r_lo,
                                  const std::vector<Complex>& r,
                                  const ZeroSearchConfig& cfg = {},
                                  double tolerance = 1e-8);

}  // namespace jacspec
