// inequalities.hpp — Lieb-Thirring eigenvalue sums, the spectral-enclosure
// Cassini ovals, and the constant κ, assembled into per-operator audit
// reports and family sweeps:
//   main sum:  Σ dist(λ,[-2,2]) / |λ²-4|^{(1-ε)/2}
//   HK sum:    Σ dist(λ,[-2,2])^{1+ε} / |λ²-4|^{1/2+ε/4}
//   ovals:     |λ²-4| <= (2(Δ^{1/2}+Δ)/κ)²,  324‖J-J0‖₁²,  ‖J-J0‖₁²
// (the last one for discrete Schrödinger operators only, where the
// trace-norm proxy is the exact trace norm). The proportionality constants
// C(ε) are never asserted; the sweeps report the observed ratios instead.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jacspec/operator_model.hpp"
#include "jacspec/spectrum.hpp"

namespace jacspec {

// Unique positive root of (4x+5x²)e^{4x} = 1, by bisection on [0,1] to
// 1e-12; the left side is strictly increasing. κ ≈ 0.129.
double kappa();

struct LtSums {
  double main_sum = 0.0;  // exponent (1-ε)/2 on |λ²-4|
  double hk_sum = 0.0;    // dist^{1+ε}, exponent 1/2+ε/4
};

// Sums with multiplicity over the given points; requires ε ∈ (0,1) and all
// λ off the band.
LtSums lt_sums(std::span<const SpectralPoint> points, double epsilon);

struct EnclosureRadii {
  double cassini = 0.0;           // (2(Δ^{1/2}+Δ)/κ)²
  double birman_schwinger = 0.0;  // 324 · proxy²
  std::optional<double> schrodinger_sharp;  // proxy², Schrödinger case only
};

EnclosureRadii enclosure_radii(const PerturbationGauge& gauge, bool schrodinger);

struct OvalMembership {
  Complex lambda;
  int multiplicity;
  double lambda_sq_minus_4;  // |λ²-4|
  bool in_cassini;
  bool in_birman_schwinger;          // informational for general operators
  std::optional<bool> in_sharp;      // Schrödinger case only
};

struct InequalityReport {
  std::string label;
  double epsilon = 0.0;
  double delta = 0.0;
  double trace_norm_proxy = 0.0;
  LtSums sums;
  double ratio_main = 0.0;  // main_sum / Δ; +inf when Δ = 0 < main_sum
  double ratio_hk = 0.0;    // hk_sum / proxy, same convention
  EnclosureRadii radii;
  std::vector<OvalMembership> memberships;
  bool schrodinger = false;
  bool violation = false;  // a required oval membership failed
  std::string error;       // nonempty when the pipeline failed for this member
};

// Full pipeline for one operator at one ε; zeros may be passed in when
// already computed (they do not depend on ε).
InequalityReport analyze_operator(const std::string& label, const JacobiOperator& op,
                                  double epsilon, const ZeroSearchConfig& cfg = {},
                                  const std::vector<SpectralPoint>* zeros = nullptr);

struct FamilyMember {
  std::string label;
  JacobiOperator op;
};

// One report per member × ε, members in family order. A member whose
// pipeline throws contributes error rows instead of aborting the sweep.
std::vector<InequalityReport> family_sweep(std::span<const FamilyMember> family,
                                           std::span<const double> epsilons,
                                           const ZeroSearchConfig& cfg = {});

// Default ε grid for reports.
std::vector<double> default_epsilons();

}  // namespace jacspec
