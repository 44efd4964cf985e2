#include "jacspec/inequalities.hpp"

#include <cmath>
#include <limits>

namespace jacspec {

namespace {

constexpr double kOvalSlack = 1e-9;

double oval_ratio(double numer, double denom) {
  if (denom > 0.0) return numer / denom;
  if (numer > 0.0) return std::numeric_limits<double>::infinity();
  return 0.0;
}

}  // namespace

double kappa() {
  static const double root = [] {
    auto f = [](double x) { return (4.0 * x + 5.0 * x * x) * std::exp(4.0 * x); };
    double lo = 0.0, hi = 1.0;  // f(0) = 0 < 1 < 9e^4 = f(1)
    while (hi - lo > 1e-12) {
      double mid = 0.5 * (lo + hi);
      (f(mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

LtSums lt_sums(std::span<const SpectralPoint> points, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("lt_sums: epsilon must lie in (0,1)");
  LtSums sums;
  for (const auto& p : points) {
    double dist = dist_to_band(p.lambda);
    if (dist <= 0.0)
      throw std::invalid_argument("lt_sums: eigenvalue on the band [-2,2]");
    double mod = std::abs(p.lambda * p.lambda - 4.0);
    double mult = static_cast<double>(p.multiplicity);
    sums.main_sum += mult * dist / std::pow(mod, (1.0 - epsilon) / 2.0);
    sums.hk_sum += mult * std::pow(dist, 1.0 + epsilon) /
                   std::pow(mod, 0.5 + epsilon / 4.0);
  }
  return sums;
}

EnclosureRadii enclosure_radii(const PerturbationGauge& gauge, bool schrodinger) {
  EnclosureRadii radii;
  double size = std::sqrt(gauge.delta_total()) + gauge.delta_total();
  double base = 2.0 * size / kappa();
  radii.cassini = base * base;
  double proxy = gauge.trace_norm_proxy();
  radii.birman_schwinger = 324.0 * proxy * proxy;
  if (schrodinger) radii.schrodinger_sharp = proxy * proxy;
  return radii;
}

InequalityReport analyze_operator(const std::string& label, const JacobiOperator& op,
                                  double epsilon, const ZeroSearchConfig& cfg,
                                  const std::vector<SpectralPoint>* zeros) {
  InequalityReport report;
  report.label = label;
  report.epsilon = epsilon;
  report.schrodinger = op.is_schrodinger();

  PerturbationGauge gauge = compute_gauge(op);
  report.delta = gauge.delta_total();
  report.trace_norm_proxy = gauge.trace_norm_proxy();
  report.radii = enclosure_radii(gauge, report.schrodinger);

  std::vector<SpectralPoint> found;
  if (zeros == nullptr) {
    found = find_zeros(op, cfg).zeros;
    zeros = &found;
  }
  report.sums = lt_sums(*zeros, epsilon);
  report.ratio_main = oval_ratio(report.sums.main_sum, report.delta);
  report.ratio_hk = oval_ratio(report.sums.hk_sum, report.trace_norm_proxy);

  for (const auto& p : *zeros) {
    OvalMembership m;
    m.lambda = p.lambda;
    m.multiplicity = p.multiplicity;
    m.lambda_sq_minus_4 = std::abs(p.lambda * p.lambda - 4.0);
    m.in_cassini = m.lambda_sq_minus_4 <= report.radii.cassini + kOvalSlack;
    m.in_birman_schwinger =
        m.lambda_sq_minus_4 <= report.radii.birman_schwinger + kOvalSlack;
    if (report.radii.schrodinger_sharp)
      m.in_sharp = m.lambda_sq_minus_4 <= *report.radii.schrodinger_sharp + kOvalSlack;
    // The Cassini oval is required always; the sharp oval is required in the
    // Schrödinger case. Birman-Schwinger with the proxy is informational for
    // general operators.
    if (!m.in_cassini || (m.in_sharp && !*m.in_sharp)) report.violation = true;
    report.memberships.push_back(m);
  }
  return report;
}

std::vector<InequalityReport> family_sweep(std::span<const FamilyMember> family,
                                           std::span<const double> epsilons,
                                           const ZeroSearchConfig& cfg) {
  std::vector<InequalityReport> reports;
  for (const auto& member : family) {
    std::vector<SpectralPoint> zeros;
    bool have_zeros = false;
    std::string zero_error;
    try {
      zeros = find_zeros(member.op, cfg).zeros;
      have_zeros = true;
    } catch (const std::exception& e) {
      zero_error = e.what();
    }
    for (double eps : epsilons) {
      if (!have_zeros) {
        InequalityReport rep;
        rep.label = member.label;
        rep.epsilon = eps;
        rep.error = zero_error;
        reports.push_back(std::move(rep));
        continue;
      }
      try {
        reports.push_back(analyze_operator(member.label, member.op, eps, cfg, &zeros));
      } catch (const std::exception& e) {
        InequalityReport rep;
        rep.label = member.label;
        rep.epsilon = eps;
        rep.error = e.what();
        reports.push_back(std::move(rep));
      }
    }
  }
  return reports;
}

std::vector<double> default_epsilons() { return {0.05, 0.1, 0.25, 0.5, 0.75, 0.9}; }

}  // namespace jacspec
