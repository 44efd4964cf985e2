#include "jacspec/operator_model.hpp"

#include <algorithm>
#include <cmath>

namespace jacspec {

namespace {

bool is_free_column(Complex a, Complex b, Complex c) {
  return a == Complex(1.0) && b == Complex(0.0) && c == Complex(1.0);
}

}  // namespace

JacobiOperator::JacobiOperator(long support_lo, std::vector<Complex> a,
                               std::vector<Complex> b, std::vector<Complex> c)
    : lo_(support_lo), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.size() != b_.size() || b_.size() != c_.size())
    throw std::invalid_argument("JacobiOperator: a, b, c must have equal lengths");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] == Complex(0.0) || c_[i] == Complex(0.0))
      throw std::invalid_argument("JacobiOperator: a_j c_j must be nonzero (index " +
                                  std::to_string(lo_ + static_cast<long>(i)) + ")");
  }
  // Keep the window minimal.
  std::size_t head = 0;
  while (head < a_.size() && is_free_column(a_[head], b_[head], c_[head])) ++head;
  std::size_t tail = a_.size();
  while (tail > head && is_free_column(a_[tail - 1], b_[tail - 1], c_[tail - 1])) --tail;
  if (head > 0 || tail < a_.size()) {
    lo_ += static_cast<long>(head);
    a_ = std::vector<Complex>(a_.begin() + head, a_.begin() + tail);
    b_ = std::vector<Complex>(b_.begin() + head, b_.begin() + tail);
    c_ = std::vector<Complex>(c_.begin() + head, c_.begin() + tail);
  }
  if (a_.empty()) lo_ = 0;
}

JacobiOperator JacobiOperator::single_site(Complex b, long site) {
  return JacobiOperator(site, {Complex(1.0)}, {b}, {Complex(1.0)});
}

JacobiOperator JacobiOperator::schroedinger(long support_lo, std::vector<Complex> b) {
  std::vector<Complex> ones(b.size(), Complex(1.0));
  return JacobiOperator(support_lo, ones, std::move(b), ones);
}

bool JacobiOperator::is_schrodinger() const {
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != Complex(1.0) || c_[i] != Complex(1.0)) return false;
  return true;
}

JacobiOperator JacobiOperator::gauge_transformed(long r_lo,
                                                 const std::vector<Complex>& r) const {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] == Complex(0.0))
      throw std::invalid_argument("gauge_transformed: r_j must be nonzero");
  if (r.empty()) return *this;
  long r_hi = r_lo + static_cast<long>(r.size()) - 1;
  long lo = is_free() ? r_lo : std::min(support_lo(), r_lo);
  long hi = is_free() ? r_hi : std::max(support_hi(), r_hi);
  std::vector<Complex> na, nb, nc;
  for (long j = lo; j <= hi; ++j) {
    Complex rj = (j >= r_lo && j <= r_hi) ? r[j - r_lo] : Complex(1.0);
    na.push_back(a(j) * rj);
    nb.push_back(b(j));
    nc.push_back(c(j) / rj);
  }
  return JacobiOperator(lo, std::move(na), std::move(nb), std::move(nc));
}

PerturbationGauge compute_gauge(const JacobiOperator& op) {
  PerturbationGauge g;
  if (op.is_free()) return g;
  long lo = op.support_lo(), hi = op.support_hi();
  // δ^r_m involves a_{m-1}c_{m-1}, so its support extends one step past hi.
  g.lo_ = lo;
  g.dr_.resize(hi - lo + 2, 0.0);
  g.dl_.resize(hi - lo + 1, 0.0);
  for (long m = lo; m <= hi + 1; ++m)
    g.dr_[m - lo] = std::abs(op.b(m)) + std::abs(1.0 - op.ac(m - 1));
  for (long m = lo; m <= hi; ++m) {
    double dl = std::abs(op.b(m)) + std::abs(1.0 - op.ac(m));
    g.dl_[m - lo] = dl;
    g.delta_total_ += dl;
    g.proxy_ += std::abs(1.0 - op.a(m)) + std::abs(op.b(m)) + std::abs(1.0 - op.c(m));
  }
  return g;
}

double PerturbationGauge::tail_right(long n) const {
  double s = 0.0;
  for (long m = std::max(n + 1, lo_); m < lo_ + static_cast<long>(dr_.size()); ++m)
    s += dr_[m - lo_];
  return s;
}

double PerturbationGauge::tail_left(long n) const {
  double s = 0.0;
  for (long m = lo_; m < std::min(n, lo_ + static_cast<long>(dl_.size())); ++m)
    s += dl_[m - lo_];
  return s;
}

void check_spectral_z(Complex z) {
  if (z == Complex(0.0))
    throw std::invalid_argument("spectral parameter z must be nonzero");
  double az = std::abs(z);
  if (az >= 1.0)
    throw std::invalid_argument("spectral parameter z must lie in the open unit disk");
  double d1 = std::abs(z - 1.0), d2 = std::abs(z + 1.0);
  if (d1 <= kTolEdge || d2 <= kTolEdge)
    throw EdgeProximityError("spectral parameter z too close to ±1");
  if (az > 1.0 - kNearEdgeRadius && std::min(d1, d2) <= kNearEdgeRadius)
    throw EdgeProximityError("spectral parameter z in the near-edge zone at ±1");
}

SpectralParameter::SpectralParameter(Complex z) : z_(z) {
  check_spectral_z(z);
  lambda_ = z + 1.0 / z;
  omega_ = omega_of(z);
}

SpectralParameter SpectralParameter::from_lambda(Complex lambda) {
  return SpectralParameter(zhukovsky_inverse(lambda));
}

Complex zhukovsky_inverse(Complex lambda) {
  if (dist_to_band(lambda) <= kTolEdge)
    throw EdgeProximityError("lambda too close to the band [-2,2]");
  // Roots of z² - λz + 1 multiply to 1; take the larger one first to avoid
  // cancellation, then invert.
  Complex s = std::sqrt(lambda * lambda - 4.0);
  Complex big = (std::abs(lambda + s) >= std::abs(lambda - s)) ? (lambda + s) / 2.0
                                                               : (lambda - s) / 2.0;
  return 1.0 / big;
}

double dist_to_band(Complex lambda) {
  double re = lambda.real(), im = lambda.imag();
  if (std::abs(re) <= 2.0) return std::abs(im);
  return std::hypot(std::abs(re) - 2.0, im);
}

}  // namespace jacspec
