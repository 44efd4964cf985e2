#include "jacspec/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "jacspec/determinant.hpp"

namespace jacspec {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Magnitudes below this on a contour mean the contour runs through a zero;
// the caller re-routes instead of unwrapping garbage.
constexpr double kContourFloor = 1e-280;

struct Box {
  double x0, y0, x1, y1;
  Complex center() const { return {(x0 + x1) / 2.0, (y0 + y1) / 2.0}; }
  double width() const { return x1 - x0; }
  double diameter() const { return std::hypot(x1 - x0, y1 - y0); }
  bool contains(Complex z, double slack) const {
    return z.real() >= x0 - slack && z.real() <= x1 + slack && z.imag() >= y0 - slack &&
           z.imag() <= y1 + slack;
  }
};

// Winding number of f along a closed path, by adaptive trapezoid of the
// argument increment: sampling doubles until every step is below π/2 and the
// total lands within 0.1 rad of the same multiple of 2π on two consecutive
// levels. Returns nullopt when the path runs through a zero or the sampling
// budget is exhausted.
std::optional<int> path_winding(const AnalyticFn& f,
                                const std::function<Complex(double)>& path,
                                int max_samples) {
  int n = 64;
  std::vector<Complex> vals(n);
  for (int k = 0; k < n; ++k) {
    vals[k] = f(path(k / static_cast<double>(n)));
    if (!(std::abs(vals[k]) > kContourFloor) || !std::isfinite(std::abs(vals[k])))
      return std::nullopt;
  }
  constexpr int kNoLevel = std::numeric_limits<int>::min();
  int prev = kNoLevel;
  while (true) {
    bool smooth = true;
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      double step = std::arg(vals[(k + 1) % n] / vals[k]);
      if (std::abs(step) > kPi / 2.0) {
        smooth = false;
        break;
      }
      total += step;
    }
    if (smooth) {
      int w = static_cast<int>(std::lround(total / (2.0 * kPi)));
      if (std::abs(total - 2.0 * kPi * w) < 0.1) {
        if (w == prev) return w;
        prev = w;
      } else {
        prev = kNoLevel;
      }
    } else {
      prev = kNoLevel;
    }
    if (2 * n > max_samples) return std::nullopt;
    std::vector<Complex> refined(2 * n);
    for (int k = 0; k < n; ++k) {
      refined[2 * k] = vals[k];
      Complex v = f(path((2 * k + 1) / (2.0 * n)));
      if (!(std::abs(v) > kContourFloor) || !std::isfinite(std::abs(v)))
        return std::nullopt;
      refined[2 * k + 1] = v;
    }
    vals = std::move(refined);
    n *= 2;
  }
}

std::optional<int> box_winding(const AnalyticFn& f, const Box& b, int max_samples) {
  auto path = [&b](double t) -> Complex {
    double s = 4.0 * t;
    int side = static_cast<int>(s);
    double frac = s - side;
    switch (side) {
      case 0: return {b.x0 + frac * (b.x1 - b.x0), b.y0};
      case 1: return {b.x1, b.y0 + frac * (b.y1 - b.y0)};
      case 2: return {b.x1 - frac * (b.x1 - b.x0), b.y1};
      default: return {b.x0, b.y1 - frac * (b.y1 - b.y0)};
    }
  };
  return path_winding(f, path, max_samples);
}

std::optional<int> circle_winding(const AnalyticFn& f, double radius, int max_samples) {
  auto path = [radius](double t) -> Complex {
    return std::polar(radius, 2.0 * kPi * t);
  };
  return path_winding(f, path, max_samples);
}

// Newton iteration z -> z - m f/f' with numerically differentiated f'
// (central difference, step 1e-6 (1+|z|)); the multiplicity factor restores
// quadratic convergence at an m-fold zero.
Complex newton_polish(const AnalyticFn& f, Complex z, int multiplicity, double tol,
                      bool* converged) {
  *converged = false;
  for (int it = 0; it < 80; ++it) {
    double h = 1e-6 * (1.0 + std::abs(z));
    Complex fz = f(z);
    Complex d = (f(z + h) - f(z - h)) / (2.0 * h);
    if (d == Complex(0.0)) break;
    Complex step = static_cast<double>(multiplicity) * fz / d;
    z -= step;
    if (std::abs(step) <= tol * (1.0 + std::abs(z))) {
      *converged = true;
      break;
    }
  }
  return z;
}

struct SearchState {
  const AnalyticFn* f;
  const ZeroSearchConfig* cfg;
  std::vector<SpectralPoint> zeros;
  std::vector<UnresolvedRegion> unresolved;
};

void classify_zero(SearchState& st, Complex z, int multiplicity, const Box& b) {
  double r = std::abs(z);
  if (r >= st.cfg->r_min && r <= st.cfg->r_max) {
    double residual = std::abs((*st.f)(z));
    Complex lambda = z + 1.0 / z;
    st.zeros.push_back({z, multiplicity, lambda, residual});
  } else if (r > st.cfg->r_max && r <= 1.25) {
    st.unresolved.push_back({z, b.width() / 2.0, multiplicity,
                             "near-boundary zero (|z| > r_max), not refined"});
  } else if (r < st.cfg->r_min) {
    st.unresolved.push_back({z, b.width() / 2.0, multiplicity,
                             "zero inside the inner radius r_min"});
  }
  // |z| well beyond the unit circle: continuation artifact, not spectrum.
}

void process_box(SearchState& st, const Box& b, int winding, int depth);

// Splits with the given fraction and recurses; fails when a child winding
// does not stabilize or the children do not account for the parent.
bool try_split(SearchState& st, const Box& b, int winding, int depth, double fx,
               double fy) {
  double mx = b.x0 + fx * (b.x1 - b.x0);
  double my = b.y0 + fy * (b.y1 - b.y0);
  Box kids[4] = {{b.x0, b.y0, mx, my},
                 {mx, b.y0, b.x1, my},
                 {b.x0, my, mx, b.y1},
                 {mx, my, b.x1, b.y1}};
  int w[4];
  int sum = 0;
  for (int i = 0; i < 4; ++i) {
    auto wi = box_winding(*st.f, kids[i], st.cfg->max_contour_samples);
    if (!wi || *wi < 0) return false;
    w[i] = *wi;
    sum += w[i];
  }
  if (sum != winding) return false;
  for (int i = 0; i < 4; ++i)
    if (w[i] > 0) process_box(st, kids[i], w[i], depth + 1);
  return true;
}

void process_box(SearchState& st, const Box& b, int winding, int depth) {
  bool at_floor = b.width() <= st.cfg->min_box || depth >= st.cfg->max_depth;
  if ((winding == 1 && b.width() <= st.cfg->coarse_box) || at_floor) {
    bool converged = false;
    Complex z = newton_polish(*st.f, b.center(), winding, st.cfg->newton_tol, &converged);
    if (converged && b.contains(z, 2.0 * b.width())) {
      classify_zero(st, z, winding, b);
      return;
    }
    if (at_floor) {
      // Newton cannot pin the point down; report the box itself.
      classify_zero(st, b.center(), winding, b);
      return;
    }
    // fall through to subdivision
  }
  for (double split : {0.5, 0.47, 0.55, 0.515, 0.44}) {
    if (try_split(st, b, winding, depth, split, split)) return;
  }
  st.unresolved.push_back({b.center(), b.width() / 2.0, winding,
                           "winding did not stabilize under subdivision"});
}

}  // namespace

int ZeroSearchResult::multiplicity_total() const {
  int total = 0;
  for (const auto& p : zeros) total += p.multiplicity;
  return total;
}

ZeroSearchResult find_zeros_of(const AnalyticFn& f, const ZeroSearchConfig& cfg) {
  if (!(cfg.r_min > 0.0) || !(cfg.r_max < 1.0) || cfg.r_min >= cfg.r_max)
    throw std::invalid_argument("find_zeros: need 0 < r_min < r_max < 1");
  ZeroSearchResult result;

  auto outer = circle_winding(f, cfg.r_max, cfg.max_contour_samples);
  auto inner = circle_winding(f, cfg.r_min, cfg.max_contour_samples);
  if (outer && inner) {
    result.annulus_winding = *outer - *inner;
    result.annulus_winding_ok = true;
  } else {
    result.unresolved.push_back({Complex(0.0), cfg.r_max, 0,
                                 "annulus circle winding did not stabilize"});
  }

  SearchState st{&f, &cfg, {}, std::move(result.unresolved)};
  std::optional<int> root_w;
  Box root{};
  for (double grow : {1.0, 1.0 + 3e-6, 1.0 + 7e-6}) {
    double R = cfg.r_max * grow;
    root = Box{-R, -R, R, R};
    root_w = box_winding(f, root, cfg.max_contour_samples);
    if (root_w) break;
  }
  if (!root_w) {
    st.unresolved.push_back({Complex(0.0), cfg.r_max, 0,
                             "root square winding did not stabilize"});
  } else if (*root_w > 0) {
    process_box(st, root, *root_w, 0);
  }

  result.zeros = std::move(st.zeros);
  result.unresolved = std::move(st.unresolved);
  std::sort(result.zeros.begin(), result.zeros.end(),
            [](const SpectralPoint& p, const SpectralPoint& q) {
              if (p.lambda.real() != q.lambda.real())
                return p.lambda.real() < q.lambda.real();
              return p.lambda.imag() < q.lambda.imag();
            });
  return result;
}

ZeroSearchResult find_zeros(const JacobiOperator& op, const ZeroSearchConfig& cfg) {
  return find_zeros_of([&op](Complex z) { return determinant_u_extended(op, z); }, cfg);
}

FiniteSectionResult finite_section_eigenvalues(const JacobiOperator& op, long N,
                                               const std::vector<SpectralPoint>& points) {
  long radius = op.is_free()
                    ? 0
                    : std::max(std::abs(op.support_lo()), std::abs(op.support_hi()));
  if (N < radius + 10)
    throw std::invalid_argument("finite_section: N must be >= support radius + 10");
  const long dim = 2 * N + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    long k = i - N;
    m(i, i) = op.b(k);
    if (i + 1 < dim) {
      m(i, i + 1) = op.c(k);   // J(k, k+1)
      m(i + 1, i) = op.a(k);   // J(k+1, k)
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("finite_section: dense eigensolver did not converge");

  FiniteSectionResult result;
  result.half_width = N;
  result.eigenvalues.reserve(dim);
  for (long i = 0; i < dim; ++i) result.eigenvalues.push_back(solver.eigenvalues()(i));
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
            [](Complex p, Complex q) {
              if (p.real() != q.real()) return p.real() < q.real();
              return p.imag() < q.imag();
            });
  for (const auto& pt : points) {
    FiniteSectionResult::Match match{pt.lambda, Complex(0.0),
                                     std::numeric_limits<double>::infinity()};
    for (Complex ev : result.eigenvalues) {
      double d = std::abs(ev - pt.lambda);
      if (d < match.distance) {
        match.distance = d;
        match.section_lambda = ev;
      }
    }
    result.matches.push_back(match);
  }
  return result;
}

SimilarityReport similarity_check(const JacobiOperator& op, long r_lo,
                                  const std::vector<Complex>& r,
                                  const ZeroSearchConfig& cfg, double tolerance) {
  JacobiOperator transformed = op.gauge_transformed(r_lo, r);
  SimilarityReport report;
  report.base_zeros = find_zeros(op, cfg).zeros;
  report.transformed_zeros = find_zeros(transformed, cfg).zeros;
  report.max_pairing_distance = 0.0;
  report.zero_sets_match = report.base_zeros.size() == report.transformed_zeros.size();
  if (!report.zero_sets_match) {
    report.max_pairing_distance = std::numeric_limits<double>::infinity();
    return report;
  }
  for (std::size_t i = 0; i < report.base_zeros.size(); ++i) {
    const auto& p = report.base_zeros[i];
    const auto& q = report.transformed_zeros[i];
    if (p.multiplicity != q.multiplicity) {
      report.zero_sets_match = false;
      report.max_pairing_distance = std::numeric_limits<double>::infinity();
      return report;
    }
    report.max_pairing_distance =
        std::max(report.max_pairing_distance, std::abs(p.z - q.z));
  }
  report.zero_sets_match = report.max_pairing_distance <= tolerance;
  return report;
}

}  // namespace jacspec
