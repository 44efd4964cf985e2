#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "jacspec/determinant.hpp"
#include "jacspec/jost.hpp"
#include "jacspec/random_ops.hpp"
#include "support.hpp"

using namespace jacspec;
using namespace jacspec::testing;

namespace {

Complex sample_z(Rng& rng) { return rng.annulus(0.05, 0.95); }

JacobiOperator sample_operator(Rng& rng, long max_support = 6, double amplitude = 0.6) {
  RandomOperatorParams params;
  params.max_support = max_support;
  params.amplitude = amplitude;
  return random_operator(rng, params);
}

Complex single_site_u(Complex b, Complex z) { return 1.0 + b * z / (z * z - 1.0); }

}  // namespace

TEST_CASE("free operator determinant is one") {
  JacobiOperator free;
  Rng rng(3);
  for (int t = 0; t < 20; ++t) CHECK(determinant_u(free, sample_z(rng)) == Complex(1.0));
  CHECK(determinant_u(free, Complex(0.0)) == Complex(1.0));
  CHECK(cdist(wronskian(free, SpectralParameter(Complex(0.5))), 1.5) < 1e-14);
}

TEST_CASE("single-site closed form against both routes") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Complex b = rng.disk(2.0);
    auto op = JacobiOperator::single_site(b);
    Complex z = sample_z(rng);
    Complex expected = single_site_u(b, z);
    CHECK(close(determinant_u(op, z), expected, 1e-12));
    CHECK(close(determinant_oracle(op, z + 1.0 / z), expected, 1e-12));
  }
}

TEST_CASE("b = 1.5 anchors: U and W at the eigenvalue and off it") {
  auto op = JacobiOperator::single_site(1.5);
  CHECK(std::abs(determinant_u(op, Complex(0.5))) < 1e-15);  // 1 + 0.75/(-0.75)
  CHECK(std::abs(wronskian(op, SpectralParameter(Complex(0.5)))) < 1e-14);
  // off the eigenvalue: W = 1/z - z - b
  CHECK(cdist(wronskian(op, SpectralParameter(Complex(0.4))), 0.6) < 1e-14);
  CHECK(cdist(determinant_u(op, Complex(0.4)), single_site_u(1.5, 0.4)) < 1e-14);
}

TEST_CASE("wronskian is independent of the evaluation point") {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    auto op = sample_operator(rng);
    SpectralParameter sp(sample_z(rng));
    Complex w0 = wronskian_at(op, sp, 0);
    Complex w3 = wronskian_at(op, sp, 3);
    Complex wm2 = wronskian_at(op, sp, -2);
    CHECK(cdist(w0, w3) <= 1e-11 * (1.0 + std::abs(w0)));
    CHECK(cdist(w0, wm2) <= 1e-11 * (1.0 + std::abs(w0)));
  }
}

TEST_CASE("determinant equals the weighted wronskian") {
  // U = (ω/2) Π a_j W(u⁺,u⁻); the shipped formula never forms the product,
  // so this cross-checks the two displays.
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    auto op = sample_operator(rng);
    SpectralParameter sp(sample_z(rng));
    TransitionFactors tf(op);
    Complex via_w = sp.omega() / 2.0 * tf.product_a() * wronskian(op, sp);
    CHECK(close(determinant_u(op, sp.z()), via_w, 1e-10));
  }
}

TEST_CASE("determinant decomposition through the d terms") {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    auto op = sample_operator(rng);
    SpectralParameter sp(sample_z(rng));
    Complex z = sp.z();
    auto right = solve_volterra_right(op, sp);
    auto left = solve_volterra_left(op, sp);
    Complex p0 = right.value(0) - 1.0, p1 = right.value(1) - z;
    Complex q0 = left.value(0) - 1.0, q1 = left.value(1) - 1.0 / z;
    Complex d1 = q1 + p0 / z + p0 * q1;
    Complex d2 = p1 + z * q0 + p1 * q0;
    Complex d3 = (1.0 - op.ac(0)) * right.value(1) * left.value(0);
    CHECK(close(determinant_u(op, z), 1.0 + sp.omega() / 2.0 * (d1 - d2 + d3), 1e-11));
  }
}

TEST_CASE("route equivalence on random operators") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    auto op = sample_operator(rng, 6, 0.8);
    for (int s = 0; s < 20; ++s) {
      Complex z = sample_z(rng);
      Complex u = determinant_u(op, z);
      Complex oracle = determinant_oracle(op, z + 1.0 / z);
      CHECK(cdist(u, oracle) <= 1e-8 * (1.0 + std::abs(oracle)));
    }
  }
}

TEST_CASE("two-site oracle agreement at tighter tolerance") {
  Rng rng(19);
  auto op = sample_operator(rng, 2, 0.6);
  for (int s = 0; s < 100; ++s) {
    Complex z = sample_z(rng);
    CHECK(close(determinant_u(op, z), determinant_oracle(op, z + 1.0 / z), 1e-9));
  }
}

TEST_CASE("gauge invariance of the determinant") {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    auto op = sample_operator(rng);
    Complex z = sample_z(rng);
    Complex u = determinant_u(op, z);
    auto r2 = random_pow2_gauge(rng, 3);
    CHECK(determinant_u(op.gauge_transformed(op.support_lo(), r2), z) == u);
    auto r = random_gauge(rng, 3);
    CHECK(close(determinant_u(op.gauge_transformed(op.support_lo(), r), z), u, 1e-12));
  }
}

TEST_CASE("normalization at the origin") {
  Rng rng(29);
  CHECK(determinant_u(JacobiOperator::single_site(2.0), Complex(0.0)) == Complex(1.0));
  for (int t = 0; t < 100; ++t) {
    auto op = sample_operator(rng, 7, 0.8);
    double delta = compute_gauge(op).delta_total();
    if (delta == 0.0) continue;
    Complex z = std::polar(1e-3, rng.uniform(0.0, 6.28));
    CHECK(std::abs(determinant_u(op, z) - 1.0) <= 5e-3 * delta);
  }
}

TEST_CASE("mean value over a small circle reproduces the center") {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    auto op = sample_operator(rng);
    Complex center = rng.disk(0.6);
    double radius = 0.05;
    Complex avg(0.0);
    const int m = 128;
    for (int k = 0; k < m; ++k)
      avg += determinant_u(op, center + std::polar(radius, 6.283185307179586 * k / m));
    avg /= double(m);
    CHECK(close(avg, determinant_u(op, center), 1e-8));
  }
}

TEST_CASE("extended evaluator reaches the outer root") {
  // z² + bz - 1 has roots 0.5 and -2 for b = 1.5; the rational continuation
  // of U vanishes at both.
  auto op = JacobiOperator::single_site(1.5);
  CHECK(std::abs(determinant_u_extended(op, Complex(-2.0))) < 1e-13);
  CHECK_THROWS_AS(determinant_u(op, Complex(-2.0)), std::invalid_argument);
  CHECK_THROWS_AS(determinant_u(op, Complex(1.0 - 1e-14, 0.0)), EdgeProximityError);
}

TEST_CASE("bound audit margins") {
  SUBCASE("free operator: all margins vanish with the right sides") {
    JacobiOperator free;
    auto grid = polar_grid(8, 8, 0.1, 0.9);
    for (const auto& ev : audit_bounds(free, grid)) {
      CHECK(ev.margins.x == 0.0);
      CHECK(ev.margins.perdet == 0.0);
      CHECK(ev.margins.expbound == 0.0);
      CHECK(ev.margins.log_bound == 0.0);
    }
  }
  SUBCASE("single site on a 64x64 grid") {
    auto op = JacobiOperator::single_site(1.5);
    auto grid = polar_grid(64, 64, 0.05, 0.995);
    double min_margin = 1e300;
    for (const auto& ev : audit_bounds(op, grid))
      min_margin = std::min(min_margin, ev.margins.worst());
    CHECK(min_margin >= 0.0);
  }
  SUBCASE("omega over z stays below the envelope") {
    // |ω(z)/z| <= 2(1+|ω(z)|), from |1-z²| + |z| >= 1
    Rng rng(37);
    for (int t = 0; t < 500; ++t) {
      Complex z = rng.annulus(0.01, 0.999);
      if (std::abs(z - 1.0) < 1e-3 || std::abs(z + 1.0) < 1e-3) continue;
      double om = std::abs(omega_of(z));
      CHECK(om / std::abs(z) <= 2.0 * (1.0 + om) * (1.0 + 1e-13));
    }
  }
}

TEST_CASE("polar grid validation and placement") {
  CHECK_THROWS_AS(polar_grid(0, 8, 0.1, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(polar_grid(8, 8, 0.0, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(polar_grid(8, 8, 0.5, 1.0), std::invalid_argument);
  auto grid = polar_grid(16, 16, 0.05, 0.9999);
  CHECK(grid.size() == 256);
  for (Complex z : grid) {
    CHECK(std::abs(z) < 1.0);
    CHECK(std::abs(z - 1.0) > 1e-3);
    CHECK(std::abs(z + 1.0) > 1e-3);
  }
}
