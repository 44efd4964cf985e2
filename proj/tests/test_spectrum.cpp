#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "jacspec/determinant.hpp"
#include "jacspec/random_ops.hpp"
#include "jacspec/spectrum.hpp"
#include "support.hpp"

using namespace jacspec;
using namespace jacspec::testing;

TEST_CASE("free operator has no discrete spectrum") {
  auto result = find_zeros(JacobiOperator());
  CHECK(result.zeros.empty());
  CHECK(result.unresolved.empty());
  CHECK(result.annulus_winding_ok);
  CHECK(result.annulus_winding == 0);
}

TEST_CASE("single-site real anchor") {
  auto result = find_zeros(JacobiOperator::single_site(1.5));
  REQUIRE(result.zeros.size() == 1);
  const auto& p = result.zeros[0];
  CHECK(p.multiplicity == 1);
  CHECK(cdist(p.z, 0.5) < 1e-10);
  CHECK(cdist(p.lambda, 2.5) < 1e-9);
  CHECK(p.residual < 1e-12);
  CHECK(result.annulus_winding_ok);
  CHECK(result.annulus_winding == 1);
}

TEST_CASE("single-site complex anchor") {
  Complex b(1.0, 1.0);
  auto result = find_zeros(JacobiOperator::single_site(b));
  REQUIRE(result.zeros.size() == 1);
  Complex z_exact = single_site_zero(b);  // 0.529086 - 0.257066i
  CHECK(cdist(result.zeros[0].z, z_exact) < 1e-10);
  CHECK(cdist(result.zeros[0].lambda, z_exact + 1.0 / z_exact) < 1e-10);
  CHECK(cdist(result.zeros[0].lambda, 2.0 * z_exact + b) < 1e-10);
}

TEST_CASE("engine resolves multiplicities") {
  AnalyticFn f = [](Complex z) {
    return (z - Complex(0.3)) * (z - Complex(0.3)) * (z + Complex(0.0, 0.4));
  };
  auto result = find_zeros_of(f);
  REQUIRE(result.zeros.size() == 2);
  CHECK(result.multiplicity_total() == 3);
  CHECK(result.annulus_winding == 3);
  bool found_double = false, found_simple = false;
  for (const auto& p : result.zeros) {
    if (p.multiplicity == 2 && cdist(p.z, 0.3) < 1e-7) found_double = true;
    if (p.multiplicity == 1 && cdist(p.z, Complex(0.0, -0.4)) < 1e-8) found_simple = true;
  }
  CHECK(found_double);
  CHECK(found_simple);
}

TEST_CASE("zero sets agree between the wronskian and oracle routes") {
  // L(λ(z)) is analytic inside the disk but folds across |z| = 1, so the
  // oracle route searches with a square kept strictly inside; the direct
  // route uses the same region for a like-for-like comparison.
  ZeroSearchConfig cfg;
  cfg.r_max = 0.70;
  Rng rng(7);
  RandomOperatorParams params;
  params.max_support = 4;
  params.amplitude = 0.7;
  for (int t = 0; t < 8; ++t) {
    auto op = random_operator(rng, params);
    auto direct = find_zeros(op, cfg);
    AnalyticFn oracle_route = [&op](Complex z) -> Complex {
      return determinant_oracle(op, z + 1.0 / z);
    };
    auto via_oracle = find_zeros_of(oracle_route, cfg);
    REQUIRE(direct.zeros.size() == via_oracle.zeros.size());
    for (std::size_t i = 0; i < direct.zeros.size(); ++i) {
      CHECK(cdist(direct.zeros[i].z, via_oracle.zeros[i].z) < 1e-8);
      CHECK(direct.zeros[i].multiplicity == via_oracle.zeros[i].multiplicity);
    }
  }
}

TEST_CASE("multiplicity accounting matches the annulus winding") {
  Rng rng(11);
  RandomOperatorParams params;
  params.max_support = 5;
  params.amplitude = 0.8;
  for (int t = 0; t < 15; ++t) {
    auto op = random_operator(rng, params);
    auto result = find_zeros(op);
    if (!result.annulus_winding_ok || !result.unresolved.empty()) continue;
    CHECK(result.multiplicity_total() == result.annulus_winding);
    for (const auto& p : result.zeros) {
      CHECK(std::abs(p.z) < 1.0);
      CHECK(dist_to_band(p.lambda) > 0.0);
      CHECK(std::abs(determinant_u(op, p.z)) < 1e-9);
    }
  }
}

TEST_CASE("near-boundary zeros are reported, not refined") {
  // place the zero of a single-site operator just outside r_max
  Complex z0 = std::polar(1.00005, 0.7853981633974483);
  Complex b = 1.0 / z0 - z0;
  auto result = find_zeros(JacobiOperator::single_site(b));
  CHECK(result.zeros.empty());
  REQUIRE(!result.unresolved.empty());
  bool near_boundary = false;
  for (const auto& u : result.unresolved)
    if (u.reason.find("near-boundary") != std::string::npos) near_boundary = true;
  CHECK(near_boundary);
}

TEST_CASE("finite section of the free operator stays in the band") {
  auto result = finite_section_eigenvalues(JacobiOperator(), 50);
  CHECK(result.eigenvalues.size() == 101);
  // exact truncation spectrum: 2 cos(kπ/(2N+2)), k = 1..2N+1
  std::vector<double> expected;
  for (int k = 1; k <= 101; ++k)
    expected.push_back(2.0 * std::cos(k * 3.14159265358979323846 / 102.0));
  std::sort(expected.begin(), expected.end());
  for (std::size_t i = 0; i < result.eigenvalues.size(); ++i) {
    CHECK(std::abs(result.eigenvalues[i].imag()) < 1e-10);
    CHECK(std::abs(result.eigenvalues[i].real()) < 2.0);
    CHECK(std::abs(result.eigenvalues[i].real() - expected[i]) < 1e-10);
  }
}

TEST_CASE("finite section catches the single-site eigenvalues") {
  auto op15 = JacobiOperator::single_site(1.5);
  auto zeros15 = find_zeros(op15).zeros;
  auto fs15 = finite_section_eigenvalues(op15, 100, zeros15);
  REQUIRE(fs15.matches.size() == 1);
  CHECK(fs15.matches[0].distance < 1e-6);
  CHECK(cdist(fs15.matches[0].section_lambda, 2.5) < 1e-6);

  auto op1i = JacobiOperator::single_site(Complex(1.0, 1.0));
  auto zeros1i = find_zeros(op1i).zeros;
  auto fs1i = finite_section_eigenvalues(op1i, 100, zeros1i);
  REQUIRE(fs1i.matches.size() == 1);
  CHECK(fs1i.matches[0].distance < 1e-5);
}

TEST_CASE("finite section converges as N doubles") {
  auto op = JacobiOperator::single_site(1.5);
  auto zeros = find_zeros(op).zeros;
  REQUIRE(zeros.size() == 1);
  REQUIRE(dist_to_band(zeros[0].lambda) >= 0.1);
  double d200 = finite_section_eigenvalues(op, 200, zeros).matches[0].distance;
  double d400 = finite_section_eigenvalues(op, 400, zeros).matches[0].distance;
  CHECK(d200 <= 1e-4);
  CHECK(d400 <= d200 + 1e-11);  // exponential decay saturates at roundoff
}

TEST_CASE("finite section validates the half width") {
  auto op = JacobiOperator::single_site(1.0, 20);
  CHECK_THROWS_AS(finite_section_eigenvalues(op, 25), std::invalid_argument);
  CHECK_NOTHROW(finite_section_eigenvalues(op, 30));
}

TEST_CASE("similarity check examples") {
  SUBCASE("free operator") {
    auto report = similarity_check(JacobiOperator(), 0, {Complex(7.0)});
    CHECK(report.zero_sets_match);
    CHECK(report.base_zeros.empty());
    CHECK(report.transformed_zeros.empty());
  }
  SUBCASE("single site with r0 = 2") {
    auto report = similarity_check(JacobiOperator::single_site(1.5), 0, {Complex(2.0)});
    CHECK(report.zero_sets_match);
    REQUIRE(report.base_zeros.size() == 1);
    REQUIRE(report.transformed_zeros.size() == 1);
    CHECK(cdist(report.transformed_zeros[0].z, 0.5) < 1e-9);
  }
  SUBCASE("random operators and gauges") {
    Rng rng(13);
    RandomOperatorParams params;
    params.max_support = 3;
    params.amplitude = 0.7;
    for (int t = 0; t < 6; ++t) {
      auto op = random_operator(rng, params);
      auto r = random_gauge(rng, 2);
      auto report = similarity_check(op, op.support_lo(), r);
      CHECK(report.zero_sets_match);
      CHECK(report.max_pairing_distance <= 1e-8);
    }
  }
}
