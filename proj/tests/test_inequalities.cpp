#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "jacspec/inequalities.hpp"
#include "jacspec/random_ops.hpp"
#include "support.hpp"

using namespace jacspec;
using namespace jacspec::testing;

namespace {

SpectralPoint point_at(Complex lambda, int mult = 1) {
  Complex z = disk_root_of_quadratic(lambda);
  return {z, mult, lambda, 0.0};
}

}  // namespace

TEST_CASE("kappa") {
  double k = kappa();
  CHECK(std::abs(k - 0.129) < 1e-3);
  CHECK(std::abs((4.0 * k + 5.0 * k * k) * std::exp(4.0 * k) - 1.0) < 1e-10);
  // bracket validity of the bisection
  CHECK((4.0 * 0.0 + 5.0 * 0.0) * std::exp(0.0) < 1.0);
  CHECK((4.0 + 5.0) * std::exp(4.0) > 1.0);
}

TEST_CASE("lt sums on anchors") {
  CHECK(lt_sums({}, 0.5).main_sum == 0.0);
  CHECK(lt_sums({}, 0.5).hk_sum == 0.0);
  std::vector<SpectralPoint> one{point_at(2.5)};
  auto sums = lt_sums(one, 0.5);
  CHECK(std::abs(sums.main_sum - 0.40824829046386302) < 1e-12);
  CHECK(std::abs(sums.hk_sum - 0.21298103474875749) < 1e-12);
  std::vector<SpectralPoint> twice{point_at(2.5, 2)};
  CHECK(std::abs(lt_sums(twice, 0.5).main_sum - 2.0 * sums.main_sum) < 1e-14);
}

TEST_CASE("lt sums validate epsilon") {
  std::vector<SpectralPoint> one{point_at(2.5)};
  CHECK_THROWS_AS(lt_sums(one, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lt_sums(one, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lt_sums(one, -0.2), std::invalid_argument);
  CHECK_THROWS_AS(lt_sums(one, 1.7), std::invalid_argument);
}

TEST_CASE("lt main term is monotone in epsilon, direction set by the oval size") {
  // |λ²-4| > 1: the term grows with ε; |λ²-4| < 1: it shrinks
  std::vector<SpectralPoint> big{point_at(2.5)};  // |λ²-4| = 2.25
  double prev = 0.0;
  for (double eps : {0.05, 0.25, 0.5, 0.75, 0.9}) {
    double cur = lt_sums(big, eps).main_sum;
    CHECK(cur > prev);
    prev = cur;
  }
  Complex lam_small = std::sqrt(Complex(4.5, 0.0));  // |λ²-4| = 0.5
  std::vector<SpectralPoint> small{point_at(lam_small)};
  prev = 1e300;
  for (double eps : {0.05, 0.25, 0.5, 0.75, 0.9}) {
    double cur = lt_sums(small, eps).main_sum;
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("enclosure radii anchors") {
  SUBCASE("single site b = 1.5") {
    auto gauge = compute_gauge(JacobiOperator::single_site(1.5));
    auto radii = enclosure_radii(gauge, true);
    REQUIRE(radii.schrodinger_sharp.has_value());
    CHECK(*radii.schrodinger_sharp == 2.25);
    CHECK(radii.birman_schwinger == doctest::Approx(324.0 * 2.25).epsilon(1e-14));
    // (2(√Δ+Δ)/κ)² with the bisected κ
    CHECK(std::abs(radii.cassini - 1792.8878694281) < 1e-4);
    // the sole eigenvalue attains the sharp oval boundary
    Complex lam = point_at(2.5).lambda;
    CHECK(std::abs(std::abs(lam * lam - 4.0) - *radii.schrodinger_sharp) < 1e-9);
  }
  SUBCASE("free operator") {
    auto radii = enclosure_radii(compute_gauge(JacobiOperator()), true);
    CHECK(radii.cassini == 0.0);
    CHECK(radii.birman_schwinger == 0.0);
    CHECK(*radii.schrodinger_sharp == 0.0);
  }
  SUBCASE("sharp oval never exceeds the birman-schwinger one") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
      RandomOperatorParams params;
      params.schrodinger = true;
      auto gauge = compute_gauge(random_operator(rng, params));
      auto radii = enclosure_radii(gauge, true);
      CHECK(*radii.schrodinger_sharp <= radii.birman_schwinger);
    }
  }
}

TEST_CASE("analyze_operator on the sharpness witness") {
  auto report = analyze_operator("b15", JacobiOperator::single_site(1.5), 0.5);
  CHECK(!report.violation);
  CHECK(report.schrodinger);
  CHECK(report.delta == 1.5);
  CHECK(report.trace_norm_proxy == 1.5);
  REQUIRE(report.memberships.size() == 1);
  CHECK(report.memberships[0].in_cassini);
  CHECK(report.memberships[0].in_birman_schwinger);
  REQUIRE(report.memberships[0].in_sharp.has_value());
  CHECK(*report.memberships[0].in_sharp);
  CHECK(std::abs(report.memberships[0].lambda_sq_minus_4 - 2.25) < 1e-9);
  CHECK(std::abs(report.ratio_main - 0.27216552697590868) < 1e-9);
}

TEST_CASE("family sweep over the diagonal single-site family") {
  std::vector<FamilyMember> family;
  Complex dir(0.7071067811865476, 0.7071067811865476);
  for (double t : {0.5, 1.0, 2.0, 4.0})
    family.push_back({"t=" + std::to_string(t), JacobiOperator::single_site(t * dir)});
  std::vector<double> eps{0.5};
  auto reports = family_sweep(family, eps);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CHECK(r.error.empty());
    CHECK(!r.violation);
    CHECK(r.memberships.size() == 1);
  }
}

TEST_CASE("gauge orbits share their lt sums") {
  Rng rng(5);
  RandomOperatorParams params;
  params.max_support = 3;
  params.amplitude = 0.6;
  auto base = random_operator(rng, params);
  std::vector<FamilyMember> family{{"base", base}};
  for (int t = 0; t < 3; ++t)
    family.push_back({"hat" + std::to_string(t),
                      base.gauge_transformed(base.support_lo(), random_gauge(rng, 2))});
  std::vector<double> eps{0.5};
  auto reports = family_sweep(family, eps);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CHECK(r.error.empty());
    CHECK(close(r.sums.main_sum, reports[0].sums.main_sum, 1e-8));
    CHECK(close(r.sums.hk_sum, reports[0].sums.hk_sum, 1e-8));
    CHECK(close(r.delta, reports[0].delta, 1e-12));
  }
}

TEST_CASE("sweep survives a failing epsilon without aborting") {
  std::vector<FamilyMember> family{{"free", JacobiOperator()},
                                   {"b15", JacobiOperator::single_site(1.5)}};
  std::vector<double> eps{0.5, 1.5};  // the second is out of range
  auto reports = family_sweep(family, eps);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].error.empty());
  CHECK(!reports[1].error.empty());
  CHECK(reports[2].error.empty());
  CHECK(!reports[3].error.empty());
  // the free member has no spectrum and a zero-over-zero ratio
  CHECK(reports[0].ratio_main == 0.0);
  CHECK(reports[0].sums.main_sum == 0.0);
}

TEST_CASE("default epsilon grid stays inside (0,1)") {
  auto eps = default_epsilons();
  CHECK(eps.size() == 6);
  for (double e : eps) {
    CHECK(e > 0.0);
    CHECK(e < 1.0);
  }
}
