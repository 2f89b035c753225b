#include <cmath>
#include <random>

#include <doctest.h>

#include "mddim/inverse_map.hpp"
#include "support.hpp"

using namespace mddim;
using mddim::testing::max_coefficient_gap;
using mddim::testing::random_series;

namespace {

const double kPi = std::numbers::pi;

// Random series inside the mapping's domain.
Series<double> domain_series(Family family, std::mt19937& rng) {
  Series<double> s = random_series(family, rng);
  if (family == Family::OddSine) s.add(Index::odd_sine(1), -s.coefficient(Index::odd_sine(1)));
  return s;
}

std::vector<MappingSpec<double>> shipped_mappings() {
  return {MappingSpec<double>::sine_alpha(2.0),
          MappingSpec<double>::sine_alpha(0.5),
          MappingSpec<double>::sine_alpha(7.5),
          MappingSpec<double>::sine_beta_gamma(1.0, 1.0),
          MappingSpec<double>::sine_beta_gamma(2.0, 0.5),
          MappingSpec<double>::inverse_power_cubic(1 / (3 * kPi), kPi / 30, kPi / 3),
          MappingSpec<double>::inverse_power_cubic(0.0, 0.0, kPi / 3),
          MappingSpec<double>::inverse_power_cubic(0.1, kPi / 12, kPi / 3),
          MappingSpec<double>::poly2d_quadratic(kPi / 2, kPi),
          MappingSpec<double>::poly2d_quadratic(2.0, 3.0)};
}

}  // namespace

TEST_CASE("apply_mapping examples") {
  const auto alpha = MappingSpec<double>::sine_alpha(2.0);
  const auto s3 = Series<double>::from_terms(Family::OddSine, {{Index::odd_sine(2), 1.0}});
  const auto r = apply_mapping(alpha, s3);
  CHECK(r.coefficient(Index::odd_sine(2)) == doctest::Approx(-1 / (14 * kPi * kPi)));
  CHECK(r.coefficient(Index::odd_sine(2)) == doctest::Approx(-0.0072361).epsilon(1e-5));

  const auto poly = MappingSpec<double>::poly2d_quadratic(2.0, 3.0);
  const auto one = Series<double>::constant(Family::EvenPoly2D, 1.0);
  const auto image = apply_mapping(poly, one);
  CHECK(image.coefficient(Index::monomial(2, 2)) == 0.25);
  CHECK(image.terms().size() == 1);
  // d^4/dx^2 dy^2 of x^2 y^2 / 4 recovers the constant 1
  const auto back = differentiate(differentiate(image, 2, Axis::X), 2, Axis::Y);
  CHECK(back.coefficient(Index::monomial(0, 0)) == 1.0);

  const auto cubic = MappingSpec<double>::inverse_power_cubic(1 / (3 * kPi), kPi / 30, kPi / 3);
  const auto p2 = Series<double>::from_terms(Family::InversePower, {{Index::inverse_power(2), 1.0}});
  const double denominator = -8 + (kPi / 3) * 4 + (kPi / 30) * -2 + 1 / (3 * kPi);
  CHECK(denominator == doctest::Approx(-3.91455).epsilon(1e-5));
  CHECK(apply_mapping(cubic, p2).coefficient(Index::inverse_power(2)) ==
        doctest::Approx(1 / denominator));
  CHECK(1 / denominator == doctest::Approx(-0.25546).epsilon(1e-4));
}

TEST_CASE("sine-beta-gamma denominators") {
  const auto j = MappingSpec<double>::sine_beta_gamma(1.0, 1.0);
  const auto s = Series<double>::from_terms(Family::OddSine, {{Index::odd_sine(2), 1.0}});
  const double expected = 1 / ((1 - 3) * (std::sqrt(3.0) + 1) * (std::sqrt(3.0) + 1) * kPi * kPi);
  CHECK(apply_mapping(j, s).coefficient(Index::odd_sine(2)) == doctest::Approx(expected));
}

TEST_CASE("apply_mapping errors") {
  const auto alpha = MappingSpec<double>::sine_alpha(2.0);
  const auto primary = Series<double>::from_terms(Family::OddSine, {{Index::odd_sine(1), 1.0}});
  CHECK_THROWS_AS(apply_mapping(alpha, primary), SecularResidue);
  const auto p = Series<double>::from_terms(Family::InversePower, {{Index::inverse_power(2), 1.0}});
  CHECK_THROWS_AS(apply_mapping(alpha, p), FamilyMismatch);
  const auto cubic = MappingSpec<double>::inverse_power_cubic(0.0, 0.0, kPi / 3);
  const auto low = Series<double>::from_terms(Family::InversePower, {{Index::inverse_power(1), 1.0}});
  CHECK_THROWS_AS(apply_mapping(cubic, low), SecularResidue);
}

TEST_CASE("apply_mapping is linear (rule I)") {
  std::mt19937 rng(21);
  for (const auto& j : shipped_mappings()) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = domain_series(j.family(), rng);
      const auto t = domain_series(j.family(), rng);
      const auto lhs = apply_mapping(j, linear_combine<double>({{1.5, s}, {-0.25, t}}));
      const auto rhs = linear_combine<double>({{1.5, apply_mapping(j, s)}, {-0.25, apply_mapping(j, t)}});
      CHECK(max_coefficient_gap(lhs, rhs) <= 1e-15);
    }
  }
}

TEST_CASE("apply_mapping kernel is trivial on probed series (rule II)") {
  std::mt19937 rng(22);
  for (const auto& j : shipped_mappings()) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = domain_series(j.family(), rng);
      if (s.is_zero()) continue;
      CHECK_FALSE(apply_mapping(j, s).is_zero());
    }
  }
}

TEST_CASE("validate_mapping") {
  for (const auto& j : shipped_mappings()) {
    const auto report = validate_mapping(j, 50);
    INFO(report.mapping);
    CHECK(report.all_pass());
    CHECK(report.invariant_violations.empty());
    CHECK(std::isfinite(report.k_estimate));
  }
  // 2m + 1 + alpha vanishes at m = 2
  const auto bad = validate_mapping(MappingSpec<double>::sine_alpha(-5.0), 50);
  CHECK_FALSE(bad.injectivity.pass);
  CHECK_FALSE(bad.invariant_violations.empty());
  // m^2 (m + pi/3) < 0 for m <= -2
  const auto cubic = MappingSpec<double>::inverse_power_cubic(0.0, 0.0, kPi / 3);
  for (int n = 2; n < 60; ++n) CHECK(cubic.denominator(Index::inverse_power(n)) < 0);
}

TEST_CASE("validate_mapping flags a vanishing cubic denominator") {
  // m^3 + A2 m^2 + A1 m + A0 with a root at m = -3: (m + 3)(m^2 + 1)
  const auto j = MappingSpec<double>::inverse_power_cubic(3.0, 1.0, 3.0);
  const auto report = validate_mapping(j, 50);
  CHECK_FALSE(report.injectivity.pass);
  CHECK_FALSE(report.finiteness.pass);
}
