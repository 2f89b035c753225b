#include <cmath>
#include <random>

#include <doctest.h>

#include "mddim/homotopy.hpp"
#include "support.hpp"

using namespace mddim;
using mddim::testing::max_coefficient_gap;
using mddim::testing::random_series;

namespace {

HomotopySequence<double> random_sequence(Family family, std::mt19937& rng, int length) {
  HomotopySequence<double> a(family);
  for (int k = 0; k < length; ++k) a.push_back(random_series(family, rng, 3));
  return a;
}

double sum_at(const HomotopySequence<double>& a, double q, double x, double y) {
  double total = 0;
  double power = 1;
  for (const auto& t : a.terms()) {
    total += power * evaluate_at(t, x, y);
    power *= q;
  }
  return total;
}

Series<double> root2_sin() {
  return Series<double>::from_terms(Family::OddSine, {{Index::odd_sine(1), std::sqrt(2.0)}});
}

}  // namespace

TEST_CASE("convolve_product") {
  std::mt19937 rng(1);
  const auto a = random_sequence(Family::InversePower, rng, 3);
  const auto b = random_sequence(Family::InversePower, rng, 3);
  CHECK(max_coefficient_gap(convolve_product(a, b, 0), multiply(a[0], b[0])) == 0.0);

  HomotopySequence<double> s(Family::OddSine, {root2_sin()});
  const auto cube = convolve_product(s, HomotopySequence<double>(Family::OddSine, {multiply(s[0], s[0])}), 0);
  CHECK(cube.coefficient(Index::odd_sine(1)) == doctest::Approx(3 * std::sqrt(2.0) / 2));
  CHECK(cube.coefficient(Index::odd_sine(2)) == doctest::Approx(-std::sqrt(2.0) / 2));
  for (const double x : {0.1, 0.37, 0.5, 0.8}) {
    CHECK(evaluate_at(cube, x) == doctest::Approx(std::pow(std::sqrt(2.0) * std::sin(std::numbers::pi * x), 3)));
  }

  CHECK_THROWS_AS(convolve_product(s, s, 1), InsufficientTerms);
  CHECK_THROWS_AS(convolve_product(a, s, 0), FamilyMismatch);
}

TEST_CASE("absent terms are zero through padding") {
  // a_1 = 0 explicitly: D_1[phi^2] = 2 a_0 a_1 = 0
  HomotopySequence<double> a(Family::OddSine, {root2_sin(), Series<double>(Family::OddSine)});
  CHECK(convolve_product(a, a, 1).is_zero());
}

TEST_CASE("convolve_product generating function") {
  std::mt19937 rng(2);
  const int length = 5;
  const auto a = random_sequence(Family::EvenPoly2D, rng, length);
  const auto b = random_sequence(Family::EvenPoly2D, rng, length);
  for (const double q : {0.1, 0.3}) {
    for (const double x : {0.0, 0.4, -0.9}) {
      double series = 0;
      double power = 1;
      for (int m = 0; m < length; ++m) {
        series += power * evaluate_at(convolve_product(a, b, m), x, 0.5);
        power *= q;
      }
      // terms of order >= length are missing from both sides' truncation;
      // compare against the product truncated the same way
      double direct = 0;
      for (int i = 0; i < length; ++i) {
        for (int j = 0; i + j < length; ++j) {
          direct += std::pow(q, i + j) * evaluate_at(a[i], x, 0.5) * evaluate_at(b[j], x, 0.5);
        }
      }
      CHECK(std::abs(series - direct) <= 1e-10);
      const double full = sum_at(a, q, x, 0.5) * sum_at(b, q, x, 0.5);
      CHECK(std::abs(series - full) <= 10 * std::pow(q, length));
    }
  }
}

TEST_CASE("power_term") {
  std::mt19937 rng(4);
  const auto a = random_sequence(Family::InversePower, rng, 4);
  CHECK(max_coefficient_gap(power_term(a, 1, 3), a[3]) == 0.0);

  HomotopySequence<double> s(Family::OddSine, {root2_sin()});
  const auto p = power_term(s, 3, 0);
  CHECK(p.coefficient(Index::odd_sine(1)) == doctest::Approx(3 * std::sqrt(2.0) / 2));
  CHECK(p.coefficient(Index::odd_sine(2)) == doctest::Approx(-std::sqrt(2.0) / 2));

  HomotopySequence<double> c(Family::EvenPoly2D,
                             {Series<double>::constant(Family::EvenPoly2D, 1.0),
                              Series<double>::from_terms(Family::EvenPoly2D, {{Index::monomial(2, 2), 1.0}})});
  const auto sq = power_term(c, 2, 1);
  CHECK(sq.coefficient(Index::monomial(2, 2)) == 2.0);
  CHECK(sq.terms().size() == 1);

  CHECK_THROWS_AS(power_term(c, 2, 2), InsufficientTerms);
}

TEST_CASE("power_term cubed equals convolution with the square") {
  std::mt19937 rng(6);
  const auto a = random_sequence(Family::EvenPoly2D, rng, 4);
  HomotopySequence<double> square(Family::EvenPoly2D);
  for (int m = 0; m < 4; ++m) square.push_back(power_term(a, 2, m));
  for (int m = 0; m < 4; ++m) {
    CHECK(max_coefficient_gap(power_term(a, 3, m), convolve_product(a, square, m)) <= 1e-14);
  }
}

TEST_CASE("exp_terms") {
  HomotopySequence<double> zero(Family::EvenPoly2D, {Series<double>(Family::EvenPoly2D)});
  const auto g0 = exp_terms(zero, 1.0, 0);
  CHECK(g0[0].coefficient(Index::monomial(0, 0)) == 1.0);

  std::mt19937 rng(8);
  HomotopySequence<double> w(Family::EvenPoly2D, {Series<double>(Family::EvenPoly2D)});
  w.push_back(random_series(Family::EvenPoly2D, rng, 3));
  w.push_back(random_series(Family::EvenPoly2D, rng, 3));
  const auto g = exp_terms(w, 1.0, 2);
  CHECK(max_coefficient_gap(g[1], w[1]) <= 1e-15);
  const auto expected = w[2] + 0.5 * multiply(w[1], w[1]);
  CHECK(max_coefficient_gap(g[2], expected) <= 1e-15);

  HomotopySequence<double> bad(Family::EvenPoly2D, {w[1]});
  CHECK_THROWS_AS(exp_terms(bad, 1.0, 0), UnsupportedInitialTerm);
}

TEST_CASE("exp_terms generating function") {
  std::mt19937 rng(9);
  const int length = 12;
  HomotopySequence<double> w(Family::EvenPoly2D, {Series<double>::constant(Family::EvenPoly2D, 0.3)});
  for (int k = 1; k < length; ++k) w.push_back(random_series(Family::EvenPoly2D, rng, 3));
  const auto g = exp_terms(w, 0.7, length - 1);
  for (const double q : {0.1, 0.2, 0.3}) {
    for (const double x : {0.0, 0.5, -1.0}) {
      const double direct = std::exp(0.7 * sum_at(w, q, x, 0.3));
      CHECK(std::abs(sum_at(g, q, x, 0.3) - direct) <= 1e-5 * std::max(1.0, direct));
    }
  }
  // with q = 0.1 the truncation error is far below the stated tolerance
  CHECK(std::abs(sum_at(g, 0.1, 0.2, 0.3) - std::exp(0.7 * sum_at(w, 0.1, 0.2, 0.3))) <= 1e-8);
}

TEST_CASE("trig_terms") {
  HomotopySequence<double> zero(Family::EvenPoly2D, {Series<double>(Family::EvenPoly2D)});
  const auto [s0, c0] = trig_terms(zero, 0);
  CHECK(s0[0].is_zero());
  CHECK(c0[0].coefficient(Index::monomial(0, 0)) == 1.0);

  std::mt19937 rng(10);
  const double u0 = 0.4;
  HomotopySequence<double> u(Family::EvenPoly2D, {Series<double>::constant(Family::EvenPoly2D, u0)});
  for (int k = 1; k < 10; ++k) u.push_back(random_series(Family::EvenPoly2D, rng, 3));
  const auto [s, c] = trig_terms(u, 9);
  CHECK(max_coefficient_gap(s[1], std::cos(u0) * u[1]) <= 1e-15);

  // D_2[sin phi] with u_0 = 0 is u_2
  HomotopySequence<double> v(Family::EvenPoly2D, {Series<double>(Family::EvenPoly2D), u[1], u[2]});
  const auto [sv, cv] = trig_terms(v, 2);
  CHECK(max_coefficient_gap(sv[2], u[2]) <= 1e-15);
  // brute-force Taylor: sin(u1 q + u2 q^2) = u1 q + u2 q^2 + O(q^3); cos term -u1^2/2 at q^2
  CHECK(max_coefficient_gap(cv[2], -0.5 * multiply(u[1], u[1])) <= 1e-15);

  for (const double q : {0.1, 0.2}) {
    const double phase = sum_at(u, q, 0.3, -0.6);
    CHECK(std::abs(sum_at(s, q, 0.3, -0.6) - std::sin(phase)) <= 1e-6);
    CHECK(std::abs(sum_at(c, q, 0.3, -0.6) - std::cos(phase)) <= 1e-6);
  }
}
