#pragma once

#include <random>

#include "mddim/series.hpp"

namespace mddim::testing {

// Random series with at most `count` terms drawn from the family's basis.
inline Series<double> random_series(Family family, std::mt19937& rng, int count = 6) {
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_int_distribution<int> small(0, 4);
  Series<double> s(family);
  for (int i = 0; i < count; ++i) {
    switch (family) {
      case Family::OddSine: s.add(Index::odd_sine(1 + small(rng)), value(rng)); break;
      case Family::InversePower: s.add(Index::inverse_power(2 + small(rng)), value(rng)); break;
      case Family::EvenPoly2D:
        s.add(Index::monomial(2 * small(rng), 2 * small(rng)), value(rng));
        break;
    }
  }
  return s;
}

inline double max_coefficient_gap(const Series<double>& a, const Series<double>& b) {
  double gap = 0;
  for (const auto& t : (a - b).terms()) gap = std::max(gap, std::abs(t.value));
  return gap;
}

}  // namespace mddim::testing
