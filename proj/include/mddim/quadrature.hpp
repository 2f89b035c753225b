#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mddim/errors.hpp"
#include "mddim/scalar.hpp"

namespace mddim {

template <RealNumber Real>
struct QuadratureRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// n-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on P_n.
template <RealNumber Real>
QuadratureRule<Real> gauss_legendre(int n) {
  using std::abs;
  using std::cos;
  if (n < 1) throw Error("gauss_legendre needs at least one node");
  QuadratureRule<Real> rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const Real tolerance = 4 * epsilon<Real>();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real x = cos(pi<Real>() * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real derivative = 0;
    for (int iteration = 0; iteration < 100; ++iteration) {
      Real p0 = 1;
      Real p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = Real(n) * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / derivative;
      x -= dx;
      if (abs(dx) <= tolerance) break;
    }
    // refresh the derivative at the converged node
    Real p0 = 1;
    Real p1 = x;
    for (int k = 2; k <= n; ++k) {
      Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    derivative = n == 1 ? Real(1) : Real(n) * (x * p1 - p0) / (x * x - 1);
    const Real w = 2 / ((1 - x * x) * derivative * derivative);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

// Rules are reused across orders of one run; keyed by node count and the
// active precision.
template <RealNumber Real>
const QuadratureRule<Real>& cached_gauss_legendre(int n) {
  thread_local std::map<std::pair<int, unsigned>, QuadratureRule<Real>> cache;
  const auto key = std::make_pair(n, digits<Real>());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gauss_legendre<Real>(n)).first;
  return it->second;
}

}  // namespace mddim
