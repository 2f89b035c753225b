#pragma once

// Squared residual E_m of the order-m partial sums.
//   eigen    exact, by orthogonality of the odd sines: E = sum_j d_j^2 / 2
//   blasius  exact, int_0^inf (N[F])^2 dz, by exact-degree quadrature in 1/(1+z)
//   gelfand  tensor Gauss-Legendre quadrature over [-1, 1]^2

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "mddim/quadrature.hpp"
#include "mddim/state.hpp"

namespace mddim {

inline constexpr int kDefaultQuadratureNodes = 30;

namespace detail {

template <RealNumber Real>
void require_residual_order(const DeformationState<Real>& state, int m) {
  if (m < 0 || m > state.order()) {
    throw InsufficientTerms(
        fmt::format("residual at order {} requested, state has order {}", m, state.order()));
  }
}

}  // namespace detail

// N[u, lambda] = u'' + lambda u + eps u^3 for the order-m partial sums.
template <RealNumber Real>
Series<Real> eigen_residual_series(const DeformationState<Real>& state, int m) {
  detail::require_residual_order(state, m);
  const Real epsilon = std::get<EigenProblem<Real>>(state.problem.kind).epsilon;
  const Series<Real> u = state.u.partial_sum(m);
  Series<Real> n = differentiate(u, 2);
  n += state.lambda_partial(m) * u;
  if (epsilon != 0) n += epsilon * multiply(multiply(u, u), u);
  return n;
}

template <RealNumber Real>
Real eigen_squared_residual(const DeformationState<Real>& state, int m) {
  const auto n = eigen_residual_series(state, m);
  if (!is_pure_odd_sine(n)) return squared_l2_norm(n);
  Real sum = 0;
  for (const auto& t : n.terms()) sum += t.value * t.value;
  return sum / 2;
}

// Same integral by Gauss-Legendre quadrature on [0, 1] of the pointwise
// residual, for cross-checking the orthogonality route.
template <RealNumber Real>
Real eigen_squared_residual_quadrature(const DeformationState<Real>& state, int m, int nodes) {
  detail::require_residual_order(state, m);
  const Real epsilon = std::get<EigenProblem<Real>>(state.problem.kind).epsilon;
  const Series<Real> u = state.u.partial_sum(m);
  const Series<Real> u2 = differentiate(u, 2);
  const Real lambda = state.lambda_partial(m);
  const auto& rule = cached_gauss_legendre<Real>(nodes);
  Real sum = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Real x = (rule.nodes[i] + 1) / 2;
    const Real value = evaluate_at(u, x);
    const Real r = evaluate_at(u2, x) + lambda * value + epsilon * value * value * value;
    sum += rule.weights[i] * r * r;
  }
  return sum / 2;
}

// N[F] = F''' + (z F'' + lambda F F'') / (2 lambda^2)
template <RealNumber Real>
Series<Real> blasius_residual_series(const DeformationState<Real>& state, int m) {
  detail::require_residual_order(state, m);
  const Real& lambda = std::get<BlasiusProblem<Real>>(state.problem.kind).lambda_stretch;
  const Series<Real> f = state.u.partial_sum(m);
  const Series<Real> f2 = differentiate(f, 2);
  Series<Real> n = differentiate(f, 3);
  n += (Real(1) / (2 * lambda * lambda)) * shift_decompose_z(f2);
  n += (Real(1) / (2 * lambda)) * multiply(f, f2);
  return n;
}

// Closed pairwise form sum a_i a_j / (i + j - 1). Hilbert-like: with
// coefficients in the 1e50 range it needs hundreds of digits. Kept as a
// cross-check of the quadrature route below.
template <RealNumber Real>
Real blasius_squared_residual_pairwise(const DeformationState<Real>& state, int m) {
  return squared_l2_norm(blasius_residual_series(state, m));
}

namespace detail {

// Value of sum_n c_n t^n and of sum_n |c_n| t^n (the rounding scale).
template <RealNumber Real>
std::pair<Real, Real> horner_with_scale(const std::vector<Real>& c, const Real& t) {
  using std::abs;
  Real value = 0;
  Real scale = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    value = value * t + *it;
    scale = scale * t + abs(*it);
  }
  return {value, scale};
}

template <RealNumber Real>
std::vector<Real> power_coefficients(const Series<Real>& s) {
  int top = 0;
  for (const auto& t : s.terms()) top = std::max(top, t.index.first);
  std::vector<Real> c(static_cast<std::size_t>(top + 1), Real(0));
  for (const auto& t : s.terms()) c[static_cast<std::size_t>(t.index.first)] = t.value;
  return c;
}

}  // namespace detail

// With t = 1/(1+z), int_0^inf N^2 dz = int_0^1 (N/t)^2 dt, and N/t is a
// polynomial in t. Gauss-Legendre with enough nodes integrates it exactly.
// N is evaluated pointwise from F, F'', F''' so only the scale of F itself
// (not of the product F F'') has to be carried by the working precision.
// A value not clearly above the rounding noise is refused.
template <RealNumber Real>
Real blasius_squared_residual(const DeformationState<Real>& state, int m) {
  using std::abs;
  detail::require_residual_order(state, m);
  const Real& lambda = std::get<BlasiusProblem<Real>>(state.problem.kind).lambda_stretch;
  const Series<Real> f = state.u.partial_sum(m);
  const auto c0 = detail::power_coefficients(f);
  const auto c2 = detail::power_coefficients(differentiate(f, 2));
  const auto c3 = detail::power_coefficients(differentiate(f, 3));
  const int top = static_cast<int>(c0.size() + c2.size());
  const auto& rule = cached_gauss_legendre<Real>(top);
  const Real a = 1 / (2 * lambda * lambda);
  const Real b = 1 / (2 * lambda);
  const Real unit = Real(4 * top) * epsilon<Real>();
  Real value = 0;
  Real noise = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Real t = (rule.nodes[i] + 1) / 2;
    const Real z = (1 - t) / t;
    const auto [v0, s0] = detail::horner_with_scale(c0, t);
    const auto [v2, s2] = detail::horner_with_scale(c2, t);
    const auto [v3, s3] = detail::horner_with_scale(c3, t);
    const Real r = (v3 + a * z * v2 + b * v0 * v2) / t;
    const Real scale = (s3 + a * z * s2 + b * (s0 * abs(v2) + abs(v0) * s2)) / t;
    const Real w = rule.weights[i] / 2;
    value += w * r * r;
    const Real error = unit * scale;
    noise += w * (2 * abs(r) * error + error * error);
  }
  if (!is_finite(value) || value <= 16 * noise) {
    throw PrecisionLoss(fmt::format("E_{} is below the rounding noise {:.2g} at {} digits", m,
                                    to_double(noise), digits<Real>()));
  }
  return value;
}

template <RealNumber Real>
Real gelfand_squared_residual(const DeformationState<Real>& state, int m,
                              int nodes = kDefaultQuadratureNodes) {
  using std::exp;
  detail::require_residual_order(state, m);
  const auto& problem = std::get<GelfandProblem<Real>>(state.problem.kind);
  const Series<Real> w = state.u.partial_sum(m);
  const Series<Real> lap = laplacian(w);
  const Real scale = state.lambda_partial(m) * exp(problem.center_value);
  const auto& rule = cached_gauss_legendre<Real>(nodes);
  Real sum = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const Real& x = rule.nodes[i];
      const Real& y = rule.nodes[j];
      const Real r = evaluate_at(lap, x, y) + scale * exp(evaluate_at(w, x, y));
      sum += rule.weights[i] * rule.weights[j] * r * r;
    }
  }
  return sum;
}

template <RealNumber Real>
Real squared_residual(const DeformationState<Real>& state, int m,
                      int nodes = kDefaultQuadratureNodes) {
  switch (state.problem.family()) {
    case Family::OddSine: return eigen_squared_residual(state, m);
    case Family::InversePower: return blasius_squared_residual(state, m);
    case Family::EvenPoly2D: return gelfand_squared_residual(state, m, nodes);
  }
  return Real(0);
}

// Size of the order-k term: L2 norm of u_k (for Blasius, of F_k', since the
// constant of F_k is not square integrable on [0, inf)).
template <RealNumber Real>
Real term_norm(const DeformationState<Real>& state, int k) {
  using std::sqrt;
  const auto& term = state.u[static_cast<std::size_t>(k)];
  if (term.family() == Family::InversePower) return sqrt(squared_l2_norm(differentiate(term, 1)));
  return sqrt(squared_l2_norm(term));
}

}  // namespace mddim
