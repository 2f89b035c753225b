#pragma once

// Order-k residual terms delta_k = D_k{N[sum u_n q^n]} of the three problems.
// Where an eigenvalue is unknown, delta_k is affine in Lambda = lambda_k.

#include <fmt/format.h>

#include "mddim/affine.hpp"
#include "mddim/state.hpp"

namespace mddim {

namespace detail {

template <RealNumber Real>
void require_order(const DeformationState<Real>& state, int k, bool needs_lambda) {
  if (k < 0 || k > state.order()) {
    throw InsufficientTerms(fmt::format("delta_{} needs u_0..u_{}, state has order {}", k, k,
                                        state.order()));
  }
  if (needs_lambda && static_cast<int>(state.lambda.size()) < k) {
    throw InsufficientTerms(fmt::format("delta_{} needs lambda_0..lambda_{}", k, k - 1));
  }
}

}  // namespace detail

// delta_k = u_k'' + sum_{i=0}^{k} lambda_i u_{k-i} + eps sum_i u_{k-i} sum_j u_j u_{i-j}
template <RealNumber Real>
AffineSeries<Real> eigen_delta(DeformationState<Real>& state, int k) {
  detail::require_order(state, k, true);
  const auto& problem = std::get<EigenProblem<Real>>(state.problem.kind);
  const auto& u = state.u;
  Series<Real> base = differentiate(u[k], 2);
  for (int i = 0; i < k; ++i) base += state.lambda[i] * u[k - i];
  if (problem.epsilon != 0) base += problem.epsilon * state.powers.term(u, 3, k);
  return AffineSeries<Real>(std::move(base), u[0]);
}

// delta_k = F_k''' + z F_k'' / (2 lambda^2) + sum_n F_{k-n} F_n'' / (2 lambda)
template <RealNumber Real>
Series<Real> blasius_delta(DeformationState<Real>& state, int k) {
  detail::require_order(state, k, false);
  const Real& lambda = std::get<BlasiusProblem<Real>>(state.problem.kind).lambda_stretch;
  const int truncation = state.problem.truncation;
  while (state.second_derivatives.size() <= static_cast<std::size_t>(k)) {
    state.second_derivatives.push_back(differentiate(state.u[state.second_derivatives.size()], 2));
  }
  const auto& f = state.u;
  const auto& f2 = state.second_derivatives;
  Series<Real> delta = differentiate(f[k], 3);
  delta += (Real(1) / (2 * lambda * lambda)) * shift_decompose_z(f2[k]);
  delta += (Real(1) / (2 * lambda)) * convolve_product(f, f2, k, truncation);
  for (const auto& t : delta.terms()) {
    if (t.index.first < 2) {
      throw BasisEscape(fmt::format("blasius delta_{} carries {} outside (1+z)^-n, n >= 2", k,
                                    to_string(Family::InversePower, t.index)));
    }
  }
  return delta;
}

// delta_k = lap w_k + e^A sum_{i=0}^{k} lambda_{k-i} G_i, with G_i = D_i[e^w].
// The i = 0 term carries the unknown lambda_k.
template <RealNumber Real>
AffineSeries<Real> gelfand_delta(DeformationState<Real>& state, int k) {
  using std::exp;
  detail::require_order(state, k, true);
  const Real scale = exp(std::get<GelfandProblem<Real>>(state.problem.kind).center_value);
  const auto& w = state.u;
  Series<Real> base = laplacian(w[k]);
  for (int i = 1; i <= k; ++i) {
    base += (scale * state.lambda[k - i]) * state.exp_table.term(w, i);
  }
  Series<Real> slope = scale * state.exp_table.term(w, 0);
  return AffineSeries<Real>(std::move(base), std::move(slope));
}

}  // namespace mddim
