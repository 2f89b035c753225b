#pragma once

// End-to-end drivers: step the deformation loop to max_order and record the
// problem observable and the squared residual per order.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mddim/engine.hpp"
#include "mddim/residual.hpp"

namespace mddim {

struct SolveOptions {
  // Orders at which E_m is evaluated; empty means every order 1..max_order.
  std::vector<int> residual_orders;
  bool residuals = true;
  int quadrature_nodes = kDefaultQuadratureNodes;
};

template <RealNumber Real>
struct OrderRecord {
  int order = 0;
  // eigen, gelfand: lambda_0 + ... + lambda_{m-1}; blasius: f''(0)
  Real observable = 0;
  std::optional<Real> residual;
  // set when E_m was requested but the working precision could not resolve it
  std::optional<std::string> residual_error;
};

template <RealNumber Real>
struct SolveResult {
  DeformationState<Real> state;
  std::string observable_name;
  std::vector<OrderRecord<Real>> records;

  const OrderRecord<Real>& at(int order) const {
    for (const auto& r : records) {
      if (r.order == order) return r;
    }
    throw InsufficientTerms("no record for order " + std::to_string(order));
  }

  Real residual(int order) const {
    const auto& r = at(order);
    if (r.residual_error) throw PrecisionLoss(*r.residual_error);
    if (!r.residual) throw InsufficientTerms("residual not evaluated at order " + std::to_string(order));
    return *r.residual;
  }
};

// f''(0) = lambda^2 F''(0) for the order-m partial sum, from f = F + eta, z = lambda eta.
template <RealNumber Real>
Real blasius_wall_shear(const DeformationState<Real>& state, int m) {
  const Real& lambda = std::get<BlasiusProblem<Real>>(state.problem.kind).lambda_stretch;
  Real f2 = 0;
  for (int n = 0; n <= m; ++n) f2 += evaluate_at(differentiate(state.u[n], 2), Real(0));
  return lambda * lambda * f2;
}

// f'(0) = lambda F'(0) + 1 for the order-m partial sum.
template <RealNumber Real>
Real blasius_wall_velocity(const DeformationState<Real>& state, int m) {
  const Real& lambda = std::get<BlasiusProblem<Real>>(state.problem.kind).lambda_stretch;
  Real f1 = 0;
  for (int n = 0; n <= m; ++n) f1 += evaluate_at(differentiate(state.u[n], 1), Real(0));
  return lambda * f1 + 1;
}

template <RealNumber Real>
Real observable(const DeformationState<Real>& state, int m) {
  if (state.problem.family() == Family::InversePower) return blasius_wall_shear(state, m);
  return state.lambda_partial(m);
}

inline std::string observable_name(Family family) {
  return family == Family::InversePower ? "f2_0" : "lambda_partial";
}

template <RealNumber Real>
SolveResult<Real> solve(const ProblemSpec<Real>& spec, const SolveOptions& options = {}) {
  SolveResult<Real> result{make_initial_state(spec), observable_name(spec.family()), {}};
  auto& state = result.state;
  const auto wants_residual = [&](int m) {
    if (!options.residuals) return false;
    if (options.residual_orders.empty()) return true;
    return std::find(options.residual_orders.begin(), options.residual_orders.end(), m) !=
           options.residual_orders.end();
  };
  for (int m = 1; m <= spec.max_order; ++m) {
    advance(state);
    OrderRecord<Real> record{m, observable(state, m), std::nullopt, std::nullopt};
    if (wants_residual(m)) {
      try {
        record.residual = squared_residual(state, m, options.quadrature_nodes);
        state.residual_history.emplace_back(m, *record.residual);
      } catch (const PrecisionLoss& e) {
        record.residual_error = e.what();
      }
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

template <RealNumber Real>
SolveResult<Real> eigen_solve(const ProblemSpec<Real>& spec, const SolveOptions& options = {}) {
  if (spec.family() != Family::OddSine) throw InvalidProblem("eigen_solve needs an eigen spec");
  return solve(spec, options);
}

template <RealNumber Real>
SolveResult<Real> blasius_solve(const ProblemSpec<Real>& spec, const SolveOptions& options = {}) {
  if (spec.family() != Family::InversePower) {
    throw InvalidProblem("blasius_solve needs a blasius spec");
  }
  return solve(spec, options);
}

template <RealNumber Real>
SolveResult<Real> gelfand_solve(const ProblemSpec<Real>& spec, const SolveOptions& options = {}) {
  if (spec.family() != Family::EvenPoly2D) {
    throw InvalidProblem("gelfand_solve needs a gelfand spec");
  }
  return solve(spec, options);
}

}  // namespace mddim
