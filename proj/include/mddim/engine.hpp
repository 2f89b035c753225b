#pragma once

// The order-by-order deformation loop
//
//   u_k = chi_k u_{k-1} + c0 J[delta_{k-1}] + (primary solution),
//
// with the unknown eigenvalue increment resolved by secular elimination
// (eigen, before J) or by the centre condition w_k(0,0) = 0 (Gelfand, after
// the primary solution is attached).

#include <utility>

#include <fmt/format.h>

#include "mddim/affine.hpp"
#include "mddim/deltas.hpp"
#include "mddim/state.hpp"

namespace mddim {

// Zeroes the sin(pi x) coefficient of delta. Returns Lambda* and delta with
// Lambda* substituted; the sin(pi x) coefficient of the result is exactly 0.
template <RealNumber Real>
std::pair<Real, Series<Real>> solve_secular(const AffineSeries<Real>& delta) {
  if (delta.family() != Family::OddSine) {
    throw FamilyMismatch("secular elimination acts on OddSine residuals");
  }
  const Index primary = Index::odd_sine(1);
  const auto c = delta.coefficient(primary);
  if (c.slope == 0) {
    throw DegenerateCondition("coefficient of sin(pi x) does not depend on the eigenvalue");
  }
  const Real lambda = -c.base / c.slope;
  Series<Real> out = delta.substitute(lambda);
  out.add(primary, Real(-out.coefficient(primary)));
  return {lambda, std::move(out)};
}

// Solves w(0,0) = 0 for Lambda. The returned series vanishes at the origin.
template <RealNumber Real>
std::pair<Real, Series<Real>> solve_point_condition(const AffineSeries<Real>& w) {
  if (w.family() != Family::EvenPoly2D) {
    throw FamilyMismatch("the point condition acts on EvenPoly2D series");
  }
  const Index origin = Index::monomial(0, 0);
  const auto c = w.coefficient(origin);
  if (c.slope == 0) {
    throw DegenerateCondition("w(0,0) does not depend on the eigenvalue increment");
  }
  const Real lambda = -c.base / c.slope;
  Series<Real> out = w.substitute(lambda);
  out.add(origin, Real(-out.coefficient(origin)));
  return {lambda, std::move(out)};
}

// u_m = u_hat + a sin(pi x) with a chosen so that int_0^1 (u_0+...+u_m)^2 = 1.
// Of the two roots, the one keeping the cumulative sin(pi x) coefficient on
// the side of its previous value is taken.
template <RealNumber Real>
Series<Real> attach_primary_eigen(const DeformationState<Real>& state, const Series<Real>& u_hat,
                                  int m) {
  using std::sqrt;
  const Index primary = Index::odd_sine(1);
  Series<Real> cumulative = u_hat;
  Real previous = 0;
  for (int n = 0; n < m; ++n) {
    cumulative += state.u[n];
    previous += state.u[n].coefficient(primary);
  }
  if (!is_pure_odd_sine(cumulative)) {
    throw BasisEscape("eigenfunction left the odd-sine basis");
  }
  Real rest = 0;
  for (const auto& t : cumulative.terms()) {
    if (t.index != primary) rest += t.value * t.value;
  }
  const Real discriminant = 2 - rest;
  if (discriminant < 0) {
    throw NormalizationInfeasible(fmt::format(
        "order {}: higher harmonics already carry squared norm {} > 1", m, to_double(rest) / 2));
  }
  const Real root = sqrt(discriminant);
  const Real target = previous < 0 ? Real(-root) : root;
  Series<Real> out = u_hat;
  out.add(primary, target - cumulative.coefficient(primary));
  return out;
}

// Blasius: u_k = u_hat + a_0 + a_1 (1+z)^-1 with u_k(0) = u_k'(0) = 0.
// Eigen: the boundary conditions are built into the basis; identity.
template <RealNumber Real>
Series<Real> attach_primary_boundary(const DeformationState<Real>& state,
                                     const Series<Real>& u_hat, int /*k*/) {
  switch (state.problem.family()) {
    case Family::OddSine:
      return u_hat;
    case Family::InversePower: {
      const Real s = evaluate_at(u_hat, Real(0));
      const Real t = evaluate_at(differentiate(u_hat, 1), Real(0));
      // [[1, 1], [0, -1]] (a0, a1) = (-s, -t)
      const Real det = -1;
      if (det == 0) throw SingularSystem("primary solution system is singular");
      Series<Real> out = u_hat;
      out.add(Index::inverse_power(0), -s - t);
      out.add(Index::inverse_power(1), t);
      return out;
    }
    case Family::EvenPoly2D:
      throw FamilyMismatch("gelfand primary solutions are affine in the eigenvalue increment");
  }
  return u_hat;
}

// Boundary data Gamma_k = chi_k w_{k-1} + c1 [w_{k-1} + (1 - chi_k)(A - f)].
template <RealNumber Real>
Series<Real> gelfand_gamma(const DeformationState<Real>& state, int k) {
  const auto& problem = std::get<GelfandProblem<Real>>(state.problem.kind);
  const Real& c1 = state.c_boundary.at(0);
  const auto& previous = state.u[k - 1];
  Series<Real> gamma = Real(chi(k)) * previous;
  Series<Real> defect = previous;
  if (chi(k) == 0) {
    defect += Series<Real>::constant(Family::EvenPoly2D, problem.center_value);
    defect -= problem.boundary;
  }
  gamma += c1 * defect;
  return gamma;
}

namespace detail {

// s - s(x,1) - s(1,y) + s(1,1): removes the boundary values of s.
template <RealNumber Real>
Series<Real> strip_boundary(const Series<Real>& s) {
  Series<Real> out = s;
  out -= boundary_trace(s, Edge::YPlus);
  out -= boundary_trace(s, Edge::XPlus);
  out += Series<Real>::constant(Family::EvenPoly2D, evaluate_at(s, Real(1), Real(1)));
  return out;
}

// g(x,1) + g(1,y) - g(1,1): a function with boundary values g.
template <RealNumber Real>
Series<Real> boundary_extension(const Series<Real>& g) {
  Series<Real> out = boundary_trace(g, Edge::YPlus);
  out += boundary_trace(g, Edge::XPlus);
  out -= Series<Real>::constant(Family::EvenPoly2D, evaluate_at(g, Real(1), Real(1)));
  return out;
}

}  // namespace detail

// Gelfand: w_k = w_hat - w_hat(x,1) - w_hat(1,y) + w_hat(1,1)
//               + Gamma_k(x,1) + Gamma_k(1,y) - Gamma_k(1,1).
// Gamma_k does not depend on Lambda, so it enters the base part only.
template <RealNumber Real>
AffineSeries<Real> attach_primary_boundary(const DeformationState<Real>& state,
                                           const AffineSeries<Real>& w_hat, int k) {
  if (state.problem.family() != Family::EvenPoly2D) {
    throw FamilyMismatch("affine primary attachment is only used by the gelfand problem");
  }
  AffineSeries<Real> out = w_hat.map([](const Series<Real>& s) { return detail::strip_boundary(s); });
  out.base += detail::boundary_extension(gelfand_gamma(state, k));
  return out;
}

template <RealNumber Real>
DeformationState<Real> make_initial_state(const ProblemSpec<Real>& spec) {
  spec.validate();
  DeformationState<Real> state(spec);
  switch (spec.family()) {
    case Family::OddSine:
      state.u.push_back(attach_primary_eigen(state, Series<Real>(Family::OddSine), 0));
      break;
    case Family::InversePower: {
      // F_0 = ((1+z)^-1 - 1) / lambda
      const Real& lambda = std::get<BlasiusProblem<Real>>(spec.kind).lambda_stretch;
      Series<Real> f0(Family::InversePower);
      f0.add(Index::inverse_power(1), Real(1) / lambda);
      f0.add(Index::inverse_power(0), Real(-1) / lambda);
      state.u.push_back(std::move(f0));
      break;
    }
    case Family::EvenPoly2D:
      state.u.push_back(Series<Real>(Family::EvenPoly2D, spec.truncation));
      break;
  }
  return state;
}

// Appends u_k (and lambda_{k-1}) for k = state.order() + 1.
template <RealNumber Real>
void advance(DeformationState<Real>& state) {
  const int k = state.order() + 1;
  const Real& c0 = state.c0;
  const Real carry = Real(chi(k));
  switch (state.problem.family()) {
    case Family::OddSine: {
      const auto delta = eigen_delta(state, k - 1);
      auto [lambda, resolved] = solve_secular(delta);
      Series<Real> u_hat = carry * state.u[k - 1];
      u_hat += c0 * apply_mapping(state.mapping, resolved);
      Series<Real> uk = attach_primary_eigen(state, u_hat, k);
      state.lambda.push_back(lambda);
      state.u.push_back(std::move(uk));
      break;
    }
    case Family::InversePower: {
      const auto delta = blasius_delta(state, k - 1);
      Series<Real> u_hat = carry * state.u[k - 1];
      u_hat += c0 * apply_mapping(state.mapping, delta);
      state.u.push_back(attach_primary_boundary(state, u_hat, k));
      break;
    }
    case Family::EvenPoly2D: {
      const int cap = state.problem.truncation;
      const auto delta = gelfand_delta(state, k - 1);
      AffineSeries<Real> w_hat = delta.map([&](const Series<Real>& s) {
        return (c0 * apply_mapping(state.mapping, s)).truncated(cap);
      });
      w_hat.base += carry * state.u[k - 1];
      auto [lambda, wk] = solve_point_condition(attach_primary_boundary(state, w_hat, k));
      state.lambda.push_back(lambda);
      state.u.push_back(wk.truncated(cap));
      break;
    }
  }
}

template <RealNumber Real>
DeformationState<Real> deformation_step(const DeformationState<Real>& state) {
  DeformationState<Real> next = state;
  advance(next);
  return next;
}

}  // namespace mddim
