#pragma once

#include <utility>
#include <vector>

#include "mddim/homotopy.hpp"
#include "mddim/inverse_map.hpp"
#include "mddim/problem.hpp"

namespace mddim {

// Accumulated solution u_0..u_m, eigenvalue increments lambda_0..lambda_{m-1}
// and the per-solve memo tables. A state is confined to one worker.
template <RealNumber Real>
struct DeformationState {
  explicit DeformationState(ProblemSpec<Real> spec)
      : problem(std::move(spec)),
        u(problem.family()),
        c0(problem.c0),
        mapping(problem.mapping),
        powers(problem.truncation),
        second_derivatives(problem.family()),
        exp_table(Real(1), problem.truncation) {
    if (problem.c1) c_boundary.push_back(*problem.c1);
  }

  ProblemSpec<Real> problem;
  HomotopySequence<Real> u;
  std::vector<Real> lambda;
  Real c0;
  std::vector<Real> c_boundary;
  MappingSpec<Real> mapping;
  std::vector<std::pair<int, Real>> residual_history;

  PowerTable<Real> powers;                  // eigen: D_m[u^2], D_m[u^3]
  HomotopySequence<Real> second_derivatives;  // blasius: F_m''
  ExpTable<Real> exp_table;                 // gelfand: G_m = D_m[e^w]

  // Highest order m for which u_m is known.
  int order() const { return static_cast<int>(u.size()) - 1; }

  // lambda_0 + ... + lambda_{m-1}
  Real lambda_partial(int m) const {
    Real sum = 0;
    for (int n = 0; n < m && n < static_cast<int>(lambda.size()); ++n) sum += lambda[n];
    return sum;
  }
};

// chi_k: 0 for k <= 1, 1 otherwise.
inline int chi(int k) { return k > 1 ? 1 : 0; }

}  // namespace mddim
