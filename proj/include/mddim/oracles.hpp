#pragma once

// Independent numerical references for the series solutions. Both work in
// double precision and share no code with the deformation engine.

#include <string>
#include <vector>

#include "mddim/series.hpp"

namespace mddim {

struct OracleResult {
  std::string observable;
  double value = 0;
  std::string method;
  // step/grid parameters and diagnostics, in insertion order
  std::vector<std::pair<std::string, double>> parameters;

  double parameter(const std::string& name) const;
};

// f''(0) of f''' + f f''/2 = 0, f(0) = f'(0) = 0, f'(inf) = 1, by shooting
// with classic RK4 and bisection on f'(eta_max) = 1.
OracleResult blasius_shooting_oracle(double step, double eta_max);

// lambda of lap u + lambda e^u = 0 on [-1, 1]^2 with u = f on the boundary and
// u(0, 0) = A. Five-point differences on a grid_n x grid_n grid; Newton on the
// discrete system augmented by the centre constraint, with lambda as the extra
// unknown, continued in A from the f-only solution.
OracleResult gelfand_fd_oracle(double center_value, const Series<double>& boundary, int grid_n);

}  // namespace mddim
