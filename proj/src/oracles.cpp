#include "mddim/oracles.hpp"

#include <array>
#include <cmath>
#include <cstddef>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <boost/numeric/odeint.hpp>
#include <fmt/format.h>

#include "mddim/errors.hpp"

namespace mddim {

double OracleResult::parameter(const std::string& name) const {
  for (const auto& [key, value] : parameters) {
    if (key == name) return value;
  }
  throw Error(fmt::format("oracle result has no parameter '{}'", name));
}

namespace {

using BlasiusState = std::array<double, 3>;

// (f, f', f'') at eta_max for the initial curvature s. f'' = s exp(-int f / 2)
// keeps the sign of s, so f' is monotone and an early overshoot already fixes
// the sign of the far-field defect; integration stops there when asked.
BlasiusState integrate_blasius(double s, double step, double eta_max, bool stop_on_overshoot) {
  namespace odeint = boost::numeric::odeint;
  odeint::runge_kutta4<BlasiusState> stepper;
  BlasiusState y{0.0, 0.0, s};
  const auto rhs = [](const BlasiusState& f, BlasiusState& df, double) {
    df[0] = f[1];
    df[1] = f[2];
    df[2] = -0.5 * f[0] * f[2];
  };
  const auto steps = static_cast<long>(std::llround(eta_max / step));
  for (long i = 0; i < steps; ++i) {
    stepper.do_step(rhs, y, static_cast<double>(i) * step, step);
    if (stop_on_overshoot && y[1] > 2.0) break;
  }
  return y;
}

double far_field_defect(double s, double step, double eta_max) {
  return integrate_blasius(s, step, eta_max, true)[1] - 1.0;
}

}  // namespace

OracleResult blasius_shooting_oracle(double step, double eta_max) {
  if (!(step > 0)) throw OracleFailure("shooting step must be positive");
  if (!(eta_max >= 20)) throw OracleFailure("shooting needs eta_max >= 20");
  double lo = 0.1;
  double hi = 1.0;
  double f_lo = far_field_defect(lo, step, eta_max);
  double f_hi = far_field_defect(hi, step, eta_max);
  if (f_lo * f_hi > 0) {
    throw OracleFailure(fmt::format("bisection bracket [{}, {}] does not straddle f'(inf) = 1", lo, hi));
  }
  int iterations = 0;
  while (hi - lo > 1e-15 && iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = far_field_defect(mid, step, eta_max);
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  OracleResult out;
  out.observable = "f2_0";
  out.value = 0.5 * (lo + hi);
  out.method = "shooting, classic RK4, bisection on f'(eta_max) = 1";
  // far field f ~ eta - displacement
  const auto far = integrate_blasius(out.value, step, eta_max, false);
  out.parameters = {{"step", step},
                    {"eta_max", eta_max},
                    {"iterations", double(iterations)},
                    {"displacement", eta_max - far[0]}};
  return out;
}

namespace {

struct GelfandGrid {
  int n;
  double h;
  int interior;  // interior points per axis
  int unknowns;  // interior * interior
  int center;    // index of the (0, 0) node among the unknowns

  explicit GelfandGrid(int grid_n)
      : n(grid_n),
        h(2.0 / (grid_n - 1)),
        interior(grid_n - 2),
        unknowns((grid_n - 2) * (grid_n - 2)),
        center((grid_n / 2 - 1) * (grid_n - 2) + (grid_n / 2 - 1)) {}

  double coordinate(int i) const { return -1.0 + h * i; }
  int id(int i, int j) const { return (i - 1) * interior + (j - 1); }
};

// One Newton solve of F(u, lambda) = 0 with u(centre) = a. Returns false if
// the iteration fails to converge; u and lambda hold the last iterate.
bool newton_solve(const GelfandGrid& g, const std::vector<double>& boundary_load, double a,
                  Eigen::VectorXd& u, double& lambda, int& iterations) {
  const int n = g.unknowns;
  const double inv_h2 = 1.0 / (g.h * g.h);
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  for (iterations = 0; iterations < 50; ++iterations) {
    Eigen::VectorXd residual(n + 1);
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(static_cast<std::size_t>(6 * n + 2));
    for (int i = 1; i <= g.interior; ++i) {
      for (int j = 1; j <= g.interior; ++j) {
        const int row = g.id(i, j);
        const double e = std::exp(u[row]);
        double r = -4.0 * inv_h2 * u[row] + lambda * e + boundary_load[static_cast<std::size_t>(row)];
        entries.emplace_back(row, row, -4.0 * inv_h2 + lambda * e);
        const std::array<std::pair<int, int>, 4> neighbours{
            {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}}};
        for (const auto& [p, q] : neighbours) {
          if (p < 1 || p > g.interior || q < 1 || q > g.interior) continue;
          r += inv_h2 * u[g.id(p, q)];
          entries.emplace_back(row, g.id(p, q), inv_h2);
        }
        entries.emplace_back(row, n, e);
        residual[row] = r;
      }
    }
    residual[n] = u[g.center] - a;
    entries.emplace_back(n, g.center, 1.0);
    Eigen::SparseMatrix<double> jacobian(n + 1, n + 1);
    jacobian.setFromTriplets(entries.begin(), entries.end());
    lu.compute(jacobian);
    if (lu.info() != Eigen::Success) return false;
    const Eigen::VectorXd delta = lu.solve(-residual);
    if (lu.info() != Eigen::Success || !delta.allFinite()) return false;
    u += delta.head(n);
    lambda += delta[n];
    if (delta.lpNorm<Eigen::Infinity>() < 1e-12 * (1.0 + u.lpNorm<Eigen::Infinity>())) {
      ++iterations;
      return true;
    }
  }
  return false;
}

}  // namespace

OracleResult gelfand_fd_oracle(double center_value, const Series<double>& boundary, int grid_n) {
  if (grid_n < 41 || grid_n % 2 == 0) throw OracleFailure("grid_n must be odd and at least 41");
  if (boundary.family() != Family::EvenPoly2D) {
    throw OracleFailure("gelfand boundary data must be an EvenPoly2D series");
  }
  const GelfandGrid g(grid_n);
  const double inv_h2 = 1.0 / (g.h * g.h);
  // Dirichlet values move to the right-hand side.
  std::vector<double> load(static_cast<std::size_t>(g.unknowns), 0.0);
  const auto f = [&](int i, int j) { return evaluate_at(boundary, g.coordinate(i), g.coordinate(j)); };
  for (int i = 1; i <= g.interior; ++i) {
    for (int j = 1; j <= g.interior; ++j) {
      double b = 0;
      if (i == 1) b += f(0, j);
      if (i == g.interior) b += f(g.n - 1, j);
      if (j == 1) b += f(i, 0);
      if (j == g.interior) b += f(i, g.n - 1);
      load[static_cast<std::size_t>(g.id(i, j))] = inv_h2 * b;
    }
  }
  // Start from the harmonic extension of f (lambda = 0) and walk the centre
  // value to A in small steps; each Newton solve starts from the last.
  Eigen::VectorXd u = Eigen::VectorXd::Zero(g.unknowns);
  {
    std::vector<Eigen::Triplet<double>> entries;
    for (int i = 1; i <= g.interior; ++i) {
      for (int j = 1; j <= g.interior; ++j) {
        const int row = g.id(i, j);
        entries.emplace_back(row, row, -4.0 * inv_h2);
        if (i > 1) entries.emplace_back(row, g.id(i - 1, j), inv_h2);
        if (i < g.interior) entries.emplace_back(row, g.id(i + 1, j), inv_h2);
        if (j > 1) entries.emplace_back(row, g.id(i, j - 1), inv_h2);
        if (j < g.interior) entries.emplace_back(row, g.id(i, j + 1), inv_h2);
      }
    }
    Eigen::SparseMatrix<double> laplace(g.unknowns, g.unknowns);
    laplace.setFromTriplets(entries.begin(), entries.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(laplace);
    const Eigen::Map<const Eigen::VectorXd> rhs(load.data(), g.unknowns);
    u = lu.solve(-rhs);
  }
  const double start = u[g.center];
  double lambda = 0;
  const int stages = std::max(1, static_cast<int>(std::ceil(std::abs(center_value - start) / 0.25)));
  int total_iterations = 0;
  for (int s = 1; s <= stages; ++s) {
    const double a = start + (center_value - start) * s / stages;
    int iterations = 0;
    if (!newton_solve(g, load, a, u, lambda, iterations)) {
      throw OracleFailure(fmt::format(
          "newton diverged at centre value {} (target {}), last lambda {}", a, center_value, lambda));
    }
    total_iterations += iterations;
  }
  OracleResult out;
  out.observable = "lambda";
  out.value = lambda;
  out.method = "five-point finite differences, Newton with centre constraint, continuation in A";
  out.parameters = {{"A", center_value},
                    {"grid_n", double(grid_n)},
                    {"h", g.h},
                    {"continuation_stages", double(stages)},
                    {"newton_iterations", double(total_iterations)}};
  return out;
}

}  // namespace mddim
