#pragma once

// Convergence-control optimization: argmin of E_{fit_order} over a grid of
// c0 (and c1 for Gelfand), refined by one Brent pass per axis inside the
// bracket around the grid minimum.

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "mddim/solve.hpp"

namespace mddim {

// count points strictly inside (from, to), evenly spaced.
struct GridRange {
  double from = -3.0;
  double to = 0.0;
  int count = 61;

  double at(int i) const { return from + (to - from) * (i + 1) / (count + 1); }
};

struct LandscapePoint {
  double c0 = 0;
  std::optional<double> c1;
  // E_{fit_order}; +inf where the solve failed or produced a non-finite value
  double residual = std::numeric_limits<double>::infinity();
};

struct OptimizeResult {
  double c0 = 0;
  std::optional<double> c1;
  double residual = std::numeric_limits<double>::infinity();
  // false when the grid minimum sits on the edge of the range or the
  // landscape is flat; the refinement is then skipped
  bool interior = false;
  std::string note;
  std::vector<LandscapePoint> landscape;
};

namespace detail {

// Objective on log scale: E spans tens of decades between grid points.
inline double log_objective(double e) {
  if (!std::isfinite(e) || e < 0) return std::numeric_limits<double>::infinity();
  if (e == 0) return -std::numeric_limits<double>::max();
  return std::log10(e);
}

template <class F>
std::vector<double> evaluate_all(const F& f, const std::vector<double>& xs, unsigned threads) {
  std::vector<double> out(xs.size(), std::numeric_limits<double>::infinity());
  if (threads <= 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < xs.size(); i += threads) out[i] = f(xs[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

// Brent refinement of f on [lo, hi]; keeps the grid point if Brent does not
// improve on it.
template <class F>
std::pair<double, double> refine(const F& f, double lo, double hi, double x0, double f0) {
  const auto g = [&](double x) { return log_objective(f(x)); };
  const auto [x, fx] = boost::math::tools::brent_find_minima(g, lo, hi, 40);
  if (fx < log_objective(f0)) return {x, f(x)};
  return {x0, f0};
}

}  // namespace detail

// Minimizes a scalar landscape over a grid plus one refinement pass.
inline OptimizeResult minimize_on_grid(const std::function<double(double)>& f, const GridRange& grid,
                                       unsigned threads = 1) {
  OptimizeResult out;
  std::vector<double> xs;
  for (int i = 0; i < grid.count; ++i) xs.push_back(grid.at(i));
  const auto values = detail::evaluate_all(f, xs, threads);
  std::size_t best = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.landscape.push_back({xs[i], std::nullopt, values[i]});
    if (detail::log_objective(values[i]) < detail::log_objective(values[best])) best = i;
  }
  out.c0 = xs[best];
  out.residual = values[best];
  const bool flat = std::all_of(values.begin(), values.end(), [&](double v) {
    return detail::log_objective(v) == detail::log_objective(values[0]);
  });
  if (flat) {
    out.note = "flat landscape: no interior minimum";
    return out;
  }
  if (best == 0 || best + 1 == xs.size()) {
    out.note = "minimum on the edge of the grid";
    return out;
  }
  out.interior = true;
  std::tie(out.c0, out.residual) = detail::refine(f, xs[best - 1], xs[best + 1], out.c0, out.residual);
  return out;
}

// Two-axis version: grid over (x, y), then one pass along x and one along y.
inline OptimizeResult minimize_on_grid_2d(const std::function<double(double, double)>& f,
                                          const GridRange& gx, const GridRange& gy,
                                          unsigned threads = 1) {
  OptimizeResult out;
  std::vector<double> flat_index;
  for (int i = 0; i < gx.count * gy.count; ++i) flat_index.push_back(i);
  const auto values = detail::evaluate_all(
      [&](double k) {
        const int i = static_cast<int>(k) / gy.count;
        const int j = static_cast<int>(k) % gy.count;
        return f(gx.at(i), gy.at(j));
      },
      flat_index, threads);
  int bi = 0;
  int bj = 0;
  double best = values[0];
  for (int i = 0; i < gx.count; ++i) {
    for (int j = 0; j < gy.count; ++j) {
      const double v = values[static_cast<std::size_t>(i * gy.count + j)];
      out.landscape.push_back({gx.at(i), gy.at(j), v});
      if (detail::log_objective(v) < detail::log_objective(best)) {
        best = v;
        bi = i;
        bj = j;
      }
    }
  }
  out.c0 = gx.at(bi);
  out.c1 = gy.at(bj);
  out.residual = best;
  if (!std::isfinite(detail::log_objective(best))) {
    out.note = "flat landscape: no finite residual on the grid";
    return out;
  }
  if (bi == 0 || bi + 1 == gx.count || bj == 0 || bj + 1 == gy.count) {
    out.note = "minimum on the edge of the grid";
    return out;
  }
  out.interior = true;
  const double y0 = *out.c1;
  std::tie(out.c0, out.residual) = detail::refine([&](double x) { return f(x, y0); },
                                                  gx.at(bi - 1), gx.at(bi + 1), out.c0, out.residual);
  const double x0 = out.c0;
  double y = y0;
  std::tie(y, out.residual) = detail::refine([&](double v) { return f(x0, v); }, gy.at(bj - 1),
                                             gy.at(bj + 1), y0, out.residual);
  out.c1 = y;
  return out;
}

inline constexpr int kDefaultFitOrder = 3;

// E_{fit_order} for the spec with c0 (and c1) replaced; +inf on solver errors.
template <RealNumber Real>
double fit_residual(ProblemSpec<Real> spec, int fit_order, double c0, std::optional<double> c1) {
  spec.c0 = Real(c0);
  if (c1) spec.c1 = Real(*c1);
  spec.max_order = fit_order;
  if (spec.family() == Family::EvenPoly2D) spec.truncation = default_gelfand_truncation(fit_order);
  SolveOptions options;
  options.residual_orders = {fit_order};
  try {
    const auto result = solve(spec, options);
    return to_double(result.residual(fit_order));
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

// Default search ranges: c0 in (-3, 0) for eigen and Blasius; for Gelfand,
// whose mapping has positive denominators, c0 in (0, 3) and c1 in (-3, 0).
inline GridRange default_c0_grid(Family family) {
  return family == Family::EvenPoly2D ? GridRange{0.0, 3.0, 61} : GridRange{-3.0, 0.0, 61};
}

template <RealNumber Real>
OptimizeResult optimize_controls(const ProblemSpec<Real>& spec, int fit_order = kDefaultFitOrder,
                                 std::optional<GridRange> c0_range = {},
                                 std::optional<GridRange> c1_grid = {}, unsigned threads = 0) {
  const GridRange c0_grid = c0_range.value_or(default_c0_grid(spec.family()));
  if (threads == 0) {
    threads = std::same_as<Real, double> ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  }
  // The MPFR default precision is process wide; keep extended runs serial.
  if (!std::same_as<Real, double>) threads = 1;
  if (spec.family() == Family::EvenPoly2D) {
    const GridRange gy = c1_grid.value_or(GridRange{-3.0, 0.0, 61});
    return minimize_on_grid_2d(
        [&](double c0, double c1) { return fit_residual(spec, fit_order, c0, c1); }, c0_grid, gy,
        threads);
  }
  return minimize_on_grid([&](double c0) { return fit_residual(spec, fit_order, c0, std::nullopt); },
                          c0_grid, threads);
}

}  // namespace mddim
