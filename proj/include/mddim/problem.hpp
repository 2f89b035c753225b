#pragma once

// Problem definitions: the nonlinear eigenvalue problem
//     u'' + lambda u + eps u^3 = 0,  u(0) = u(1) = 0,  int_0^1 u^2 = 1,
// the Blasius boundary layer in the stretched variable z = lambda eta,
//     F''' + (z + lambda F) F'' / (2 lambda^2) = 0,  F(0) = 0, F'(0) = -1/lambda,
// and the Gelfand (Bratu) problem on [-1, 1]^2 parameterized by u(0,0) = A,
//     lap w + lambda e^A e^w = 0,  w = f - A on the boundary,  w(0,0) = 0.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "mddim/errors.hpp"
#include "mddim/inverse_map.hpp"
#include "mddim/series.hpp"

namespace mddim {

template <RealNumber Real>
struct EigenProblem {
  Real epsilon = 1;
};

template <RealNumber Real>
struct BlasiusProblem {
  Real lambda_stretch;
};

template <RealNumber Real>
struct GelfandProblem {
  Real center_value;
  Series<Real> boundary{Family::EvenPoly2D};
  std::string boundary_name = "zero";
};

template <RealNumber Real>
using ProblemKind = std::variant<EigenProblem<Real>, BlasiusProblem<Real>, GelfandProblem<Real>>;

template <RealNumber Real>
struct ProblemSpec {
  ProblemKind<Real> kind;
  MappingSpec<Real> mapping;
  Real c0;
  std::optional<Real> c1;
  int max_order = 10;
  unsigned precision_digits = digits<Real>();
  // Maximal basis index kept by products; kUnbounded keeps every term.
  int truncation = kUnbounded;

  Family family() const {
    return std::visit(
        [](const auto& k) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, EigenProblem<Real>>) {
            return Family::OddSine;
          } else if constexpr (std::is_same_v<K, BlasiusProblem<Real>>) {
            return Family::InversePower;
          } else {
            return Family::EvenPoly2D;
          }
        },
        kind);
  }

  std::string name() const {
    return std::visit(
        [](const auto& k) -> std::string {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, EigenProblem<Real>>) {
            return "eigen";
          } else if constexpr (std::is_same_v<K, BlasiusProblem<Real>>) {
            return "blasius";
          } else {
            return "gelfand";
          }
        },
        kind);
  }

  void validate() const {
    if (mapping.family() != family()) {
      throw InvalidProblem(fmt::format("{} problem needs a {} mapping, got {}", name(),
                                       to_string(family()), mapping.name()));
    }
    if (max_order < 0) throw InvalidProblem("max_order must be >= 0");
    if (c0 == 0) throw InvalidProblem("c0 must be nonzero");
    if (truncation < 0) throw InvalidProblem("truncation must be >= 0");
    if (const auto* b = std::get_if<BlasiusProblem<Real>>(&kind)) {
      if (!(b->lambda_stretch > 0)) throw InvalidProblem("lambda_stretch must be > 0");
    }
    if (const auto* g = std::get_if<GelfandProblem<Real>>(&kind)) {
      if (!c1) throw InvalidProblem("the gelfand problem needs the boundary control c1");
      if (*c1 == 0) throw InvalidProblem("c1 must be nonzero");
      if (g->boundary.family() != Family::EvenPoly2D || !is_even_poly(g->boundary)) {
        throw InvalidProblem("gelfand boundary data must be even in x and y");
      }
    }
  }
};

// Default truncation for the Gelfand products: each order raises the
// exponent by 2 per axis.
inline int default_gelfand_truncation(int max_order) { return 2 * (max_order + 2); }

template <RealNumber Real>
ProblemSpec<Real> eigen_spec(Real epsilon, MappingSpec<Real> mapping, Real c0, int max_order) {
  ProblemSpec<Real> spec{EigenProblem<Real>{epsilon}, std::move(mapping), c0, std::nullopt};
  spec.max_order = max_order;
  return spec;
}

template <RealNumber Real>
ProblemSpec<Real> blasius_spec(Real lambda_stretch, MappingSpec<Real> mapping, Real c0,
                               int max_order) {
  ProblemSpec<Real> spec{BlasiusProblem<Real>{lambda_stretch}, std::move(mapping), c0, std::nullopt};
  spec.max_order = max_order;
  return spec;
}

template <RealNumber Real>
ProblemSpec<Real> gelfand_spec(Real center_value, Series<Real> boundary, std::string boundary_name,
                               MappingSpec<Real> mapping, Real c0, Real c1, int max_order) {
  ProblemSpec<Real> spec{
      GelfandProblem<Real>{center_value, std::move(boundary), std::move(boundary_name)},
      std::move(mapping), c0, c1};
  spec.max_order = max_order;
  spec.truncation = default_gelfand_truncation(max_order);
  return spec;
}

// ---------------------------------------------------------------------------
// Gelfand boundary presets, coefficients as published.

struct GelfandPreset {
  std::string name;
  std::string formula;
  // Convergence controls quoted with the preset.
  double c0;
  double c1;
};

inline const std::vector<GelfandPreset>& gelfand_presets() {
  static const std::vector<GelfandPreset> presets = {
      {"zero", "0", 0.75, -0.75},
      {"quadratic-plus", "(1+x^2)(1+y^2)/10", 0.5, -0.5},
      {"quadratic-minus", "-(1+x^2)(1+y^2)/10", 0.5, -0.5},
      {"saddle-plus", "(x^2-x^2y^2+y^2)/2", 0.5, -0.5},
      {"saddle-minus", "-(x^2-x^2y^2+y^2)/2", 0.5, -0.5},
      {"coscos", "cos x + cos y, degree-6 Taylor", 1.0, -1.0},
      {"cossin-exp", "cos(sin x) - exp(y^2), degree-10 Taylor", 0.75, -0.75},
  };
  return presets;
}

inline const GelfandPreset& find_gelfand_preset(const std::string& name) {
  for (const auto& p : gelfand_presets()) {
    if (p.name == name) return p;
  }
  throw UnknownPreset("unknown gelfand boundary preset '" + name + "'");
}

template <RealNumber Real>
Series<Real> gelfand_boundary_preset(const std::string& name) {
  find_gelfand_preset(name);
  const auto r = [](long long p, long long q) { return rational<Real>(p, q); };
  Series<Real> f(Family::EvenPoly2D);
  const auto add = [&f](int px, int py, const Real& c) { f.add(Index::monomial(px, py), c); };
  if (name == "zero") return f;
  if (name == "quadratic-plus" || name == "quadratic-minus") {
    const Real sign = name == "quadratic-plus" ? Real(1) : Real(-1);
    const Real c = sign * r(1, 10);
    add(0, 0, c);
    add(2, 0, c);
    add(0, 2, c);
    add(2, 2, c);
  } else if (name == "saddle-plus" || name == "saddle-minus") {
    const Real sign = name == "saddle-plus" ? Real(1) : Real(-1);
    add(2, 0, sign * r(1, 2));
    add(2, 2, sign * r(-1, 2));
    add(0, 2, sign * r(1, 2));
  } else if (name == "coscos") {
    add(0, 0, Real(2));
    add(2, 0, r(-1, 2));
    add(0, 2, r(-1, 2));
    add(4, 0, r(1, 24));
    add(0, 4, r(1, 24));
    add(6, 0, r(-1, 720));
    add(0, 6, r(-1, 720));
  } else if (name == "cossin-exp") {
    add(2, 0, r(-1, 2));
    add(4, 0, r(5, 24));
    add(6, 0, r(-37, 720));
    add(8, 0, r(457, 40320));
    add(10, 0, r(-389, 172800));
    add(0, 2, r(-1, 1));
    add(0, 4, r(-1, 2));
    add(0, 6, r(-1, 6));
    add(0, 8, r(-1, 24));
    add(0, 10, r(-1, 120));
  }
  return f;
}

}  // namespace mddim
