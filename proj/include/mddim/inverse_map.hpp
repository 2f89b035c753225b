#pragma once

// Directly defined inverse mappings J. Each mapping is diagonal on the
// basis: an element e_i is sent to e_{shift(i)} / d(i) with a denominator
// rule d, so J is linear and injective wherever d(i) != 0.

#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "mddim/errors.hpp"
#include "mddim/series.hpp"

namespace mddim {

template <RealNumber Real>
struct SineAlpha {
  Real alpha;
};

template <RealNumber Real>
struct SineBetaGamma {
  Real beta;
  Real gamma;
};

template <RealNumber Real>
struct InversePowerCubic {
  Real a0;
  Real a1;
  Real a2;
};

template <RealNumber Real>
struct Poly2DQuadratic {
  Real b0;
  Real b1;
};

template <RealNumber Real>
class MappingSpec {
 public:
  using Kind = std::variant<SineAlpha<Real>, SineBetaGamma<Real>, InversePowerCubic<Real>,
                            Poly2DQuadratic<Real>>;

  explicit MappingSpec(Kind kind) : kind_(std::move(kind)) {}

  static MappingSpec sine_alpha(Real alpha) { return MappingSpec(SineAlpha<Real>{alpha}); }
  static MappingSpec sine_beta_gamma(Real beta, Real gamma) {
    return MappingSpec(SineBetaGamma<Real>{beta, gamma});
  }
  static MappingSpec inverse_power_cubic(Real a0, Real a1, Real a2) {
    return MappingSpec(InversePowerCubic<Real>{a0, a1, a2});
  }
  static MappingSpec poly2d_quadratic(Real b0, Real b1) {
    return MappingSpec(Poly2DQuadratic<Real>{b0, b1});
  }

  const Kind& kind() const { return kind_; }

  Family family() const {
    return std::visit(
        [](const auto& k) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, InversePowerCubic<Real>>) {
            return Family::InversePower;
          } else if constexpr (std::is_same_v<K, Poly2DQuadratic<Real>>) {
            return Family::EvenPoly2D;
          } else {
            return Family::OddSine;
          }
        },
        kind_);
  }

  std::string name() const {
    return std::visit(
        [](const auto& k) -> std::string {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, SineAlpha<Real>>) {
            return fmt::format("sine-alpha(alpha={})", to_double(k.alpha));
          } else if constexpr (std::is_same_v<K, SineBetaGamma<Real>>) {
            return fmt::format("sine-beta-gamma(beta={}, gamma={})", to_double(k.beta),
                               to_double(k.gamma));
          } else if constexpr (std::is_same_v<K, InversePowerCubic<Real>>) {
            return fmt::format("inverse-power-cubic(a0={}, a1={}, a2={})", to_double(k.a0),
                               to_double(k.a1), to_double(k.a2));
          } else {
            return fmt::format("poly2d-quadratic(b0={}, b1={})", to_double(k.b0),
                               to_double(k.b1));
          }
        },
        kind_);
  }

  // Parameter constraints stated with each mapping family. Violations are
  // not rejected at construction so that validate_mapping can report them.
  std::vector<std::string> invariant_violations() const {
    std::vector<std::string> out;
    std::visit(
        [&](const auto& k) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, SineAlpha<Real>>) {
            if (!(k.alpha > 0)) out.push_back("alpha must be > 0");
          } else if constexpr (std::is_same_v<K, SineBetaGamma<Real>>) {
            if (!(k.beta > 0)) out.push_back("beta must be > 0");
            if (!(k.gamma > 0)) out.push_back("gamma must be > 0");
          } else if constexpr (std::is_same_v<K, Poly2DQuadratic<Real>>) {
            if (!(k.b0 > 0)) out.push_back("B0 must be > 0");
            if (!(k.b1 > 0)) out.push_back("B1 must be > 0");
          } else {
            for (int n = 2; n <= 1000; ++n) {
              if (denominator(Index::inverse_power(n)) == 0) {
                out.push_back(fmt::format("cubic denominator vanishes at m = -{}", n));
              }
            }
          }
        },
        kind_);
    return out;
  }

  bool in_domain(Index index) const {
    return std::visit(
        [&](const auto& k) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, InversePowerCubic<Real>>) {
            return index.second == 0 && index.first >= 2;
          } else if constexpr (std::is_same_v<K, Poly2DQuadratic<Real>>) {
            return index.first >= 0 && index.second >= 0;
          } else {
            // odd sines except sin(pi x)
            return index.second == 0 && index.first >= 3 && index.first % 2 == 1;
          }
        },
        kind_);
  }

  Index image_index(Index index) const {
    if (family() == Family::EvenPoly2D) return Index::monomial(index.first + 2, index.second + 2);
    return index;
  }

  Real denominator(Index index) const {
    return std::visit(
        [&](const auto& k) -> Real {
          using K = std::decay_t<decltype(k)>;
          const Real p = pi<Real>();
          if constexpr (std::is_same_v<K, SineAlpha<Real>>) {
            // sin((2m-1) pi x) -> -sin((2m-1) pi x) / (2 (m-1) (2m+1+alpha) pi^2)
            const int m = (index.first + 1) / 2;
            return Real(-2) * Real(m - 1) * (Real(2 * m + 1) + k.alpha) * p * p;
          } else if constexpr (std::is_same_v<K, SineBetaGamma<Real>>) {
            // sin(m pi x) -> sin(m pi x) / ((1-m)(sqrt m + beta)(sqrt m + gamma) pi^2)
            using std::sqrt;
            const Real root = sqrt(Real(index.first));
            return Real(1 - index.first) * (root + k.beta) * (root + k.gamma) * p * p;
          } else if constexpr (std::is_same_v<K, InversePowerCubic<Real>>) {
            // (1+z)^m -> (1+z)^m / (m^3 + A2 m^2 + A1 m + A0), m = -n
            const Real m = Real(-index.first);
            return m * m * m + k.a2 * m * m + k.a1 * m + k.a0;
          } else {
            // x^m y^n -> x^(m+2) y^(n+2) / ((m^2+B1 m+B0)(n^2+B1 n+B0))
            const Real mx = Real(index.first);
            const Real ny = Real(index.second);
            return (mx * mx + k.b1 * mx + k.b0) * (ny * ny + k.b1 * ny + k.b0);
          }
        },
        kind_);
  }

 private:
  Kind kind_;
};

template <RealNumber Real>
Series<Real> apply_mapping(const MappingSpec<Real>& mapping, const Series<Real>& s) {
  if (s.family() != mapping.family()) {
    throw FamilyMismatch(fmt::format("mapping {} acts on {}, got {}", mapping.name(),
                                     to_string(mapping.family()), to_string(s.family())));
  }
  const int truncation = s.truncation() == kUnbounded || mapping.family() != Family::EvenPoly2D
                             ? s.truncation()
                             : s.truncation() + 2;
  Series<Real> out(s.family(), truncation);
  for (const auto& t : s.terms()) {
    if (!mapping.in_domain(t.index)) {
      throw SecularResidue(fmt::format("term {} (coefficient {}) is outside the domain of {}",
                                       to_string(s.family(), t.index), to_double(t.value),
                                       mapping.name()));
    }
    out.add(mapping.image_index(t.index), t.value / mapping.denominator(t.index));
  }
  return out;
}

struct RuleCheck {
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::string mapping;
  int probe_budget = 0;
  RuleCheck linearity;
  RuleCheck injectivity;
  RuleCheck completeness;
  RuleCheck finiteness;
  double k_estimate = 0;
  std::vector<std::string> invariant_violations;

  bool all_pass() const {
    return linearity.pass && injectivity.pass && completeness.pass && finiteness.pass;
  }
};

namespace detail {

// Domain elements probed by the validator.
template <RealNumber Real>
std::vector<Index> probe_indices(const MappingSpec<Real>& mapping, int budget) {
  std::vector<Index> out;
  switch (mapping.family()) {
    case Family::OddSine:
      for (int m = 2; m < budget + 2; ++m) out.push_back(Index::odd_sine(m));
      break;
    case Family::InversePower:
      for (int n = 2; n < budget + 2; ++n) out.push_back(Index::inverse_power(n));
      break;
    case Family::EvenPoly2D:
      for (int i = 0; i < budget; ++i) {
        for (int j = 0; j < budget; ++j) out.push_back(Index::monomial(2 * i, 2 * j));
      }
      break;
  }
  return out;
}

// Basis elements carried by the primary solution.
inline bool is_primary_index(Family family, Index index) {
  switch (family) {
    case Family::OddSine: return index == Index::odd_sine(1);
    case Family::InversePower: return index.first <= 1;
    case Family::EvenPoly2D: return index.first == 0 || index.second == 0;
  }
  return false;
}

// Natural L2 norm ratio |e_image| / |e| for a basis element, before dividing
// by the denominator.
template <RealNumber Real>
Real norm_ratio(Family family, Index index) {
  using std::sqrt;
  if (family != Family::EvenPoly2D) return Real(1);
  const Real m = Real(index.first);
  const Real n = Real(index.second);
  return sqrt((2 * m + 1) * (2 * n + 1) / ((2 * m + 5) * (2 * n + 5)));
}

}  // namespace detail

// Checks the four mapping rules over `probe_budget` basis indices:
//   I   linearity on random combinations, exact up to precision;
//   II  injectivity: every probed denominator is nonzero and finite;
//   III completeness heuristic: primary elements plus images of the probed
//       domain cover every basis index up to the budget;
//   IV  finiteness: K = max |J e| / |e| over probed elements is finite.
template <RealNumber Real>
ValidationReport validate_mapping(const MappingSpec<Real>& mapping, int probe_budget,
                                  std::uint64_t seed = 20160613) {
  using std::abs;
  ValidationReport report;
  report.mapping = mapping.name();
  report.probe_budget = probe_budget;
  report.invariant_violations = mapping.invariant_violations();
  const Family family = mapping.family();
  const auto probes = detail::probe_indices(mapping, probe_budget);

  // II
  {
    bool ok = true;
    std::string where;
    for (const auto& index : probes) {
      const Real d = mapping.denominator(index);
      if (d == 0 || !is_finite(d)) {
        ok = false;
        where = to_string(family, index);
        break;
      }
    }
    report.injectivity.pass = ok;
    report.injectivity.detail = ok ? fmt::format("{} denominators nonzero", probes.size())
                                   : "denominator vanishes at " + where;
  }

  // I
  if (report.injectivity.pass) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, probes.size() - 1);
    Real worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
      Series<Real> s(family);
      Series<Real> t(family);
      for (int j = 0; j < 6; ++j) {
        s.add(probes[pick(rng)], Real(coef(rng)));
        t.add(probes[pick(rng)], Real(coef(rng)));
      }
      const Real a = Real(coef(rng));
      const Real b = Real(coef(rng));
      const auto lhs = apply_mapping(mapping, a * s + b * t);
      const auto rhs = a * apply_mapping(mapping, s) + b * apply_mapping(mapping, t);
      Real scale = 0;
      for (const auto& term : rhs.terms()) scale = std::max(scale, Real(abs(term.value)));
      for (const auto& term : (lhs - rhs).terms()) {
        const Real rel = abs(term.value) / (scale == 0 ? Real(1) : scale);
        worst = std::max(worst, rel);
      }
    }
    const Real tolerance = 64 * epsilon<Real>();
    report.linearity.pass = worst <= tolerance;
    report.linearity.detail = fmt::format("max relative deviation {:.3e}", to_double(worst));
  } else {
    report.linearity.detail = "skipped: mapping is not defined on the whole probe set";
  }

  // III
  {
    std::set<Index> covered;
    for (const auto& index : probes) covered.insert(mapping.image_index(index));
    std::vector<Index> basis;
    switch (family) {
      case Family::OddSine:
        for (int n = 1; n <= probe_budget; ++n) basis.push_back(Index::odd_sine(n));
        break;
      case Family::InversePower:
        for (int n = 0; n <= probe_budget; ++n) basis.push_back(Index::inverse_power(n));
        break;
      case Family::EvenPoly2D:
        for (int i = 0; i < probe_budget; ++i) {
          for (int j = 0; j < probe_budget; ++j) basis.push_back(Index::monomial(2 * i, 2 * j));
        }
        break;
    }
    std::size_t missing = 0;
    std::string first_missing;
    for (const auto& index : basis) {
      if (detail::is_primary_index(family, index) || covered.count(index)) continue;
      if (missing++ == 0) first_missing = to_string(family, index);
    }
    report.completeness.pass = missing == 0;
    report.completeness.detail =
        missing == 0 ? fmt::format("{} basis elements reached", basis.size())
                     : fmt::format("{} basis elements unreached, first {}", missing,
                                   first_missing);
  }

  // IV
  {
    Real k_max = 0;
    bool finite = report.injectivity.pass;
    if (finite) {
      for (const auto& index : probes) {
        const Real ratio = detail::norm_ratio<Real>(family, index) / abs(mapping.denominator(index));
        if (!is_finite(ratio)) {
          finite = false;
          break;
        }
        k_max = std::max(k_max, ratio);
      }
    }
    report.finiteness.pass = finite;
    report.k_estimate = finite ? to_double(k_max) : std::numeric_limits<double>::infinity();
    report.finiteness.detail = finite ? fmt::format("K estimate {:.6e}", report.k_estimate)
                                      : "unbounded on the probe set";
  }
  return report;
}

}  // namespace mddim
