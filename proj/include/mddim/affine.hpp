#pragma once

// Values affine in the eigenvalue increment Lambda that is still unknown at
// the current order. The deformation pipeline is linear in Lambda, so a pair
// (base, slope) carries it from the residual through the inverse mapping and
// the primary solution until a scalar condition fixes it.

#include <utility>

#include "mddim/errors.hpp"
#include "mddim/series.hpp"

namespace mddim {

template <RealNumber Real>
struct AffineScalar {
  Real base = 0;
  Real slope = 0;

  Real at(const Real& lambda) const { return base + slope * lambda; }

  friend AffineScalar operator+(const AffineScalar& a, const AffineScalar& b) {
    return {a.base + b.base, a.slope + b.slope};
  }
  friend AffineScalar operator-(const AffineScalar& a, const AffineScalar& b) {
    return {a.base - b.base, a.slope - b.slope};
  }
  friend AffineScalar operator*(const Real& c, const AffineScalar& a) {
    return {c * a.base, c * a.slope};
  }
  friend AffineScalar operator*(const AffineScalar& a, const AffineScalar& b) {
    if (a.slope != 0 && b.slope != 0) {
      throw NonlinearAffine("product of two Lambda-dependent values is not affine");
    }
    return {a.base * b.base, a.base * b.slope + a.slope * b.base};
  }
};

// Series whose coefficients are AffineScalar: base(x) + Lambda * slope(x).
template <RealNumber Real>
struct AffineSeries {
  Series<Real> base;
  Series<Real> slope;

  explicit AffineSeries(Family family) : base(family), slope(family) {}
  AffineSeries(Series<Real> b, Series<Real> s) : base(std::move(b)), slope(std::move(s)) {
    base.check_family(slope);
  }

  Family family() const { return base.family(); }

  AffineScalar<Real> coefficient(Index index) const {
    return {base.coefficient(index), slope.coefficient(index)};
  }

  Series<Real> substitute(const Real& lambda) const { return base + lambda * slope; }

  // Applies a linear map to both parts.
  template <class LinearMap>
  AffineSeries map(LinearMap&& f) const {
    return AffineSeries(f(base), f(slope));
  }

  AffineSeries& operator+=(const AffineSeries& other) {
    base += other.base;
    slope += other.slope;
    return *this;
  }
};

template <RealNumber Real>
AffineScalar<Real> coefficient_of(const AffineSeries<Real>& s, Index index) {
  return s.coefficient(index);
}

template <RealNumber Real>
AffineScalar<Real> evaluate_at(const AffineSeries<Real>& s, const Real& x, const Real& y) {
  return {evaluate_at(s.base, x, y), evaluate_at(s.slope, x, y)};
}

}  // namespace mddim
