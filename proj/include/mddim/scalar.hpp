#pragma once

// Scalar types used throughout the solver. Every algorithm is templated on
// a `Real` that is either `double` or `Extended`, an MPFR-backed float whose
// precision is fixed per run through `PrecisionScope`.

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <fmt/format.h>

namespace mddim {

using Extended = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultExtendedDigits = 60;
inline constexpr unsigned kDoubleDigits = std::numeric_limits<double>::digits10 + 1;

template <class T>
concept RealNumber = std::same_as<T, double> || std::same_as<T, Extended>;

// Sets the run-wide decimal precision of `Extended` values created inside
// the scope. Values created before the scope keep their precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Extended::default_precision()) {
    Extended::default_precision(digits);
  }
  ~PrecisionScope() { Extended::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

template <RealNumber Real>
Real pi() {
  if constexpr (std::same_as<Real, double>) {
    return std::numbers::pi;
  } else {
    return boost::math::constants::pi<Real>();
  }
}

template <RealNumber Real>
Real epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

template <RealNumber Real>
unsigned digits() {
  if constexpr (std::same_as<Real, double>) {
    return kDoubleDigits;
  } else {
    return Extended::default_precision();
  }
}

// Exact rational p/q at the active precision.
template <RealNumber Real>
Real rational(long long p, long long q) {
  return Real(p) / Real(q);
}

template <RealNumber Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

// Full-precision decimal rendering, locale independent. Doubles use the
// shortest representation that round-trips.
template <RealNumber Real>
std::string format_scalar(const Real& x) {
  if constexpr (std::same_as<Real, double>) {
    return fmt::format("{}", x);
  } else {
    return x.str(static_cast<std::streamsize>(Extended::default_precision()),
                 std::ios_base::scientific);
  }
}

template <RealNumber Real>
bool is_finite(const Real& x) {
  using std::isfinite;
  using boost::multiprecision::isfinite;
  return isfinite(x);
}

}  // namespace mddim
