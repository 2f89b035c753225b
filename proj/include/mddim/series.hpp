#pragma once

// Truncated series over the three closed basis families:
//
//   OddSine       sin(k pi x), cos(k pi x) on x in [0, 1]. Solutions and
//                 residuals live in the odd sines sin((2n-1) pi x); the
//                 cosines and even harmonics only appear as intermediates.
//   InversePower  (1+z)^(-n), n >= 0, on z in [0, inf).
//   EvenPoly2D    x^p y^q on [-1, 1]^2. Solutions use even exponents only;
//                 odd exponents appear after a single derivative.
//
// Coefficients are stored densely. A stored zero is the same as an absent
// term.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "mddim/errors.hpp"
#include "mddim/scalar.hpp"

namespace mddim {

enum class Family { OddSine, InversePower, EvenPoly2D };

inline std::string to_string(Family family) {
  switch (family) {
    case Family::OddSine: return "OddSine";
    case Family::InversePower: return "InversePower";
    case Family::EvenPoly2D: return "EvenPoly2D";
  }
  return "?";
}

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

// Basis index. Its meaning depends on the family:
//   OddSine       first = harmonic k, second = 0 for sin(k pi x), 1 for cos(k pi x)
//   InversePower  first = n for (1+z)^(-n), second = 0
//   EvenPoly2D    first = exponent of x, second = exponent of y
struct Index {
  int first = 0;
  int second = 0;

  static constexpr Index sine(int k) { return {k, 0}; }
  static constexpr Index cosine(int k) { return {k, 1}; }
  // n-th element sin((2n-1) pi x) of the odd-sine basis.
  static constexpr Index odd_sine(int n) { return {2 * n - 1, 0}; }
  static constexpr Index inverse_power(int n) { return {n, 0}; }
  static constexpr Index monomial(int px, int py) { return {px, py}; }

  auto operator<=>(const Index&) const = default;
};

inline std::string to_string(Family family, Index index) {
  switch (family) {
    case Family::OddSine:
      return fmt::format("{}({}*pi*x)", index.second == 0 ? "sin" : "cos", index.first);
    case Family::InversePower:
      return fmt::format("(1+z)^-{}", index.first);
    case Family::EvenPoly2D:
      return fmt::format("x^{}*y^{}", index.first, index.second);
  }
  return "?";
}

enum class Axis { X, Y };
enum class Edge { XPlus, XMinus, YPlus, YMinus };

template <RealNumber Real>
struct Term {
  Index index;
  Real value;
};

template <RealNumber Real>
class Series {
 public:
  explicit Series(Family family, int truncation = kUnbounded)
      : family_(family), truncation_(truncation), cols_(fixed_cols(family)) {}

  static Series from_terms(Family family, std::initializer_list<std::pair<Index, Real>> terms,
                           int truncation = kUnbounded) {
    Series s(family, truncation);
    for (const auto& [index, value] : terms) s.add(index, value);
    return s;
  }

  // The constant function `value` expressed in the family.
  static Series constant(Family family, const Real& value) {
    Series s(family);
    s.add(constant_index(family), value);
    return s;
  }

  static Index constant_index(Family family) {
    return family == Family::OddSine ? Index::cosine(0) : Index{0, 0};
  }

  Family family() const { return family_; }
  int truncation() const { return truncation_; }

  bool valid_index(Index index) const {
    if (index.first < 0 || index.second < 0) return false;
    switch (family_) {
      case Family::OddSine:
        return index.second == 1 || (index.second == 0 && index.first >= 1);
      case Family::InversePower:
        return index.second == 0;
      case Family::EvenPoly2D:
        return true;
    }
    return false;
  }

  Real coefficient(Index index) const {
    if (!valid_index(index)) {
      throw InvalidIndex(fmt::format("index ({}, {}) is not valid for family {}", index.first,
                                     index.second, to_string(family_)));
    }
    if (index.first >= rows_ || index.second >= cols_) return Real(0);
    return data_[slot(index)];
  }

  // Accumulates `value` onto the coefficient at `index`.
  void add(Index index, const Real& value) {
    if (!valid_index(index)) {
      throw InvalidIndex(fmt::format("index ({}, {}) is not valid for family {}", index.first,
                                     index.second, to_string(family_)));
    }
    if (exceeds_truncation(index)) {
      throw BasisEscape(fmt::format("term {} exceeds truncation order {}",
                                    to_string(family_, index), truncation_));
    }
    ensure_extent(index.first + 1, index.second + 1);
    data_[slot(index)] += value;
  }

  bool exceeds_truncation(Index index) const {
    if (index.first > truncation_) return true;
    return family_ == Family::EvenPoly2D && index.second > truncation_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Real& v) { return v == 0; });
  }

  // Nonzero terms in increasing index order.
  std::vector<Term<Real>> terms() const {
    std::vector<Term<Real>> out;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        const Real& v = data_[static_cast<std::size_t>(i) * cols_ + j];
        if (v != 0) out.push_back({Index{i, j}, v});
      }
    }
    return out;
  }

  // Upper bounds (exclusive) on stored indices.
  int rows() const { return rows_; }
  int cols() const { return family_ == Family::EvenPoly2D ? cols_ : 1; }

  Series truncated(int bound) const {
    Series out(family_, bound);
    for (const auto& t : terms()) {
      if (!out.exceeds_truncation(t.index)) out.add(t.index, t.value);
    }
    return out;
  }

  Series with_truncation(int bound) const {
    Series out = *this;
    for (const auto& t : terms()) {
      if (out.exceeds_truncation_at(t.index, bound)) {
        throw BasisEscape(fmt::format("term {} exceeds requested truncation order {}",
                                      to_string(family_, t.index), bound));
      }
    }
    out.truncation_ = bound;
    return out;
  }

  Series& operator+=(const Series& other) {
    check_family(other);
    truncation_ = std::max(truncation_, other.truncation_);
    ensure_extent(other.rows_, other.cols_);
    for (int i = 0; i < other.rows_; ++i) {
      for (int j = 0; j < other.cols_; ++j) {
        const Real& v = other.data_[static_cast<std::size_t>(i) * other.cols_ + j];
        if (v != 0) data_[slot({i, j})] += v;
      }
    }
    return *this;
  }

  Series& operator-=(const Series& other) {
    check_family(other);
    truncation_ = std::max(truncation_, other.truncation_);
    ensure_extent(other.rows_, other.cols_);
    for (int i = 0; i < other.rows_; ++i) {
      for (int j = 0; j < other.cols_; ++j) {
        const Real& v = other.data_[static_cast<std::size_t>(i) * other.cols_ + j];
        if (v != 0) data_[slot({i, j})] -= v;
      }
    }
    return *this;
  }

  Series& operator*=(const Real& factor) {
    for (auto& v : data_) v *= factor;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Real& c, Series s) { return s *= c; }
  friend Series operator*(Series s, const Real& c) { return s *= c; }
  friend Series operator-(Series s) { return s *= Real(-1); }

  void check_family(const Series& other) const {
    if (other.family_ != family_) {
      throw FamilyMismatch(fmt::format("cannot combine {} with {}", to_string(family_),
                                       to_string(other.family_)));
    }
  }

 private:
  static int fixed_cols(Family family) {
    switch (family) {
      case Family::OddSine: return 2;
      case Family::InversePower: return 1;
      case Family::EvenPoly2D: return 0;
    }
    return 0;
  }

  bool exceeds_truncation_at(Index index, int bound) const {
    if (index.first > bound) return true;
    return family_ == Family::EvenPoly2D && index.second > bound;
  }

  std::size_t slot(Index index) const {
    return static_cast<std::size_t>(index.first) * cols_ + index.second;
  }

  void ensure_extent(int rows, int cols) {
    if (family_ != Family::EvenPoly2D) cols = cols_;
    if (rows <= rows_ && cols <= cols_) return;
    const int new_rows = std::max(rows, rows_);
    const int new_cols = std::max(cols, cols_);
    if (new_cols == cols_) {
      data_.resize(static_cast<std::size_t>(new_rows) * new_cols, Real(0));
    } else {
      std::vector<Real> fresh(static_cast<std::size_t>(new_rows) * new_cols, Real(0));
      for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
          fresh[static_cast<std::size_t>(i) * new_cols + j] =
              std::move(data_[static_cast<std::size_t>(i) * cols_ + j]);
        }
      }
      data_ = std::move(fresh);
    }
    rows_ = new_rows;
    cols_ = new_cols;
  }

  Family family_;
  int truncation_;
  int rows_ = 0;
  int cols_;
  std::vector<Real> data_;
};

// ---------------------------------------------------------------------------
// Operations

template <RealNumber Real>
Series<Real> linear_combine(const std::vector<std::pair<Real, Series<Real>>>& terms) {
  if (terms.empty()) throw Error("linear_combine needs at least one term");
  const Family family = terms.front().second.family();
  Series<Real> out(family, 0);
  int truncation = 0;
  for (const auto& [weight, series] : terms) {
    if (series.family() != family) {
      throw FamilyMismatch(fmt::format("cannot combine {} with {}", to_string(family),
                                       to_string(series.family())));
    }
    truncation = std::max(truncation, series.truncation());
  }
  out = Series<Real>(family, truncation);
  for (const auto& [weight, series] : terms) out += weight * series;
  return out;
}

namespace detail {

template <RealNumber Real>
void accumulate(Series<Real>& out, Index index, const Real& value, int truncation) {
  if (out.exceeds_truncation(index) || index.first > truncation) return;
  out.add(index, value);
}

// sin(k pi x) with possibly negative k folded to -sin(|k| pi x).
template <RealNumber Real>
void accumulate_sine(Series<Real>& out, int k, const Real& value, int truncation) {
  if (k == 0) return;
  if (k > 0) {
    accumulate(out, Index::sine(k), value, truncation);
  } else {
    accumulate(out, Index::sine(-k), Real(-value), truncation);
  }
}

template <RealNumber Real>
Series<Real> multiply_fourier(const std::vector<Term<Real>>& a, const std::vector<Term<Real>>& b,
                              int truncation) {
  Series<Real> out(Family::OddSine, truncation);
  const Real half = Real(1) / 2;
  for (const auto& ta : a) {
    const bool a_sin = ta.index.second == 0;
    const int ka = ta.index.first;
    for (const auto& tb : b) {
      const bool b_sin = tb.index.second == 0;
      const int kb = tb.index.first;
      const Real w = half * ta.value * tb.value;
      const int diff = ka > kb ? ka - kb : kb - ka;
      if (a_sin && b_sin) {
        // sin A sin B = (cos(A-B) - cos(A+B)) / 2
        accumulate(out, Index::cosine(diff), w, truncation);
        accumulate(out, Index::cosine(ka + kb), Real(-w), truncation);
      } else if (!a_sin && !b_sin) {
        // cos A cos B = (cos(A-B) + cos(A+B)) / 2
        accumulate(out, Index::cosine(diff), w, truncation);
        accumulate(out, Index::cosine(ka + kb), w, truncation);
      } else {
        // sin A cos B = (sin(A+B) + sin(A-B)) / 2
        const int ks = a_sin ? ka : kb;
        const int kc = a_sin ? kb : ka;
        accumulate_sine(out, ks + kc, w, truncation);
        accumulate_sine(out, ks - kc, w, truncation);
      }
    }
  }
  return out;
}

}  // namespace detail

template <RealNumber Real>
Series<Real> multiply(const Series<Real>& a, const Series<Real>& b, int truncation = kUnbounded) {
  a.check_family(b);
  if (truncation < 0) throw Error("multiply: truncation must be >= 0");
  const auto ta = a.terms();
  const auto tb = b.terms();
  switch (a.family()) {
    case Family::OddSine:
      return detail::multiply_fourier(ta, tb, truncation);
    case Family::InversePower: {
      Series<Real> out(Family::InversePower, truncation);
      for (const auto& x : ta) {
        for (const auto& y : tb) {
          const int n = x.index.first + y.index.first;
          if (n <= truncation) out.add(Index::inverse_power(n), x.value * y.value);
        }
      }
      return out;
    }
    case Family::EvenPoly2D: {
      Series<Real> out(Family::EvenPoly2D, truncation);
      for (const auto& x : ta) {
        for (const auto& y : tb) {
          const int p = x.index.first + y.index.first;
          const int q = x.index.second + y.index.second;
          if (p <= truncation && q <= truncation) {
            out.add(Index::monomial(p, q), x.value * y.value);
          }
        }
      }
      return out;
    }
  }
  return a;
}

template <RealNumber Real>
Series<Real> differentiate(const Series<Real>& s, int order,
                           std::optional<Axis> axis = std::nullopt) {
  if (order < 1 || order > 3) {
    throw UnsupportedOrder(fmt::format("derivative order {} not in {{1, 2, 3}}", order));
  }
  if ((s.family() == Family::EvenPoly2D) != axis.has_value()) {
    throw Error("differentiate: axis is required for EvenPoly2D and only for it");
  }
  Series<Real> current = s;
  for (int step = 0; step < order; ++step) {
    Series<Real> next(s.family(), s.truncation() == kUnbounded ? kUnbounded
                                                               : s.truncation() + 1);
    for (const auto& t : current.terms()) {
      switch (s.family()) {
        case Family::OddSine: {
          const int k = t.index.first;
          const Real factor = Real(k) * pi<Real>();
          if (t.index.second == 0) {
            next.add(Index::cosine(k), factor * t.value);
          } else if (k != 0) {
            next.add(Index::sine(k), Real(-(factor * t.value)));
          }
          break;
        }
        case Family::InversePower: {
          const int n = t.index.first;
          if (n != 0) next.add(Index::inverse_power(n + 1), Real(-n) * t.value);
          break;
        }
        case Family::EvenPoly2D: {
          const int p = t.index.first;
          const int q = t.index.second;
          if (*axis == Axis::X && p > 0) next.add(Index::monomial(p - 1, q), Real(p) * t.value);
          if (*axis == Axis::Y && q > 0) next.add(Index::monomial(p, q - 1), Real(q) * t.value);
          break;
        }
      }
    }
    current = std::move(next);
  }
  if (s.family() == Family::OddSine) return current.truncated(s.truncation());
  return current;
}

template <RealNumber Real>
Series<Real> laplacian(const Series<Real>& s) {
  return differentiate(s, 2, Axis::X) + differentiate(s, 2, Axis::Y);
}

// z * s(z) re-expanded with z = (1+z) - 1.
template <RealNumber Real>
Series<Real> shift_decompose_z(const Series<Real>& s) {
  if (s.family() != Family::InversePower) {
    throw FamilyMismatch("shift_decompose_z requires the InversePower family");
  }
  Series<Real> out(Family::InversePower, s.truncation());
  for (const auto& t : s.terms()) {
    const int n = t.index.first;
    if (n == 0) {
      throw BasisEscape("z times a constant leaves the InversePower family");
    }
    out.add(Index::inverse_power(n - 1), t.value);
    out.add(Index::inverse_power(n), Real(-t.value));
  }
  return out;
}

template <RealNumber Real>
Real evaluate_at(const Series<Real>& s, const Real& x) {
  using std::cos;
  using std::pow;
  using std::sin;
  switch (s.family()) {
    case Family::OddSine: {
      if (x < 0 || x > 1) throw DomainError("OddSine series evaluated outside [0, 1]");
      Real sum = 0;
      const Real px = pi<Real>() * x;
      for (const auto& t : s.terms()) {
        const Real arg = Real(t.index.first) * px;
        sum += t.value * (t.index.second == 0 ? sin(arg) : cos(arg));
      }
      return sum;
    }
    case Family::InversePower: {
      if (x < 0) throw DomainError("InversePower series evaluated at z < 0");
      const Real base = Real(1) / (Real(1) + x);
      Real sum = 0;
      Real power = 1;
      int current = 0;
      for (const auto& t : s.terms()) {
        while (current < t.index.first) {
          power *= base;
          ++current;
        }
        sum += t.value * power;
      }
      return sum;
    }
    case Family::EvenPoly2D:
      throw DomainError("EvenPoly2D series needs a point (x, y)");
  }
  return Real(0);
}

template <RealNumber Real>
Real evaluate_at(const Series<Real>& s, const Real& x, const Real& y) {
  if (s.family() != Family::EvenPoly2D) return evaluate_at(s, x);
  using std::abs;
  if (abs(x) > 1 || abs(y) > 1) throw DomainError("EvenPoly2D series evaluated outside [-1, 1]^2");
  // Horner in y for each x power, then Horner in x.
  const int rows = s.rows();
  const int cols = s.cols();
  if (rows == 0) return Real(0);
  std::vector<Real> row_values(static_cast<std::size_t>(rows), Real(0));
  for (int p = 0; p < rows; ++p) {
    Real acc = 0;
    for (int q = cols - 1; q >= 0; --q) acc = acc * y + s.coefficient(Index::monomial(p, q));
    row_values[static_cast<std::size_t>(p)] = acc;
  }
  Real acc = 0;
  for (int p = rows - 1; p >= 0; --p) acc = acc * x + row_values[static_cast<std::size_t>(p)];
  return acc;
}

// Substitutes x = +-1 or y = +-1. The result is a series in the remaining
// variable, stored with exponent 0 in the substituted one.
template <RealNumber Real>
Series<Real> boundary_trace(const Series<Real>& s, Edge edge) {
  if (s.family() != Family::EvenPoly2D) {
    throw FamilyMismatch("boundary_trace requires the EvenPoly2D family");
  }
  Series<Real> out(Family::EvenPoly2D, s.truncation());
  for (const auto& t : s.terms()) {
    const int p = t.index.first;
    const int q = t.index.second;
    switch (edge) {
      case Edge::XPlus: out.add(Index::monomial(0, q), t.value); break;
      case Edge::XMinus: out.add(Index::monomial(0, q), p % 2 ? Real(-t.value) : t.value); break;
      case Edge::YPlus: out.add(Index::monomial(p, 0), t.value); break;
      case Edge::YMinus: out.add(Index::monomial(p, 0), q % 2 ? Real(-t.value) : t.value); break;
    }
  }
  return out;
}

template <RealNumber Real>
Real coefficient_of(const Series<Real>& s, Index index) {
  return s.coefficient(index);
}

// True when the series lies in span{sin((2n-1) pi x)}.
template <RealNumber Real>
bool is_pure_odd_sine(const Series<Real>& s) {
  if (s.family() != Family::OddSine) return false;
  for (const auto& t : s.terms()) {
    if (t.index.second != 0 || t.index.first % 2 == 0) return false;
  }
  return true;
}

// True when every stored exponent is even.
template <RealNumber Real>
bool is_even_poly(const Series<Real>& s) {
  if (s.family() != Family::EvenPoly2D) return false;
  for (const auto& t : s.terms()) {
    if (t.index.first % 2 || t.index.second % 2) return false;
  }
  return true;
}

// Exact squared L2 norm in the family's natural inner product:
// OddSine on [0, 1], InversePower on [0, inf), EvenPoly2D on [-1, 1]^2.
template <RealNumber Real>
Real squared_l2_norm(const Series<Real>& s) {
  const auto terms = s.terms();
  Real total = 0;
  switch (s.family()) {
    case Family::OddSine: {
      const Real p = pi<Real>();
      // integral over [0, 1] of sin(n pi x)
      auto sine_integral = [&](int n) -> Real {
        if (n == 0) return Real(0);
        if (n < 0) n = -n;
        return n % 2 ? Real(2) / (Real(n) * p) : Real(0);
      };
      auto cosine_integral = [](int n) -> Real { return n == 0 ? Real(1) : Real(0); };
      for (const auto& a : terms) {
        for (const auto& b : terms) {
          const int i = a.index.first;
          const int j = b.index.first;
          Real integral;
          if (a.index.second == 0 && b.index.second == 0) {
            integral = (cosine_integral(i - j) - cosine_integral(i + j)) / 2;
          } else if (a.index.second == 1 && b.index.second == 1) {
            integral = (cosine_integral(i - j) + cosine_integral(i + j)) / 2;
          } else {
            const int ks = a.index.second == 0 ? i : j;
            const int kc = a.index.second == 0 ? j : i;
            const Real minus = ks - kc >= 0 ? sine_integral(ks - kc) : Real(-sine_integral(kc - ks));
            integral = (sine_integral(ks + kc) + minus) / 2;
          }
          total += a.value * b.value * integral;
        }
      }
      return total;
    }
    case Family::InversePower: {
      for (const auto& a : terms) {
        for (const auto& b : terms) {
          const int e = a.index.first + b.index.first - 1;
          if (e <= 0) return std::numeric_limits<Real>::infinity();
          total += a.value * b.value / Real(e);
        }
      }
      return total;
    }
    case Family::EvenPoly2D: {
      auto moment = [](int e) -> Real { return e % 2 ? Real(0) : Real(2) / Real(e + 1); };
      for (const auto& a : terms) {
        for (const auto& b : terms) {
          total += a.value * b.value * moment(a.index.first + b.index.first) *
                   moment(a.index.second + b.index.second);
        }
      }
      return total;
    }
  }
  return total;
}

}  // namespace mddim
