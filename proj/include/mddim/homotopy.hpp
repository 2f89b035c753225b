#pragma once

// Homotopy-derivative calculus. A HomotopySequence holds the Maclaurin
// coefficients u_0, u_1, ... of phi(q) = sum_k u_k q^k; term k is D_k[phi].
// The tables below produce D_m of products, powers, exp and sin/cos of phi
// through the usual convolution recursions, memoized so that an order-m
// solve performs each convolution once.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "mddim/errors.hpp"
#include "mddim/series.hpp"

namespace mddim {

template <RealNumber Real>
class HomotopySequence {
 public:
  explicit HomotopySequence(Family family) : family_(family) {}
  HomotopySequence(Family family, std::vector<Series<Real>> terms) : family_(family) {
    for (auto& t : terms) push_back(std::move(t));
  }

  Family family() const { return family_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void push_back(Series<Real> term) {
    if (term.family() != family_) {
      throw FamilyMismatch(fmt::format("sequence of {} cannot hold a {} term", to_string(family_),
                                       to_string(term.family())));
    }
    terms_.push_back(std::move(term));
  }

  const Series<Real>& operator[](std::size_t k) const {
    if (k >= terms_.size()) {
      throw InsufficientTerms(
          fmt::format("order {} requested but only {} terms are known", k, terms_.size()));
    }
    return terms_[k];
  }

  const std::vector<Series<Real>>& terms() const { return terms_; }

  // u_0 + u_1 + ... + u_m
  Series<Real> partial_sum(std::size_t m) const {
    Series<Real> sum(family_);
    for (std::size_t k = 0; k <= m; ++k) sum += (*this)[k];
    return sum;
  }

 private:
  Family family_;
  std::vector<Series<Real>> terms_;
};

namespace detail {

template <RealNumber Real>
void require_terms(const HomotopySequence<Real>& a, int m) {
  if (m < 0) throw InsufficientTerms("negative homotopy order");
  if (static_cast<std::size_t>(m) >= a.size()) {
    throw InsufficientTerms(
        fmt::format("order {} requested but only {} terms are known", m, a.size()));
  }
}

// Constant value of a series that must be a pure constant.
template <RealNumber Real>
Real constant_value(const Series<Real>& s) {
  const Index unit = Series<Real>::constant_index(s.family());
  for (const auto& t : s.terms()) {
    if (t.index != unit) {
      throw UnsupportedInitialTerm(
          "the initial term must be a constant series; found " + to_string(s.family(), t.index));
    }
  }
  return s.coefficient(unit);
}

}  // namespace detail

// D_m[phi psi] = sum_{k=0}^{m} a_k b_{m-k}
template <RealNumber Real>
Series<Real> convolve_product(const HomotopySequence<Real>& a, const HomotopySequence<Real>& b,
                              int m, int truncation = kUnbounded) {
  if (a.family() != b.family()) {
    throw FamilyMismatch("convolve_product: sequences belong to different families");
  }
  detail::require_terms(a, m);
  detail::require_terms(b, m);
  Series<Real> out(a.family(), truncation);
  for (int k = 0; k <= m; ++k) out += multiply(a[k], b[m - k], truncation);
  return out;
}

// Memo table for D_m[phi^n], valid for one append-only sequence.
template <RealNumber Real>
class PowerTable {
 public:
  explicit PowerTable(int truncation = kUnbounded) : truncation_(truncation) {}

  const Series<Real>& term(const HomotopySequence<Real>& a, int n, int m) {
    if (n < 1) throw Error("power_term: exponent must be >= 1");
    detail::require_terms(a, m);
    if (n == 1) return a[m];
    const auto key = std::make_pair(n, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Series<Real> out(a.family(), truncation_);
    for (int k = 0; k <= m; ++k) {
      out += multiply(a[k], term(a, n - 1, m - k), truncation_);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  int truncation_;
  std::map<std::pair<int, int>, Series<Real>> memo_;
};

template <RealNumber Real>
Series<Real> power_term(const HomotopySequence<Real>& a, int n, int m,
                        int truncation = kUnbounded) {
  PowerTable<Real> table(truncation);
  return table.term(a, n, m);
}

// Incremental table of D_m[exp(alpha phi)]:
//   G_0 = exp(alpha u_0),  G_m = alpha sum_{k=0}^{m-1} (1 - k/m) u_{m-k} G_k.
// u_0 must be constant so that exp(alpha u_0) stays in the family.
template <RealNumber Real>
class ExpTable {
 public:
  explicit ExpTable(Real alpha, int truncation = kUnbounded)
      : alpha_(std::move(alpha)), truncation_(truncation) {}

  const Series<Real>& term(const HomotopySequence<Real>& a, int m) {
    detail::require_terms(a, m);
    while (static_cast<int>(terms_.size()) <= m) extend(a);
    return terms_[static_cast<std::size_t>(m)];
  }

  const std::vector<Series<Real>>& terms() const { return terms_; }

 private:
  void extend(const HomotopySequence<Real>& a) {
    using std::exp;
    const int m = static_cast<int>(terms_.size());
    if (m == 0) {
      const Real u0 = detail::constant_value(a[0]);
      terms_.push_back(Series<Real>::constant(a.family(), exp(alpha_ * u0)));
      return;
    }
    Series<Real> out(a.family(), truncation_);
    for (int k = 0; k < m; ++k) {
      const Real weight = alpha_ * Real(m - k) / Real(m);
      out += weight * multiply(a[static_cast<std::size_t>(m - k)],
                               terms_[static_cast<std::size_t>(k)], truncation_);
    }
    terms_.push_back(std::move(out));
  }

  Real alpha_;
  int truncation_;
  std::vector<Series<Real>> terms_;
};

template <RealNumber Real>
HomotopySequence<Real> exp_terms(const HomotopySequence<Real>& a, const Real& alpha, int m_max,
                                 int truncation = kUnbounded) {
  if (m_max < 0) throw Error("exp_terms: m_max must be >= 0");
  ExpTable<Real> table(alpha, truncation);
  HomotopySequence<Real> out(a.family());
  for (int m = 0; m <= m_max; ++m) out.push_back(table.term(a, m));
  return out;
}

// Paired sequences (D_m[sin phi], D_m[cos phi]) from the mutual recursion
//   S_m =  sum_{k<m} (1 - k/m) u_{m-k} C_k,
//   C_m = -sum_{k<m} (1 - k/m) u_{m-k} S_k.
template <RealNumber Real>
std::pair<HomotopySequence<Real>, HomotopySequence<Real>> trig_terms(
    const HomotopySequence<Real>& a, int m_max, int truncation = kUnbounded) {
  using std::cos;
  using std::sin;
  if (m_max < 0) throw Error("trig_terms: m_max must be >= 0");
  detail::require_terms(a, m_max);
  const Real u0 = detail::constant_value(a[0]);
  std::vector<Series<Real>> s{Series<Real>::constant(a.family(), sin(u0))};
  std::vector<Series<Real>> c{Series<Real>::constant(a.family(), cos(u0))};
  for (int m = 1; m <= m_max; ++m) {
    Series<Real> sm(a.family(), truncation);
    Series<Real> cm(a.family(), truncation);
    for (int k = 0; k < m; ++k) {
      const Real weight = Real(m - k) / Real(m);
      const auto& u = a[static_cast<std::size_t>(m - k)];
      sm += weight * multiply(u, c[static_cast<std::size_t>(k)], truncation);
      cm -= weight * multiply(u, s[static_cast<std::size_t>(k)], truncation);
    }
    s.push_back(std::move(sm));
    c.push_back(std::move(cm));
  }
  return {HomotopySequence<Real>(a.family(), std::move(s)),
          HomotopySequence<Real>(a.family(), std::move(c))};
}

}  // namespace mddim
