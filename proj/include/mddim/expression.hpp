#pragma once

// Scalar literals for configs and flags: numbers, pi, + - * / ^, parentheses
// and sqrt(...), evaluated at the active precision, so "1/(3*pi)" is exact
// to the working digits rather than rounded through a double.

#include <cctype>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "mddim/errors.hpp"
#include "mddim/scalar.hpp"

namespace mddim {

class ExpressionError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <RealNumber Real>
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Real parse() {
    Real value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const char* what) const {
    throw ExpressionError(fmt::format("cannot read '{}' as a number: {} at column {}", text_, what,
                                      pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  Real expression() {
    Real value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Real term() {
    Real value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const Real d = unary();
        if (d == 0) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  Real unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Real power() {
    using std::pow;
    Real base = primary();
    if (accept('^')) return pow(base, unary());
    return base;
  }

  Real primary() {
    using std::sqrt;
    if (accept('(')) {
      Real value = expression();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (accept_word("pi")) return pi<Real>();
    if (accept_word("sqrt")) {
      if (!accept('(')) fail("sqrt needs '('");
      Real value = expression();
      if (!accept(')')) fail("missing ')'");
      if (value < 0) fail("sqrt of a negative value");
      return sqrt(value);
    }
    return number();
  }

  Real number() {
    skip_space();
    const std::size_t start = pos_;
    const auto digit = [&] {
      return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    };
    while (digit()) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (digit()) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) fail("expected a number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (!digit()) {
        pos_ = save;
      } else {
        while (digit()) ++pos_;
      }
    }
    const std::string literal(text_.substr(start, pos_ - start));
    if constexpr (std::same_as<Real, double>) {
      return std::stod(literal);
    } else {
      return Extended(literal);
    }
  }
};

}  // namespace detail

template <RealNumber Real>
Real parse_scalar(std::string_view text) {
  return detail::ScalarParser<Real>(text).parse();
}

}  // namespace mddim
