#pragma once

// Text forms of a polynomial.
//
//   expression:  "3x^4 - x", "+7/2x^2 - 1", "2*x + x^2"  (variable x or X)
//   coefficients: "[a_n, ..., a_0]", descending, integer or p/q entries
//
// format_polynomial writes the expression form in descending powers and
// parse_polynomial reads it back to the same polynomial.

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "descartes/error.hpp"
#include "descartes/polynomial.hpp"
#include "descartes/rational.hpp"

namespace descartes::cli {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw parse_error("empty polynomial", pos_);
    Polynomial p = peek() == '[' ? coefficient_list() : expression();
    skip_ws();
    if (!at_end()) throw parse_error("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool is_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool is_var() const { return peek() == 'x' || peek() == 'X'; }

  std::string digits() {
    std::size_t start = pos_;
    while (is_digit()) ++pos_;
    if (pos_ == start) throw parse_error("expected a number", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  // Unsigned p or p/q.
  Rational magnitude() {
    std::string num = digits();
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      std::size_t den_pos = pos_;
      den = digits();
      if (mpz_class(den) == 0) throw parse_error("zero denominator", den_pos);
    }
    return Rational(mpz_class(num), mpz_class(den));
  }

  Rational signed_rational() {
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    Rational r = magnitude();
    return negative ? -r : r;
  }

  Polynomial coefficient_list() {
    ++pos_;  // '['
    std::vector<Rational> descending;
    skip_ws();
    if (peek() != ']') {
      for (;;) {
        skip_ws();
        descending.push_back(signed_rational());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ']') break;
        throw parse_error(at_end() ? "unterminated coefficient list" : "expected ',' or ']'",
                          pos_);
      }
    }
    ++pos_;  // ']'
    return Polynomial(std::vector<Rational>(descending.rbegin(), descending.rend()));
  }

  std::size_t exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    std::string e = digits();
    if (e.size() > 6) throw parse_error("exponent too large", start);
    return static_cast<std::size_t>(std::stoul(e));
  }

  Polynomial expression() {
    std::map<std::size_t, Rational> terms;
    bool first = true;
    for (;;) {
      skip_ws();
      if (at_end()) {
        if (first) throw parse_error("empty polynomial", pos_);
        break;
      }
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw parse_error("expected '+' or '-' between terms", pos_);
      }
      Rational coeff(1);
      std::size_t power = 0;
      if (is_digit()) {
        coeff = magnitude();
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
          if (!is_var()) throw parse_error("expected 'x' after '*'", pos_);
        }
        if (is_var()) {
          ++pos_;
          power = exponent();
        }
      } else if (is_var()) {
        ++pos_;
        power = exponent();
      } else {
        throw parse_error(at_end() ? "expected a term" : "unexpected character '" +
                                                            std::string(1, peek()) + "'",
                          pos_);
      }
      terms[power] += negative ? -coeff : coeff;
      first = false;
    }
    std::vector<Rational> asc(terms.empty() ? 0 : terms.rbegin()->first + 1);
    for (const auto& [k, v] : terms) asc[k] = v;
    return Polynomial(std::move(asc));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
  return detail::PolyParser(text).parse();
}

inline Rational parse_rational(std::string_view text) { return Rational::parse(text); }

/// Descending-power expression text, e.g. "3x^4 - x", "7/2x^2 + 1", "0".
inline std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  auto c = p.coeffs();
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    const Rational& a = c[k];
    if (a.is_zero()) continue;
    if (out.empty()) {
      if (a.sign() < 0) out += "-";
    } else {
      out += a.sign() < 0 ? " - " : " + ";
    }
    Rational mag = a.abs();
    if (k == 0 || mag != Rational(1)) out += mag.to_string();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace descartes::cli
