#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "descartes/error.hpp"

namespace descartes {

/// Exact signed rational in lowest terms with a positive denominator.
/// Zero is 0/1. Backed by GMP, so no operation ever rounds.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value) : value_(mpz_class(std::to_string(value))) {}  // NOLINT
  explicit Rational(mpz_class integer) : value_(std::move(integer)) {}

  Rational(mpz_class numerator, mpz_class denominator) {
    if (denominator == 0) throw domain_error("rational with zero denominator");
    value_ = mpq_class(std::move(numerator), std::move(denominator));
    value_.canonicalize();
  }

  Rational(long numerator, long denominator)
      : Rational(mpz_class(numerator), mpz_class(denominator)) {}

  /// Accepts "p", "-p", "+p", "p/q" with decimal digits; q must be nonzero.
  static Rational parse(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&](std::string& out) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        out.push_back(text[i]);
        ++i;
      }
      if (i == start) throw parse_error("expected digits", i);
    };
    std::string num;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      if (text[i] == '-') num.push_back('-');
      ++i;
    }
    digits(num);
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
      ++i;
      den.clear();
      std::size_t den_pos = i;
      digits(den);
      if (mpz_class(den) == 0) throw parse_error("zero denominator", den_pos);
    }
    if (i != text.size()) throw parse_error("unexpected character in rational", i);
    return Rational(mpz_class(num), mpz_class(den));
  }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  /// Nearest double; for display only, never used in decisions.
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace descartes
