#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "descartes/error.hpp"
#include "descartes/rational.hpp"

namespace descartes {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored in ascending powers: coeffs()[i] is the
/// coefficient of X^i. The leading coefficient is never zero; the zero
/// polynomial is the empty sequence and has no degree.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    normalize();
  }

  Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { normalize(); }

  /// c * X^power
  static Polynomial monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
  }

  /// The constant polynomial c.
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  bool is_zero() const { return coeffs_.empty(); }

  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  bool is_constant() const { return coeffs_.size() <= 1; }

  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Coefficient of X^i; zero past the leading term.
  Rational operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational();
  }

  /// Leading coefficient. The zero polynomial has none.
  const Rational& leading() const {
    if (coeffs_.empty()) throw domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Strips high-order zeros.
inline Polynomial make_polynomial(std::vector<Rational> ascending) {
  return Polynomial(std::move(ascending));
}

/// Horner evaluation.
inline Rational evaluate(const Polynomial& p, const Rational& t) {
  Rational acc;
  auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

inline Polynomial derivative(const Polynomial& p) {
  auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

/// Q(X) = P(X + t) by repeated synthetic division; O(n^2) exact operations.
/// Coefficient i of the result equals P^(i)(t) / i!.
inline Polynomial taylor_shift(const Polynomial& p, const Rational& t) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  if (t.is_zero() || c.size() <= 1) return Polynomial(std::move(c));
  const std::size_t n = c.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) c[j] += t * c[j + 1];
  }
  return Polynomial(std::move(c));
}

/// P(-X).
inline Polynomial reflect(const Polynomial& p) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

struct ZeroRootSplit {
  Polynomial cofactor;     // Q with Q(0) != 0
  std::size_t zero_roots;  // largest power of X dividing P
};

/// P = X^zero_roots * cofactor.
inline ZeroRootSplit strip_zero_roots(const Polynomial& p) {
  if (p.is_zero()) throw domain_error("zero polynomial has no defined root structure");
  auto c = p.coeffs();
  std::size_t z = 0;
  while (c[z].is_zero()) ++z;
  return {Polynomial(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(z), c.end())), z};
}

/// Index of the lowest nonzero coefficient, z^0(P).
inline std::size_t zero_root_multiplicity(const Polynomial& p) {
  return strip_zero_roots(p).zero_roots;
}

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  auto a = p.coeffs();
  auto b = q.coeffs();
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] + q[i];
  return Polynomial(std::move(out));
}

inline Polynomial poly_scale(const Polynomial& p, const Rational& r) {
  if (r.is_zero()) return {};
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : out) x *= r;
  return Polynomial(std::move(out));
}

inline Polynomial poly_sub(const Polynomial& p, const Polynomial& q) {
  return poly_add(p, poly_scale(q, Rational(-1)));
}

inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  auto a = p.coeffs();
  auto b = q.coeffs();
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Polynomial(std::move(out));
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return poly_add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return poly_sub(p, q); }
inline Polynomial operator-(const Polynomial& p) { return poly_scale(p, Rational(-1)); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return poly_mul(p, q); }

inline Polynomial pow(const Polynomial& p, std::size_t k) {
  Polynomial out = Polynomial::constant(Rational(1));
  for (std::size_t i = 0; i < k; ++i) out = out * p;
  return out;
}

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

inline DivMod poly_divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw domain_error("polynomial division by zero");
  std::vector<Rational> r(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dn = d.coeffs().size() - 1;
  if (r.size() <= dn) return {{}, p};
  std::vector<Rational> q(r.size() - dn);
  const Rational& lead = d.leading();
  auto dc = d.coeffs();
  for (std::size_t k = r.size(); k-- > dn;) {
    if (r[k].is_zero()) continue;
    Rational f = r[k] / lead;
    q[k - dn] = f;
    for (std::size_t j = 0; j <= dn; ++j) r[k - dn + j] -= f * dc[j];
  }
  r.resize(dn);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

/// Exact quotient; throws if d does not divide p.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  auto [q, r] = poly_divmod(p, d);
  if (!r.is_zero()) throw domain_error("polynomial division is not exact");
  return q;
}

inline Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return poly_scale(p, Rational(1) / p.leading());
}

/// Monic greatest common divisor by the Euclidean algorithm.
inline Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw domain_error("gcd of two zero polynomials is undefined");
  Polynomial a = monic(p);
  Polynomial b = monic(q);
  while (!b.is_zero()) {
    Polynomial r = monic(poly_divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

struct SquarefreeFactor {
  Polynomial factor;  // squarefree, monic
  std::size_t multiplicity;
};

/// Yun's algorithm. Returns the nonconstant factors in increasing multiplicity;
/// their product with multiplicities is P / leading(P).
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_constant()) {
    throw domain_error("squarefree decomposition needs a polynomial of degree >= 1");
  }
  std::vector<SquarefreeFactor> out;
  Polynomial dp = derivative(p);
  Polynomial a = poly_gcd(p, dp);
  Polynomial b = exact_divide(p, a);
  Polynomial c = exact_divide(dp, a);
  Polynomial d = c - derivative(b);
  for (std::size_t i = 1; !b.is_constant(); ++i) {
    a = poly_gcd(b, d);
    b = exact_divide(b, a);
    if (!a.is_constant()) out.push_back({monic(a), i});
    if (b.is_constant()) break;
    c = exact_divide(d, a);
    d = c - derivative(b);
  }
  return out;
}

/// P / gcd(P, P'), monic.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) throw domain_error("squarefree part needs a polynomial of degree >= 1");
  return monic(exact_divide(p, poly_gcd(p, derivative(p))));
}

/// 1 + max_{i<n} |a_i| / |a_n|. Every real root lies in (-B, B).
inline Rational cauchy_root_bound(const Polynomial& p) {
  if (p.is_constant()) throw domain_error("root bound needs a polynomial of degree >= 1");
  auto c = p.coeffs();
  Rational lead = c.back().abs();
  Rational best;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rational r = c[i].abs() / lead;
    if (r > best) best = r;
  }
  return Rational(1) + best;
}

}  // namespace descartes
