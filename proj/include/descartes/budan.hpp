#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "descartes/error.hpp"
#include "descartes/polynomial.hpp"
#include "descartes/sign_rules.hpp"

namespace descartes {

/// f^(n)(t), f^(n-1)(t), ..., f'(t), f(t) together with the point t.
struct DerivativeSignSequence {
  std::vector<Rational> values;
  Rational point;
};

struct BudanReport {
  std::size_t v_at_a = 0;
  std::size_t v_at_b = 0;
  std::size_t bound = 0;  // >= number of roots in (a, b], same parity
  unsigned parity = 0;
  Rational a;
  Rational b;
};

enum class VariationMethod {
  TaylorShift,       // count_alternations(P(X + t))
  DerivativeValues,  // alternations of P^(n)(t), ..., P(t)
};

/// Alternations of a value sequence with zeros ignored.
inline std::size_t count_sequence_alternations(std::span<const Rational> values) {
  std::size_t n = 0;
  int last = 0;
  for (const auto& x : values) {
    int s = x.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

inline DerivativeSignSequence derivative_sequence(const Polynomial& p, const Rational& t) {
  if (p.is_zero()) throw domain_error("zero polynomial has no derivative sequence");
  std::vector<Rational> values;
  values.reserve(p.coeffs().size());
  for (Polynomial d = p; !d.is_zero(); d = derivative(d)) values.push_back(evaluate(d, t));
  return {std::vector<Rational>(values.rbegin(), values.rend()), t};
}

/// v(P, t): sign variations of P^(n)(t), ..., P(t). The Taylor shift route
/// works because coefficient i of P(X + t) is P^(i)(t) / i!.
inline std::size_t variation_at(const Polynomial& p, const Rational& t,
                                VariationMethod method = VariationMethod::TaylorShift) {
  if (p.is_constant()) throw domain_error("variation count needs a polynomial of degree >= 1");
  if (method == VariationMethod::DerivativeValues) {
    return count_sequence_alternations(derivative_sequence(p, t).values);
  }
  return count_alternations(taylor_shift(p, t));
}

/// Budan's bound on the number of roots in (a, b], with multiplicity.
inline BudanReport budan_bound(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_constant()) throw domain_error("Budan bound needs a polynomial of degree >= 1");
  if (a > b) throw domain_error("interval endpoints out of order: a > b");
  if (evaluate(p, a).is_zero()) throw domain_error("left endpoint is a root");
  BudanReport r;
  r.a = a;
  r.b = b;
  r.v_at_a = variation_at(p, a);
  r.v_at_b = variation_at(p, b);
  r.bound = r.v_at_a - r.v_at_b;
  r.parity = static_cast<unsigned>(r.bound % 2);
  return r;
}

/// Budan bound for any f whose n-th derivative keeps a constant sign on
/// [a, b], from precomputed derivative values at both ends.
inline std::size_t generalized_budan_bound(const DerivativeSignSequence& seq_a,
                                           const DerivativeSignSequence& seq_b) {
  if (seq_a.values.size() != seq_b.values.size() || seq_a.values.empty()) {
    throw domain_error("derivative sequences must be nonempty and of equal length");
  }
  const int lead_a = seq_a.values.front().sign();
  const int lead_b = seq_b.values.front().sign();
  if (lead_a == 0 || lead_a != lead_b) {
    throw domain_error("n-th derivative not of constant sign");
  }
  if (seq_a.values.back().is_zero()) throw domain_error("left endpoint is a root");
  if (seq_a.point > seq_b.point) throw domain_error("interval endpoints out of order: a > b");
  const std::size_t va = count_sequence_alternations(seq_a.values);
  const std::size_t vb = count_sequence_alternations(seq_b.values);
  if (va < vb) {
    throw domain_error(
        "inconsistent input: sequences violate the generalized Budan preconditions");
  }
  return va - vb;
}

/// (t, v(P, t)) for each point, points ascending.
inline std::vector<std::pair<Rational, std::size_t>> variation_profile(
    const Polynomial& p, std::span<const Rational> points) {
  if (p.is_constant()) throw domain_error("variation profile needs a polynomial of degree >= 1");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] < points[i - 1]) throw domain_error("profile points must be sorted ascending");
  }
  std::vector<std::pair<Rational, std::size_t>> out;
  out.reserve(points.size());
  for (const auto& t : points) out.emplace_back(t, variation_at(p, t));
  return out;
}

}  // namespace descartes
