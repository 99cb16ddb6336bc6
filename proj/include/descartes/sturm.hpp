#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "descartes/error.hpp"
#include "descartes/polynomial.hpp"

namespace descartes {

/// Sturm sequence S, S', -rem(S, S'), ... of a squarefree S, ending in a
/// nonzero constant. Entries past the second are scaled to a leading
/// coefficient of +-1, which leaves every sign evaluation unchanged.
class SturmChain {
 public:
  explicit SturmChain(std::vector<Polynomial> polys) : polys_(std::move(polys)) {}

  std::span<const Polynomial> polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }

  /// Sign variations of the chain evaluated at t, zeros dropped.
  std::size_t variations_at(const Rational& t) const {
    std::size_t n = 0;
    int last = 0;
    for (const auto& p : polys_) {
      int s = evaluate(p, t).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++n;
      last = s;
    }
    return n;
  }

 private:
  std::vector<Polynomial> polys_;
};

struct ExactRootCounts {
  std::size_t positive = 0;  // z+
  std::size_t negative = 0;  // z-
  std::size_t zero = 0;      // z0

  friend bool operator==(const ExactRootCounts&, const ExactRootCounts&) = default;
};

/// Chain of the squarefree part of P.
inline SturmChain sturm_chain(const Polynomial& p) {
  if (p.is_constant()) throw domain_error("Sturm chain needs a polynomial of degree >= 1");
  Polynomial s = exact_divide(p, poly_gcd(p, derivative(p)));
  std::vector<Polynomial> chain;
  chain.push_back(s);
  chain.push_back(derivative(s));
  while (!chain.back().is_constant()) {
    const auto& prev = chain[chain.size() - 2];
    const auto& last = chain.back();
    Polynomial r = -poly_divmod(prev, last).remainder;
    if (r.is_zero()) throw domain_error("Sturm chain of a non-squarefree polynomial");
    chain.push_back(poly_scale(r, Rational(1) / r.leading().abs()));
  }
  return SturmChain(std::move(chain));
}

/// Distinct real roots of the chain's polynomial in (a, b].
inline std::size_t count_distinct_roots(const SturmChain& chain, const Rational& a,
                                        const Rational& b) {
  if (a > b) throw domain_error("interval endpoints out of order: a > b");
  return chain.variations_at(a) - chain.variations_at(b);
}

/// Real roots of P in (a, b], counted with multiplicity.
inline std::size_t count_roots_with_multiplicity(const Polynomial& p, const Rational& a,
                                                 const Rational& b) {
  if (p.is_constant()) throw domain_error("root count needs a polynomial of degree >= 1");
  if (a > b) throw domain_error("interval endpoints out of order: a > b");
  std::size_t total = 0;
  for (const auto& f : squarefree_decomposition(p)) {
    total += f.multiplicity * count_distinct_roots(sturm_chain(f.factor), a, b);
  }
  return total;
}

/// z+, z-, z0 with multiplicity.
inline ExactRootCounts exact_root_counts(const Polynomial& p) {
  if (p.is_constant()) throw domain_error("root count needs a polynomial of degree >= 1");
  auto [q, z0] = strip_zero_roots(p);
  ExactRootCounts out;
  out.zero = z0;
  if (q.is_constant()) return out;
  const Rational bound = cauchy_root_bound(q);
  out.positive = count_roots_with_multiplicity(q, Rational(0), bound);
  out.negative = count_roots_with_multiplicity(reflect(q), Rational(0), bound);
  return out;
}

}  // namespace descartes
