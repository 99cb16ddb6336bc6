#pragma once

// Real-root isolation by bisection with Budan's bound as the decision test.
//
// Work happens on the squarefree part S of P. A subinterval (a, b] is
// dropped when the bound is 0 and kept when it is 1: for squarefree input the
// bound's parity then forces exactly one root. Larger bounds bisect. A
// midpoint that is itself a root is reported as an exact point and divided
// out of the polynomial used below it, so every Budan call keeps a non-root
// left endpoint.
//
// Budan's count alone need not reach 0 or 1: it also counts the "virtual
// roots" where derivatives vanish (X^2 + 1 keeps a count of 2 on every
// (-e, 0]). When it is 2 or more, Descartes's rule is also applied to the
// interval through a Moebius map, and the smaller of the two bounds is used.
// Both have the parity of the true count, and the Descartes bound drops to
// 0 or 1 once the interval is small, so the bisection terminates.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "descartes/budan.hpp"
#include "descartes/error.hpp"
#include "descartes/polynomial.hpp"

namespace descartes {

/// One distinct real root. low == high marks an exact rational root;
/// otherwise the root lies in (low, high) and neither endpoint is a root.
struct IsolatedRoot {
  Rational low;
  Rational high;
  std::size_t multiplicity = 1;

  bool is_point() const { return low == high; }
  Rational width() const { return high - low; }

  friend bool operator==(const IsolatedRoot&, const IsolatedRoot&) = default;
};

struct IsolationOptions {
  std::size_t max_depth = 512;
};

namespace detail {

/// v((1 + X)^n P((a + bX) / (1 + X))): Descartes's bound on the roots of P
/// in the open interval (a, b). Requires P(a) != 0.
inline std::size_t interval_descartes_bound(const Polynomial& p, const Rational& a,
                                            const Rational& b) {
  const Polynomial shifted = taylor_shift(p, a);
  std::vector<Rational> c(shifted.coeffs().begin(), shifted.coeffs().end());
  const Rational width = b - a;
  Rational scale(1);
  for (auto& x : c) {
    x *= scale;
    scale *= width;
  }
  std::reverse(c.begin(), c.end());
  return count_alternations(taylor_shift(Polynomial(std::move(c)), Rational(1)));
}

struct Isolator {
  const Polynomial& squarefree;
  const std::vector<SquarefreeFactor>& factors;
  IsolationOptions options;
  std::vector<IsolatedRoot> out;

  std::size_t multiplicity_at_point(const Rational& x) const {
    for (const auto& f : factors) {
      if (evaluate(f.factor, x).is_zero()) return f.multiplicity;
    }
    throw domain_error("isolation: point is not a root");
  }

  // Exactly one factor has an odd Budan bound on an isolating interval.
  std::size_t multiplicity_in(const Rational& a, const Rational& b) const {
    for (const auto& f : factors) {
      if (budan_bound(f.factor, a, b).parity == 1) return f.multiplicity;
    }
    throw domain_error("isolation: no factor owns the isolated root");
  }

  // Invariant: current(a) != 0; current has the roots of S in (a, b] that are
  // not yet reported.
  void run(const Polynomial& current, const Rational& a, const Rational& b, std::size_t depth) {
    if (depth > options.max_depth) throw domain_error("isolation exceeded the bisection depth cap");
    if (current.is_constant()) return;
    std::size_t bound = budan_bound(current, a, b).bound;
    if (bound >= 2) bound = std::min(bound, interval_descartes_bound(current, a, b));
    if (bound == 0) return;
    // b is never a root of `current`: it is the initial bound or a midpoint
    // already checked one level up. It can still be a root of S that was
    // divided out, in which case the interval is split further.
    if (bound == 1 && !evaluate(squarefree, a).is_zero() &&
        !evaluate(squarefree, b).is_zero()) {
      out.push_back({a, b, multiplicity_in(a, b)});
      return;
    }
    const Rational m = midpoint(a, b);
    if (evaluate(current, m).is_zero()) {
      Polynomial deflated = exact_divide(current, Polynomial{-m, Rational(1)});
      run(deflated, a, m, depth + 1);
      out.push_back({m, m, multiplicity_at_point(m)});
      run(deflated, m, b, depth + 1);
    } else {
      run(current, a, m, depth + 1);
      run(current, m, b, depth + 1);
    }
  }
};

}  // namespace detail

/// Every distinct real root of P once, in increasing order.
inline std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p,
                                                    IsolationOptions options = {}) {
  if (p.is_constant()) throw domain_error("root isolation needs a polynomial of degree >= 1");
  const auto factors = squarefree_decomposition(p);
  const Polynomial s = squarefree_part(p);
  const Rational bound = cauchy_root_bound(s);
  detail::Isolator iso{s, factors, options, {}};
  iso.run(s, -bound, bound, 0);
  return std::move(iso.out);
}

/// Shrinks an isolating interval to width <= `width` by sign bisection.
inline IsolatedRoot refine(const IsolatedRoot& root, const Polynomial& p, const Rational& width,
                           IsolationOptions options = {}) {
  if (width.sign() <= 0) throw domain_error("refinement width must be positive");
  if (root.is_point()) return root;
  if (p.is_constant()) throw domain_error("refinement needs a polynomial of degree >= 1");
  const Polynomial s = squarefree_part(p);
  IsolatedRoot r = root;
  int sign_low = evaluate(s, r.low).sign();
  const int sign_high = evaluate(s, r.high).sign();
  if (sign_low == 0 || sign_high == 0 || sign_low == sign_high) {
    throw domain_error("refine: interval does not isolate a simple sign change");
  }
  for (std::size_t depth = 0; r.width() > width; ++depth) {
    if (depth > options.max_depth) throw domain_error("refinement exceeded the bisection depth cap");
    Rational m = midpoint(r.low, r.high);
    int sm = evaluate(s, m).sign();
    if (sm == 0) return {m, m, r.multiplicity};
    if (sm == sign_low) {
      r.low = m;
    } else {
      r.high = m;
    }
  }
  return r;
}

}  // namespace descartes
