#pragma once

// Sign alternations v(P) and permanences c(P) of a coefficient sequence,
// counted under the minimization convention: inside a run of zero
// coefficients every zero copies the sign of its higher-index neighbour when
// counting alternations, and takes the opposite sign when counting
// permanences. Both counts are then the minimum over all sign assignments
// to the zeros, and c(P(X)) = v(P(-X)).
//
// Counting runs over a_n ... a_{z0}; trailing zeros (the factor X^z0) are
// excluded, which keeps v + c <= deg - z0.

#include <cstddef>
#include <span>
#include <vector>

#include "descartes/error.hpp"
#include "descartes/polynomial.hpp"

namespace descartes {

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };

inline Sign sign_of(const Rational& r) {
  int s = r.sign();
  return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<signed char>(s)); }

inline char sign_char(Sign s) {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
  }
  return '?';
}

struct SignCounts {
  std::size_t alternations = 0;  // v(P)
  std::size_t permanences = 0;   // c(P)
  std::size_t zero_roots = 0;    // z0(P)
  std::size_t degree = 0;

  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

/// One maximal run of zero coefficients a_i, 0, ..., 0, a_j strictly between
/// two nonzero coefficients.
struct ZeroBlock {
  Sign left_sign = Sign::Plus;   // sign of the higher-index coefficient a_i
  Sign right_sign = Sign::Plus;  // sign of a_j
  std::size_t zero_run_length = 0;
  std::size_t pair_count = 0;  // zero_run_length + 1
  std::size_t alternation_contrib = 0;
  std::size_t permanence_contrib = 0;
  std::size_t loss = 0;

  friend bool operator==(const ZeroBlock&, const ZeroBlock&) = default;
};

struct RootBoundReport {
  SignCounts counts;
  std::size_t positive_upper = 0;  // v(P) >= z+(P)
  std::size_t negative_upper = 0;  // c(P) >= z-(P)
  unsigned positive_parity = 0;    // v(P) mod 2 == z+(P) mod 2
  unsigned negative_parity = 0;
  std::size_t imaginary_lower = 0;  // deg - z0 - v - c
};

namespace detail {

inline std::span<const Rational> counting_window(const Polynomial& p) {
  if (p.is_zero()) throw domain_error("zero polynomial has no sign sequence");
  auto c = p.coeffs();
  std::size_t z = 0;
  while (c[z].is_zero()) ++z;
  return c.subspan(z);
}

inline std::size_t count_changes(std::span<const Sign> signs) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < signs.size(); ++i) n += signs[i] != signs[i - 1];
  return n;
}

inline std::size_t count_repeats(std::span<const Sign> signs) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < signs.size(); ++i) n += signs[i] == signs[i - 1];
  return n;
}

template <class ResolveZero>
std::vector<Sign> resolve_signs(const Polynomial& p, ResolveZero resolve) {
  auto w = counting_window(p);
  std::vector<Sign> out;
  out.reserve(w.size());
  for (std::size_t k = w.size(); k-- > 0;) {
    Sign s = sign_of(w[k]);
    out.push_back(s == Sign::Zero ? resolve(out.back()) : s);
  }
  return out;
}

}  // namespace detail

/// Signs of a_n ... a_{z0}, zeros copying the sign above them.
inline std::vector<Sign> alternation_signs(const Polynomial& p) {
  return detail::resolve_signs(p, [](Sign above) { return above; });
}

/// Signs of a_n ... a_{z0}, zeros taking the sign opposite to the one above.
inline std::vector<Sign> permanence_signs(const Polynomial& p) {
  return detail::resolve_signs(p, [](Sign above) { return opposite(above); });
}

/// v(P). Equal to the number of sign changes once zeros are dropped.
inline std::size_t count_alternations(const Polynomial& p) {
  return detail::count_changes(alternation_signs(p));
}

/// c(P).
inline std::size_t count_permanences(const Polynomial& p) {
  return detail::count_repeats(permanence_signs(p));
}

struct AssignmentCounts {
  std::size_t alternations = 0;
  std::size_t permanences = 0;

  friend bool operator==(const AssignmentCounts&, const AssignmentCounts&) = default;
};

/// Number of zero coefficients inside the counting window.
inline std::size_t internal_zero_count(const Polynomial& p) {
  std::size_t m = 0;
  for (const auto& a : detail::counting_window(p)) m += a.is_zero();
  return m;
}

/// Counts for an explicit choice of signs for the internal zeros, listed from
/// the highest index down.
inline AssignmentCounts counts_under_assignment(const Polynomial& p,
                                                std::span<const Sign> assignment) {
  auto w = detail::counting_window(p);
  std::vector<Sign> signs;
  signs.reserve(w.size());
  std::size_t used = 0;
  for (std::size_t k = w.size(); k-- > 0;) {
    Sign s = sign_of(w[k]);
    if (s == Sign::Zero) {
      if (used == assignment.size()) {
        throw domain_error("sign assignment is shorter than the number of internal zeros");
      }
      s = assignment[used++];
      if (s == Sign::Zero) throw domain_error("sign assignment must be + or -");
    }
    signs.push_back(s);
  }
  if (used != assignment.size()) {
    throw domain_error("sign assignment is longer than the number of internal zeros");
  }
  return {detail::count_changes(signs), detail::count_repeats(signs)};
}

inline SignCounts sign_counts(const Polynomial& p) {
  SignCounts s;
  s.alternations = count_alternations(p);
  s.permanences = count_permanences(p);
  s.zero_roots = zero_root_multiplicity(p);
  s.degree = *p.degree();
  return s;
}

/// Descartes bounds, Fourier parities and the lower bound on non-real roots.
inline RootBoundReport descartes_report(const Polynomial& p) {
  if (p.is_constant()) throw domain_error("root bounds need a polynomial of degree >= 1");
  RootBoundReport r;
  r.counts = sign_counts(p);
  r.positive_upper = r.counts.alternations;
  r.negative_upper = r.counts.permanences;
  r.positive_parity = r.counts.alternations % 2;
  r.negative_parity = r.counts.permanences % 2;
  r.imaginary_lower =
      r.counts.degree - r.counts.zero_roots - r.counts.alternations - r.counts.permanences;
  return r;
}

/// De Gua block analysis, highest-degree block first. The losses sum to
/// deg - z0 - v - c.
inline std::vector<ZeroBlock> de_gua_blocks(const Polynomial& p) {
  auto w = detail::counting_window(p);
  std::vector<ZeroBlock> out;
  std::size_t k = w.size() - 1;
  while (k > 0) {
    if (!w[k - 1].is_zero()) {
      --k;
      continue;
    }
    std::size_t j = k - 1;
    while (w[j].is_zero()) --j;  // w[0] is nonzero
    ZeroBlock b;
    b.left_sign = sign_of(w[k]);
    b.right_sign = sign_of(w[j]);
    b.zero_run_length = k - j - 1;
    b.pair_count = b.zero_run_length + 1;
    const bool differ = b.left_sign != b.right_sign;
    const bool even_run = b.zero_run_length % 2 == 0;
    b.alternation_contrib = differ ? 1 : 0;
    b.permanence_contrib = (even_run != differ) ? 1 : 0;
    b.loss = b.pair_count - b.alternation_contrib - b.permanence_contrib;
    out.push_back(b);
    k = j;
  }
  return out;
}

}  // namespace descartes
