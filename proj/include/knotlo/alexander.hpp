#pragma once

// Alexander polynomials of two-bridge knots by free differential calculus,
// and the Alexander-polynomial obstruction to L-space surgeries.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "cfrac.hpp"
#include "error.hpp"
#include "laurent.hpp"
#include "word.hpp"

namespace knotlo {

namespace detail {
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace detail

/// Relator W u W^-1 v^-1 of the two-bridge presentation <u, v | W u = v W> of b(p, q),
/// W = u^e1 v^e2 u^e3 ... v^e(p-1), e_i = (-1)^floor(i q / p) with q taken odd.
inline Word two_bridge_relator(std::int64_t p, std::int64_t q) {
  if (p < 3 || p % 2 == 0) fail(ErrorCode::InvalidArgument, "two-bridge knot needs odd p >= 3");
  std::int64_t qq = ((q % p) + p) % p;
  if (qq == 0) fail(ErrorCode::InvalidArgument, "q must be prime to p");
  if (qq % 2 == 0) qq -= p;
  Word w;
  for (std::int64_t i = 1; i < p; ++i) {
    std::int64_t e = (detail::floor_div(i * qq, p) % 2 == 0) ? 1 : -1;
    w.push(i % 2 == 1 ? 'u' : 'v', e);
  }
  return w * Word('u') * w.inverse() * Word('v', -1);
}

/// Free derivative d(word)/d(gen), pushed to Z[t, t^-1] by sending every generator to t.
inline LaurentPoly fox_derivative_abelian(const Word& word, char gen) {
  LaurentPoly d;
  std::int64_t deg = 0;
  for (const auto& s : word.syllables()) {
    if (s.gen == gen) {
      if (s.exp > 0)
        for (std::int64_t k = 0; k < s.exp; ++k) d.add_term(deg + k, 1);
      else
        for (std::int64_t k = 1; k <= -s.exp; ++k) d.add_term(deg - k, -1);
    }
    deg += s.exp;
  }
  return d;
}

/// Normalized Alexander polynomial of b(p, q); checks Delta(1) = +-1 and |Delta(-1)| = p.
inline LaurentPoly alexander_poly_two_bridge(std::int64_t p, std::int64_t q) {
  LaurentPoly d = fox_derivative_abelian(two_bridge_relator(p, q), 'u').symmetric_normalized();
  check_internal(std::llabs(d.eval(1)) == 1, "Alexander polynomial: Delta(1) != +-1");
  check_internal(std::llabs(d.eval(-1)) == p, "Alexander polynomial: |Delta(-1)| != p");
  return d;
}

inline LaurentPoly alexander_poly(const TwoBridgeParams& k) {
  LaurentPoly d = alexander_poly_two_bridge(k.p, k.q);
  check_internal(d.span() == 2 * genus(k), "Alexander polynomial: span != 2 genus");
  return d;
}

struct LSpaceFormReport {
  bool matches = false;
  std::int64_t k = 0;
  std::vector<std::int64_t> exponents;  // n_1 < ... < n_k, present iff matches
};

/// Whether poly = (-1)^k + sum_j (-1)^(k-j) (t^n_j + t^-n_j) with 0 < n_1 < ... < n_k.
inline LSpaceFormReport lspace_form(const LaurentPoly& poly) {
  if (!poly.is_normalized())
    fail(ErrorCode::NotNormalized, "lspace_form expects a symmetric polynomial with positive top coefficient");
  std::vector<std::int64_t> ns;
  for (const auto& [e, c] : poly.terms())
    if (e > 0) ns.push_back(e);
  const auto k = static_cast<std::int64_t>(ns.size());
  auto sign = [](std::int64_t m) -> std::int64_t { return m % 2 == 0 ? 1 : -1; };
  if (poly.coeff(0) != sign(k)) return {};
  for (std::int64_t j = 1; j <= k; ++j)
    if (poly.coeff(ns[static_cast<std::size_t>(j - 1)]) != sign(k - j)) return {};
  return {true, k, std::move(ns)};
}

/// Build the polynomial of the displayed L-space form from its exponents.
inline LaurentPoly lspace_form_poly(const std::vector<std::int64_t>& exponents) {
  const auto k = static_cast<std::int64_t>(exponents.size());
  auto sign = [](std::int64_t m) -> std::int64_t { return m % 2 == 0 ? 1 : -1; };
  LaurentPoly p = LaurentPoly::constant(sign(k));
  for (std::int64_t j = 1; j <= k; ++j) {
    std::int64_t n = exponents[static_cast<std::size_t>(j - 1)];
    p.add_term(n, sign(k - j));
    p.add_term(-n, sign(k - j));
  }
  return p;
}

enum class LSpaceReason { NotFibered, DeterminantExceedsGenusBound };

inline const char* to_string(LSpaceReason r) {
  return r == LSpaceReason::NotFibered ? "NotFibered" : "DeterminantExceedsGenusBound";
}

struct LSpaceVerdict {
  bool admits = false;
  LSpaceReason reason = LSpaceReason::NotFibered;
  std::int64_t determinant = 0;  // |Delta(-1)|
  std::int64_t genus_bound = 0;  // 2 g + 1; set on the fibered branch only
};

/// Non-fibered knots admit no L-space surgery; in the fibered case b1 = 1, b2 > 0 an L-space
/// form would force 6 b2 - 1 = |Delta(-1)| <= 2k + 1 <= 2 g + 1 = 2 b2 + 1.
inline LSpaceVerdict lspace_surgery_verdict(const TwoBridgeParams& k) {
  LSpaceVerdict v;
  LaurentPoly d = alexander_poly(k);
  v.determinant = std::llabs(d.eval(-1));
  if (!is_fibered(k)) {
    v.reason = LSpaceReason::NotFibered;
    return v;
  }
  const std::int64_t g = genus(k);
  check_internal(g == k.b2, "fibered genus equals b2");
  check_internal(v.determinant == 6 * k.b2 - 1, "determinant equals 6 b2 - 1");
  v.genus_bound = 2 * g + 1;
  check_internal(v.determinant > v.genus_bound, "6 b2 - 1 > 2 b2 + 1");
  check_internal(!lspace_form(d).matches, "Alexander polynomial unexpectedly has L-space form");
  v.reason = LSpaceReason::DeterminantExceedsGenusBound;
  return v;
}

}  // namespace knotlo
