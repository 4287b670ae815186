#pragma once

// Subtractive continued fractions and the parameters of the two-bridge
// knots K[c1, c2] with c1 odd, c2 even and |c1|, |c2| > 2.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace knotlo {

using Rational = mpq_class;

/// n / d in lowest terms (mpq_class(n, d) alone does not canonicalize).
inline Rational fraction(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(static_cast<long>(n), static_cast<long>(d));
  r.canonicalize();
  return r;
}

/// Entries (c1, ..., cm) of [c1, ..., cm]^- = 1/(c1 - 1/(c2 - ... - 1/cm)).
class ContinuedFraction {
 public:
  ContinuedFraction() = default;
  explicit ContinuedFraction(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) fail(ErrorCode::InvalidArgument, "continued fraction has no entries");
    for (auto c : entries_)
      if (c == 0) fail(ErrorCode::InvalidArgument, "continued fraction entry is zero");
  }

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Exact value; throws ZeroDenominator when a nested denominator vanishes.
inline Rational eval_cf(const ContinuedFraction& cf) {
  const auto& c = cf.entries();
  if (c.empty()) fail(ErrorCode::InvalidArgument, "continued fraction has no entries");
  Rational tail(1, 1);
  tail /= Rational(static_cast<long>(c.back()));
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    Rational denom = Rational(static_cast<long>(*it)) - tail;
    if (denom == 0) fail(ErrorCode::ZeroDenominator, "nested denominator vanishes");
    tail = 1 / denom;
  }
  tail.canonicalize();
  return tail;
}

struct LensSpace {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

struct TwoBridgeParams {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  std::int64_t p = 0;      // |c1*c2 - 1|
  std::int64_t q = 0;      // c2 mod p, in (0, p)
  std::int64_t slope = 0;  // 2*c2 = 4*b2
  bool mirrored = false;   // input had c1 < 0 and was replaced by (-c1, -c2)

  /// 2*b1 + 1, the order of b in the quotient of G1 by its center.
  std::int64_t n() const noexcept { return 2 * b1 + 1; }
};

inline constexpr std::int64_t kMaxEntry = std::int64_t{1} << 20;

inline TwoBridgeParams knot_params(std::int64_t c1, std::int64_t c2) {
  if (c1 % 2 == 0)
    fail(ErrorCode::OutOfFamily, "c1 must be odd, got " + std::to_string(c1));
  if (c2 % 2 != 0)
    fail(ErrorCode::OutOfFamily, "c2 must be even, got " + std::to_string(c2));
  if (std::llabs(c1) <= 2 || std::llabs(c2) <= 2)
    fail(ErrorCode::OutOfFamily, "need |c1| > 2 and |c2| > 2 (twist knots are excluded)");
  if (std::llabs(c1) > kMaxEntry || std::llabs(c2) > kMaxEntry)
    fail(ErrorCode::InvalidArgument, "entries larger than 2^20 are not supported");

  TwoBridgeParams k;
  k.mirrored = c1 < 0;
  k.c1 = k.mirrored ? -c1 : c1;
  k.c2 = k.mirrored ? -c2 : c2;
  k.b1 = (k.c1 - 1) / 2;
  k.b2 = k.c2 / 2;
  k.p = std::llabs(k.c1 * k.c2 - 1);
  k.q = ((k.c2 % k.p) + k.p) % k.p;
  k.slope = 2 * k.c2;

  check_internal(k.c1 == 2 * k.b1 + 1 && k.c2 == 2 * k.b2, "c = 2b (+1) decomposition");
  check_internal(k.p % 2 == 1, "determinant of a knot is odd");
  check_internal(std::gcd(k.p, k.q) == 1, "gcd(p, q) = 1");
  check_internal(k.slope == 4 * k.b2, "slope = 4 b2");
  return k;
}

/// The all-even expansion whose plumbing gives a minimal genus Seifert surface:
/// [2b1, -2, ..., -2] (2b2-1 copies) for b2 > 0, [2b1+2, 2, ..., 2] (-2b2-1 copies) for b2 < 0.
inline ContinuedFraction even_expansion(const TwoBridgeParams& k) {
  std::vector<std::int64_t> e;
  if (k.b2 > 0) {
    e.push_back(2 * k.b1);
    e.insert(e.end(), static_cast<std::size_t>(2 * k.b2 - 1), -2);
  } else {
    e.push_back(2 * k.b1 + 2);
    e.insert(e.end(), static_cast<std::size_t>(-2 * k.b2 - 1), 2);
  }
  return ContinuedFraction(std::move(e));
}

inline bool is_fibered(const TwoBridgeParams& k) { return k.b1 == 1 && k.b2 > 0; }

inline std::int64_t genus(const TwoBridgeParams& k) {
  return static_cast<std::int64_t>(even_expansion(k).size()) / 2;
}

/// L(c1*c2 - 1, c2) normalized to p > 0, 0 < q < p.
inline LensSpace double_branched_cover(const TwoBridgeParams& k) { return {k.p, k.q}; }

}  // namespace knotlo
