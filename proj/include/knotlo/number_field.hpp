#pragma once

// Exact arithmetic in Z[lambda] for a real algebraic integer lambda, given by
// its monic minimal polynomial and an isolating interval.  Signs are decided
// by interval enclosures of the powers of lambda, refined until the enclosure
// of the value excludes zero; the zero test itself is exact (zero coordinate
// vector), so every sign query terminates.

#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace knotlo {

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<mpq_class>;

namespace poly {

template <class T>
void trim(std::vector<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

/// Exact quotient a / b for monic b dividing a.
inline IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  check_internal(!b.empty() && b.back() == 1, "divide_exact needs a monic divisor");
  if (a.size() < b.size()) {
    check_internal(a.empty(), "divide_exact: not divisible");
    return {};
  }
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  trim(a);
  check_internal(a.empty(), "divide_exact: nonzero remainder");
  return q;
}

inline RatPoly to_rational(const IntPoly& p) { return RatPoly(p.begin(), p.end()); }

template <class T>
T eval(const std::vector<T>& p, const T& x) {
  T v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline int sign_at(const IntPoly& p, const mpq_class& x) {
  return sgn(eval(to_rational(p), x));
}

inline RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

inline RatPoly remainder(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

/// Number of distinct real roots of p in (lo, hi], by a Sturm sequence.
inline int count_roots(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
  std::vector<RatPoly> seq{to_rational(p)};
  seq.push_back(derivative(seq[0]));
  while (!seq.back().empty()) {
    RatPoly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  auto variations = [&](const mpq_class& x) {
    int count = 0, last = 0;
    for (const auto& s : seq) {
      int v = sgn(eval(s, x));
      if (v == 0) continue;
      if (last != 0 && v != last) ++count;
      last = v;
    }
    return count;
  };
  return variations(lo) - variations(hi);
}

/// The m-th cyclotomic polynomial.
inline IntPoly cyclotomic(int m) {
  IntPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(p, cyclotomic(d));
  return p;
}

/// Minimal polynomial of 2 cos(pi / n), n >= 3 odd, from the 2n-th cyclotomic polynomial:
/// x^-d Phi_2n(x) = P(x + 1/x) with x^j + x^-j expanded by the Dickson recursion.
inline IntPoly cos_pi_minimal_polynomial(int n) {
  if (n < 3 || n % 2 == 0) fail(ErrorCode::InvalidArgument, "n must be odd and >= 3");
  IntPoly phi = cyclotomic(2 * n);
  const std::size_t d = (phi.size() - 1) / 2;
  std::vector<IntPoly> dickson{IntPoly{2}, IntPoly{0, 1}};
  for (std::size_t j = 2; j <= d; ++j) {
    IntPoly next = mul(IntPoly{0, 1}, dickson[j - 1]);
    const IntPoly& prev = dickson[j - 2];
    next.resize(std::max(next.size(), prev.size()), 0);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    trim(next);
    dickson.push_back(std::move(next));
  }
  IntPoly out{phi[d]};
  out.resize(d + 1, 0);
  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t i = 0; i < dickson[j].size(); ++i) out[i] += phi[d + j] * dickson[j][i];
  trim(out);
  return out;
}

}  // namespace poly

/// Element of Z[lambda] in the power basis 1, lambda, ..., lambda^(d-1).
using FieldElem = std::vector<mpz_class>;

class NumberField {
 public:
  /// `minpoly` monic of degree d >= 1; `approx_root` locates the real root.
  /// Throws ConstructionFailed if no unique positive root sits near approx_root.
  NumberField(IntPoly minpoly, double approx_root, std::string name = "lambda")
      : minpoly_(std::move(minpoly)), name_(std::move(name)) {
    poly::trim(minpoly_);
    if (minpoly_.size() < 2 || minpoly_.back() != 1)
      fail(ErrorCode::ConstructionFailed, "minimal polynomial must be monic of degree >= 1");
    degree_ = static_cast<int>(minpoly_.size()) - 1;

    lo_ = mpq_class(approx_root) - mpq_class(1, 1000000);
    hi_ = mpq_class(approx_root) + mpq_class(1, 1000000);
    lo_.canonicalize();
    hi_.canonicalize();
    if (lo_ <= 0) fail(ErrorCode::ConstructionFailed, "isolating interval must be positive");
    if (poly::count_roots(minpoly_, lo_, hi_) != 1)
      fail(ErrorCode::ConstructionFailed, "minimal polynomial has no isolated root near " +
                                              std::to_string(approx_root));
    if (poly::sign_at(minpoly_, lo_) == 0)
      fail(ErrorCode::ConstructionFailed, "root sits on the isolating interval boundary");
    refine(lo_, hi_, kBasePrecision);
    base_ = enclose(lo_, hi_, kBasePrecision);

    // lambda^(d+j) in the power basis, j = 0 .. d-2.
    FieldElem cur(static_cast<std::size_t>(degree_), 0);
    for (int i = 0; i < degree_; ++i) cur[static_cast<std::size_t>(i)] = -minpoly_[static_cast<std::size_t>(i)];
    for (int j = 0; j + 1 < degree_; ++j) {
      reduction_.push_back(cur);
      FieldElem next(static_cast<std::size_t>(degree_), 0);
      for (int i = 1; i < degree_; ++i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      const mpz_class top = cur[static_cast<std::size_t>(degree_ - 1)];
      for (int i = 0; i < degree_; ++i) next[static_cast<std::size_t>(i)] -= top * minpoly_[static_cast<std::size_t>(i)];
      cur = std::move(next);
    }
  }

  /// Q(lambda), lambda = 2 cos(pi / n).
  static std::shared_ptr<const NumberField> cos_pi_over(int n) {
    return std::make_shared<const NumberField>(poly::cos_pi_minimal_polynomial(n),
                                               2.0 * std::cos(std::numbers::pi / n),
                                               "2cos(pi/" + std::to_string(n) + ")");
  }

  int degree() const noexcept { return degree_; }
  const IntPoly& minimal_polynomial() const noexcept { return minpoly_; }
  const std::string& name() const noexcept { return name_; }

  FieldElem zero() const { return FieldElem(static_cast<std::size_t>(degree_), 0); }
  FieldElem from_int(long v) const {
    FieldElem e = zero();
    e[0] = v;
    return e;
  }
  FieldElem generator() const {
    FieldElem e = zero();
    if (degree_ == 1)
      e[0] = -minpoly_[0];
    else
      e[1] = 1;
    return e;
  }

  static bool is_zero(const FieldElem& x) {
    for (const auto& c : x)
      if (c != 0) return false;
    return true;
  }

  FieldElem add(const FieldElem& x, const FieldElem& y) const {
    FieldElem r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
  }
  FieldElem sub(const FieldElem& x, const FieldElem& y) const {
    FieldElem r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
  }
  FieldElem neg(const FieldElem& x) const {
    FieldElem r = x;
    for (auto& c : r) c = -c;
    return r;
  }
  FieldElem mul(const FieldElem& x, const FieldElem& y) const {
    const auto d = static_cast<std::size_t>(degree_);
    std::vector<mpz_class> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) prod[i + j] += x[i] * y[j];
    }
    FieldElem r(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
    for (std::size_t k = d; k < prod.size(); ++k) {
      if (prod[k] == 0) continue;
      const FieldElem& row = reduction_[k - d];
      for (std::size_t i = 0; i < d; ++i) r[i] += prod[k] * row[i];
    }
    return r;
  }

  /// Exact sign of the real number x(lambda).
  int sign(const FieldElem& x) const {
    if (is_zero(x)) return 0;
    if (int s = sign_with(x, base_); s != 0) return s;
    mpq_class lo = lo_, hi = hi_;
    for (long precision = 2 * kBasePrecision;; precision *= 2) {
      check_internal(precision <= kMaxPrecision, "sign refinement exceeded precision budget");
      refine(lo, hi, precision);
      if (int s = sign_with(x, enclose(lo, hi, precision)); s != 0) return s;
    }
  }

  double approx(const FieldElem& x) const {
    double lambda = 0.5 * (lo_.get_d() + hi_.get_d());
    double v = 0;
    for (std::size_t i = x.size(); i-- > 0;) v = v * lambda + x[i].get_d();
    return v;
  }

  /// e.g. "3 - 2*L + L^2" with L the generator.
  static std::string to_string(const FieldElem& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      if (!out.empty()) out += x[i] > 0 ? " + " : " - ";
      else if (x[i] < 0) out += "-";
      const mpz_class mag = abs(x[i]);
      std::string mono = i == 0 ? "" : (i == 1 ? "L" : "L^" + std::to_string(i));
      if (mono.empty()) out += mag.get_str();
      else if (mag == 1) out += mono;
      else out += mag.get_str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
  }

 private:
  static constexpr long kBasePrecision = 256;
  static constexpr long kMaxPrecision = 1L << 20;

  // Floor/ceil of lo^i 2^K and hi^i 2^K, i < d (0 < lo <= lambda <= hi).
  struct Enclosure {
    long precision = 0;
    std::vector<mpz_class> lo, hi;
  };

  Enclosure enclose(const mpq_class& lo, const mpq_class& hi, long precision) const {
    Enclosure e;
    e.precision = precision;
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(precision));
    mpq_class plo = 1, phi = 1;
    for (int i = 0; i < degree_; ++i) {
      mpq_class a = plo * scale, b = phi * scale;
      mpz_class fl, ce;
      mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
      mpz_cdiv_q(ce.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
      e.lo.push_back(fl);
      e.hi.push_back(ce);
      plo *= lo;
      phi *= hi;
    }
    return e;
  }

  static int sign_with(const FieldElem& x, const Enclosure& e) {
    mpz_class low = 0, high = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > 0) {
        low += x[i] * e.lo[i];
        high += x[i] * e.hi[i];
      } else if (x[i] < 0) {
        low += x[i] * e.hi[i];
        high += x[i] * e.lo[i];
      }
    }
    if (low > 0) return 1;
    if (high < 0) return -1;
    return 0;
  }

  // Bisect [lo, hi] until hi - lo <= 2^-precision (or the root is hit exactly).
  void refine(mpq_class& lo, mpq_class& hi, long precision) const {
    mpq_class width(1);
    mpz_mul_2exp(width.get_den_mpz_t(), width.get_den_mpz_t(), static_cast<mp_bitcnt_t>(precision));
    width.canonicalize();
    const int s_lo = poly::sign_at(minpoly_, lo);
    while (hi - lo > width) {
      mpq_class mid = (lo + hi) / 2;
      int s = poly::sign_at(minpoly_, mid);
      if (s == 0) {
        lo = hi = mid;
        return;
      }
      (s == s_lo ? lo : hi) = mid;
    }
  }

  IntPoly minpoly_;
  std::string name_;
  int degree_ = 0;
  mpq_class lo_, hi_;
  Enclosure base_;
  std::vector<FieldElem> reduction_;
};

}  // namespace knotlo
