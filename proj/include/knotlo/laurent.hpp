#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "error.hpp"

namespace knotlo {

/// Integer Laurent polynomial in one variable t; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Map = std::map<std::int64_t, std::int64_t>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }
  static LaurentPoly monomial(std::int64_t exp, std::int64_t coeff) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
  }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::int64_t coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(std::int64_t exp, std::int64_t coeff) {
    if (coeff == 0) return;
    auto& slot = terms_[exp];
    slot += coeff;
    if (slot == 0) terms_.erase(exp);
  }

  std::int64_t min_exp() const { return nonzero().terms_.begin()->first; }
  std::int64_t max_exp() const { return nonzero().terms_.rbegin()->first; }
  std::int64_t span() const { return max_exp() - min_exp(); }
  std::int64_t top_coeff() const { return nonzero().terms_.rbegin()->second; }

  std::int64_t eval(std::int64_t t) const {
    check_internal(t == 1 || t == -1, "LaurentPoly::eval supports t = +-1 only");
    std::int64_t v = 0;
    for (const auto& [e, c] : terms_) v += (t == -1 && (e % 2 != 0)) ? -c : c;
    return v;
  }

  LaurentPoly shifted(std::int64_t by) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + by, c);
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
  }

  /// Invariant under t -> t^-1.
  bool is_symmetric() const {
    for (const auto& [e, c] : terms_)
      if (coeff(-e) != c) return false;
    return true;
  }

  /// Symmetric form with positive top coefficient: the canonical representative
  /// up to multiplication by units +-t^k (requires even span).
  LaurentPoly symmetric_normalized() const {
    const LaurentPoly& p = nonzero();
    if (p.span() % 2 != 0) fail(ErrorCode::NotNormalized, "odd span has no symmetric form");
    LaurentPoly q = p.shifted(-(p.min_exp() + p.max_exp()) / 2);
    return q.top_coeff() < 0 ? -q : q;
  }

  bool is_normalized() const {
    return !is_zero() && is_symmetric() && top_coeff() > 0;
  }

  /// e.g. "t^2 - 3t + 3 - 3t^-1 + t^-2"
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      std::int64_t mag = c < 0 ? -c : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (e == 0) {
        out += std::to_string(mag);
        continue;
      }
      if (mag != 1) out += std::to_string(mag);
      out += 't';
      if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  const LaurentPoly& nonzero() const {
    if (terms_.empty()) fail(ErrorCode::InvalidArgument, "zero polynomial has no degree");
    return *this;
  }

  Map terms_;
};

}  // namespace knotlo
