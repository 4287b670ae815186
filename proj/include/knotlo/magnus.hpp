#pragma once

// Magnus order on a free group: g_i -> 1 + X_i into noncommutative power
// series; w > 1 iff the coefficient of the least monomial (by degree, then
// lexicographically in the variable order) appearing in M(w) - 1 is positive.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace knotlo {

struct MagnusResult {
  int sign = 0;        // 0 iff the word is freely trivial
  int degree = 0;      // degree of the deciding monomial
  std::int64_t coefficient = 0;
};

namespace detail {

using Monomial = std::vector<std::uint32_t>;

struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Series = std::map<Monomial, std::int64_t, GradedLex>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  check_internal(!__builtin_add_overflow(a, b, &r), "Magnus coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  check_internal(!__builtin_mul_overflow(a, b, &r), "Magnus coefficient overflow");
  return r;
}

/// (1 + X_var)^e truncated at degree `max_degree`.
inline std::vector<std::pair<int, std::int64_t>> binomial_series(std::int64_t e, int max_degree) {
  std::vector<std::pair<int, std::int64_t>> out{{0, 1}};
  std::int64_t c = 1;
  for (int k = 1; k <= max_degree; ++k) {
    // C(e, k) = C(e, k-1) (e - k + 1) / k; exact at every step.
    c = checked_mul(c, e - k + 1) / k;
    if (c == 0) break;
    out.push_back({k, c});
  }
  return out;
}

}  // namespace detail

/// Magnus sign of a word given as (variable key, exponent) syllables.  Keys are
/// ordered by operator<, so the order is the same for every query.
template <class Key>
MagnusResult magnus_sign(const std::vector<std::pair<Key, std::int64_t>>& word, int max_degree = 64) {
  // Free reduction.
  std::vector<std::pair<Key, std::int64_t>> w;
  for (const auto& [k, e] : word) {
    if (e == 0) continue;
    if (!w.empty() && w.back().first == k) {
      w.back().second += e;
      if (w.back().second == 0) w.pop_back();
    } else {
      w.push_back({k, e});
    }
  }
  if (w.empty()) return {};

  std::vector<Key> keys;
  for (const auto& s : w) keys.push_back(s.first);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  auto var = [&](const Key& k) {
    return static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
  };

  for (int degree = 1; degree <= max_degree; degree *= 2) {
    detail::Series acc{{{}, 1}};
    for (const auto& [k, e] : w) {
      const std::uint32_t v = var(k);
      const auto factor = detail::binomial_series(e, degree);
      detail::Series next;
      for (const auto& [mono, c] : acc) {
        for (const auto& [pow, b] : factor) {
          if (static_cast<int>(mono.size()) + pow > degree) break;
          detail::Monomial m = mono;
          m.insert(m.end(), static_cast<std::size_t>(pow), v);
          auto& slot = next[m];
          slot = detail::checked_add(slot, detail::checked_mul(c, b));
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      acc = std::move(next);
    }
    for (const auto& [mono, c] : acc) {
      if (mono.empty()) continue;
      return {c > 0 ? 1 : -1, static_cast<int>(mono.size()), c};
    }
  }
  fail(ErrorCode::InternalCheckFailed, "Magnus expansion undecided within the degree budget");
}

}  // namespace knotlo
