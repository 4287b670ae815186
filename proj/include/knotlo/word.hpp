#pragma once

// Freely reduced words over single-letter generator names.
//
// Syntax: generators are ASCII letters, optionally followed by ^exponent;
// juxtaposition (whitespace or '*' optional) is the product, "1" or the
// empty string is the identity.  Example: "b^-1 a a" == "b^-1a^2".

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace knotlo {

struct Syllable {
  char gen = 'a';
  std::int64_t exp = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  Word() = default;
  Word(char gen, std::int64_t exp = 1) { push(gen, exp); }

  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool empty() const noexcept { return syl_.empty(); }

  /// Number of letters, i.e. the sum of |exponent| over syllables.
  std::int64_t length() const noexcept {
    std::int64_t n = 0;
    for (const auto& s : syl_) n += std::llabs(s.exp);
    return n;
  }

  std::int64_t exponent_sum(char gen) const noexcept {
    std::int64_t n = 0;
    for (const auto& s : syl_)
      if (s.gen == gen) n += s.exp;
    return n;
  }

  /// Right-multiplies by gen^exp, merging and cancelling against the tail.
  Word& push(char gen, std::int64_t exp) {
    if (exp == 0) return *this;
    if (!syl_.empty() && syl_.back().gen == gen) {
      syl_.back().exp += exp;
      if (syl_.back().exp == 0) syl_.pop_back();
    } else {
      syl_.push_back({gen, exp});
    }
    return *this;
  }

  Word& operator*=(const Word& rhs) {
    for (const auto& s : rhs.syl_) push(s.gen, s.exp);
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  Word inverse() const {
    Word w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
    return w;
  }

  Word pow(std::int64_t k) const {
    Word base = k < 0 ? inverse() : *this;
    Word out;
    for (std::int64_t i = 0; i < std::llabs(k); ++i) out *= base;
    return out;
  }

  /// g^-1 * this * g
  Word conjugated_by(const Word& g) const { return g.inverse() * *this * g; }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;
};

/// Free reduction of an arbitrary syllable sequence.
inline Word free_reduce(std::span<const Syllable> raw) {
  Word w;
  for (const auto& s : raw) w.push(s.gen, s.exp);
  return w;
}

inline Word Word::parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
      ++i;
  };
  skip();
  if (text.substr(i) == "1") return w;
  while (i < text.size()) {
    char c = text[i];
    if (!std::isalpha(static_cast<unsigned char>(c)))
      fail(ErrorCode::ParseError, "unexpected character '" + std::string(1, c) + "' in word");
    ++i;
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits || i - digits > 12)
        fail(ErrorCode::ParseError, "bad exponent after '" + std::string(1, c) + "^'");
      exp = std::stoll(std::string(text.substr(start, i - start)));
    }
    w.push(c, exp);
    skip();
  }
  return w;
}

inline std::string Word::to_string() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) out += ' ';
    out += s.gen;
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

/// Throws ParseError if `w` uses a generator outside `alphabet`.
inline void require_alphabet(const Word& w, std::string_view alphabet, std::string_view group) {
  for (const auto& s : w.syllables())
    if (alphabet.find(s.gen) == std::string_view::npos)
      fail(ErrorCode::ParseError, "generator '" + std::string(1, s.gen) + "' is not in " +
                                      std::string(group) + " {" + std::string(alphabet) + "}");
}

/// All freely reduced words of letter length <= radius over the given generators,
/// in shortlex order (identity first).
inline std::vector<Word> ball(std::string_view gens, int radius) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= radius; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      for (char g : gens) {
        for (int e : {1, -1}) {
          const Word& base = out[idx];
          if (!base.empty()) {
            const auto& last = base.syllables().back();
            if (last.gen == g && (last.exp > 0) != (e > 0)) continue;
          }
          Word w = base;
          w.push(g, e);
          out.push_back(std::move(w));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

/// Uniform index in [0, n) from a 64-bit engine; independent of the standard
/// library's distribution implementations so seeded runs are portable.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % n;
}

/// Random freely reduced word with exactly `letters` letters.
inline Word random_word(std::mt19937_64& rng, std::string_view gens, int letters) {
  Word w;
  while (w.length() < letters) {
    char g = gens[draw_below(rng, gens.size())];
    int e = draw_below(rng, 2) ? 1 : -1;
    if (!w.empty()) {
      const auto& last = w.syllables().back();
      if (last.gen == g && (last.exp > 0) != (e > 0)) continue;
    }
    w.push(g, e);
  }
  return w;
}

}  // namespace knotlo
