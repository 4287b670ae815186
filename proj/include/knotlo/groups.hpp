#pragma once

// Presentations of the two JSJ pieces and of the surgered manifold, and
// total normal forms for
//
//   G1 = <a, b | a^2 = b^n>,                  n = 2 b1 + 1,
//   G2 = <x, y, z | x^-1 y x = y^-1, y = z^b2>.
//
// G1 is a central extension of Z/2 * Z/n by <h>, h = a^2 = b^n.  An element is
// stored as (delta, central): delta an alternating word in a-bar and b-bar^j
// (1 <= j < n), and the element equals lift(delta) * h^central where lift
// sends a-bar to a and b-bar^j to b^j.
//
// G2 maps onto Z by the x-exponent.  Its kernel K is generated by
// z_i = x^-i z x^i with z_i^b2 = z_(i+1)^-b2, hence z_i^b2 = y^((-1)^i) and y is
// central in K: K is a central extension of *_i Z/|b2| by <y>.  An element is
// stored as x^xpow * lift(delta) * y^ycentral with delta alternating in letters
// z_i^j (1 <= j < |b2|).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "cfrac.hpp"
#include "error.hpp"
#include "word.hpp"

namespace knotlo {

namespace detail {
inline std::int64_t floor_divide(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
inline std::int64_t mod_positive(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }
inline std::int64_t parity_sign(std::int64_t i) { return (i % 2 == 0) ? 1 : -1; }
}  // namespace detail

struct GroupPresentation {
  std::string generators;
  std::vector<Word> relators;

  std::vector<std::string> relator_strings() const {
    std::vector<std::string> out;
    for (const auto& r : relators) out.push_back(r.to_string());
    return out;
  }
};

struct PeripheralVector {
  std::int64_t r = 0;
  std::int64_t s = 0;
  bool is_zero() const noexcept { return r == 0 && s == 0; }
  friend bool operator==(const PeripheralVector&, const PeripheralVector&) = default;
};

enum class Side { G1, G2 };

/// mu^r h^s with mu = b^-b1 a, h = a^2 (G1), or y^r (z x^2)^s (G2).
inline Word peripheral_word(const TwoBridgeParams& k, Side side, PeripheralVector v) {
  if (side == Side::G1) {
    Word mu = Word('b', -k.b1) * Word('a');
    return mu.pow(v.r) * Word('a', 2 * v.s);
  }
  return Word('y', v.r) * (Word('z') * Word('x', 2)).pow(v.s);
}

/// The gluing of the boundary tori: mu -> y, h -> z x^2, i.e. (r, s) -> (r, s)
/// in the bases (mu, h) and (y, z x^2).
struct GluingMap {
  Word mu;        // b^-b1 a
  Word h;         // a^2
  Word mu_image;  // y
  Word h_image;   // z x^2

  PeripheralVector apply(PeripheralVector v) const { return v; }
};

struct Presentations {
  GroupPresentation g1;
  GroupPresentation g2;
  GroupPresentation manifold;
  GluingMap gluing;
};

inline Presentations presentations(const TwoBridgeParams& k) {
  const std::int64_t n = k.n();
  Word r_kb = Word('x', -1) * Word('y') * Word('x') * Word('y');
  Word r_cable = Word('y') * Word('z', -k.b2);
  Word r_torus = Word('a', 2) * Word('b', -n);
  Word mu = Word('b', -k.b1) * Word('a');
  Word h = Word('a', 2);
  Word h_image = Word('z') * Word('x', 2);

  Presentations out;
  out.g1 = {"ab", {r_torus}};
  out.g2 = {"xyz", {r_kb, r_cable}};
  out.manifold = {"xyzab",
                  {r_kb, r_cable, r_torus, mu * Word('y', -1), h * h_image.inverse()}};
  out.gluing = {mu, h, Word('y'), h_image};
  return out;
}

/// G1 on generators b, c = b a^-1: <b, c | b = c b^(2 b1) c>.
inline GroupPresentation g1_bc_presentation(const TwoBridgeParams& k) {
  return {"bc", {Word('b', -1) * Word('c') * Word('b', 2 * k.b1) * Word('c')}};
}

/// Tietze substitution a -> c^-1 b (words over {a, b} to words over {b, c}).
inline Word g1_ab_to_bc(const Word& w) {
  Word out;
  for (const auto& s : w.syllables()) {
    if (s.gen == 'a')
      out *= (Word('c', -1) * Word('b')).pow(s.exp);
    else
      out *= Word(s.gen, s.exp);
  }
  return out;
}

/// Tietze substitution c -> b a^-1 (words over {b, c} to words over {a, b}).
inline Word g1_bc_to_ab(const Word& w) {
  Word out;
  for (const auto& s : w.syllables()) {
    if (s.gen == 'c')
      out *= (Word('b') * Word('a', -1)).pow(s.exp);
    else
      out *= Word(s.gen, s.exp);
  }
  return out;
}

// ---------------------------------------------------------------- G1

struct G1Letter {
  bool is_a = false;
  std::int64_t power = 1;  // 1 for a-bar, 1..n-1 for b-bar
  friend bool operator==(const G1Letter&, const G1Letter&) = default;
};

struct G1Element {
  std::vector<G1Letter> delta;
  std::int64_t central = 0;

  bool is_identity() const noexcept { return delta.empty() && central == 0; }
  friend bool operator==(const G1Element&, const G1Element&) = default;
};

class G1Group {
 public:
  explicit G1Group(std::int64_t b1) : b1_(b1), n_(2 * b1 + 1) {
    if (b1 < 1) fail(ErrorCode::InvalidArgument, "b1 must be >= 1");
  }
  explicit G1Group(const TwoBridgeParams& k) : G1Group(k.b1) {}

  std::int64_t b1() const noexcept { return b1_; }
  std::int64_t n() const noexcept { return n_; }

  G1Element normal_form(const Word& w) const {
    require_alphabet(w, "ab", "G1");
    G1Element e;
    for (const auto& s : w.syllables()) multiply(e, s.gen, s.exp);
    return e;
  }

  void multiply(G1Element& e, char gen, std::int64_t exp) const {
    const std::int64_t order = gen == 'a' ? 2 : n_;
    std::int64_t q = detail::floor_divide(exp, order);
    std::int64_t r = exp - q * order;
    e.central += q;
    if (r == 0) return;
    const bool is_a = gen == 'a';
    if (!e.delta.empty() && e.delta.back().is_a == is_a) {
      auto& top = e.delta.back();
      top.power += r;
      if (top.power >= order) {
        top.power -= order;
        e.central += 1;
      }
      if (top.power == 0) e.delta.pop_back();
    } else {
      e.delta.push_back({is_a, r});
    }
  }

  Word to_word(const G1Element& e) const {
    Word w;
    for (const auto& l : e.delta) w.push(l.is_a ? 'a' : 'b', l.power);
    w.push('a', 2 * e.central);
    return w;
  }

  G1Element multiply(const G1Element& x, const G1Element& y) const {
    return normal_form(to_word(x) * to_word(y));
  }

  bool equal(const Word& u, const Word& v) const { return normal_form(u) == normal_form(v); }

  Word mu() const { return Word('b', -b1_) * Word('a'); }
  Word h() const { return Word('a', 2); }

 private:
  std::int64_t b1_;
  std::int64_t n_;
};

// ---------------------------------------------------------------- G2

struct KLetter {
  std::int64_t index = 0;  // z_index
  std::int64_t power = 1;  // 1..|b2|-1
  friend bool operator==(const KLetter&, const KLetter&) = default;
};

struct G2Element {
  std::int64_t xpow = 0;
  std::vector<KLetter> delta;
  std::int64_t ycentral = 0;

  bool is_identity() const noexcept { return xpow == 0 && delta.empty() && ycentral == 0; }
  friend bool operator==(const G2Element&, const G2Element&) = default;
};

class G2Group {
 public:
  explicit G2Group(std::int64_t b2) : b2_(b2), order_(std::llabs(b2)) {
    if (order_ < 2) fail(ErrorCode::InvalidArgument, "|b2| must be >= 2");
  }
  explicit G2Group(const TwoBridgeParams& k) : G2Group(k.b2) {}

  std::int64_t b2() const noexcept { return b2_; }
  /// |b2|, the order of z_i modulo the center of the kernel.
  std::int64_t order() const noexcept { return order_; }

  /// z_i^|b2| = y^sigma(i).
  std::int64_t sigma(std::int64_t i) const noexcept {
    return detail::parity_sign(i) * (b2_ > 0 ? 1 : -1);
  }

  G2Element normal_form(const Word& w) const {
    require_alphabet(w, "xyz", "G2");
    G2Element e;
    for (const auto& s : w.syllables()) {
      switch (s.gen) {
        case 'x': shift(e, s.exp); break;
        case 'y': e.ycentral += s.exp; break;
        default: multiply_z(e, 0, s.exp); break;
      }
    }
    return e;
  }

  Word to_word(const G2Element& e) const {
    Word w('x', e.xpow);
    for (const auto& l : e.delta) w *= Word('x', -l.index) * Word('z', l.power) * Word('x', l.index);
    w.push('y', e.ycentral);
    return w;
  }

  G2Element multiply(const G2Element& u, const G2Element& v) const {
    return normal_form(to_word(u) * to_word(v));
  }

  bool equal(const Word& u, const Word& v) const { return normal_form(u) == normal_form(v); }

  /// Image under t: ker(pi) -> Z, z_i -> (-1)^i (so y -> b2).
  std::int64_t kernel_t(const G2Element& e) const {
    std::int64_t t = b2_ * e.ycentral;
    for (const auto& l : e.delta) t += detail::parity_sign(l.index) * l.power;
    return t;
  }

  /// Free-basis key (i, k) of the Schreier generator z_0^k z_i z_0^-(k + (-1)^i), i != 0.
  using BasisKey = std::pair<std::int64_t, std::int64_t>;
  using BasisWord = std::vector<std::pair<BasisKey, std::int64_t>>;

  /// Rewrites an element of ker(t) (xpow = 0, kernel_t = 0) in the global free basis of
  /// ker(t), identified with ker(*_i Z/|b2| -> Z/|b2|) through the quotient by y.
  /// Transversal {z_0^k}; the generator with k = -(-1)^i mod |b2| is eliminated through
  /// the relation gamma(0,i) gamma(e,i) ... gamma((|b2|-1) e, i) = 1, e = (-1)^i.
  BasisWord schreier_rewrite(const G2Element& e) const {
    check_internal(e.xpow == 0 && kernel_t(e) == 0, "schreier_rewrite needs an element of ker t");
    const std::int64_t m = order_;
    BasisWord out;
    auto emit = [&](BasisKey key, std::int64_t exp) {
      if (!out.empty() && out.back().first == key) {
        out.back().second += exp;
        if (out.back().second == 0) out.pop_back();
      } else {
        out.push_back({key, exp});
      }
    };
    std::int64_t coset = 0;
    for (const auto& l : e.delta) {
      const std::int64_t i = l.index;
      const std::int64_t step = detail::parity_sign(i);
      if (i == 0) {
        coset = detail::mod_positive(coset + l.power, m);
        continue;
      }
      const std::int64_t eliminated = detail::mod_positive(-step, m);
      for (std::int64_t rep = 0; rep < l.power; ++rep) {
        if (coset == eliminated) {
          for (std::int64_t j = m - 2; j >= 0; --j)
            emit({i, detail::mod_positive(j * step, m)}, -1);
        } else {
          emit({i, coset}, 1);
        }
        coset = detail::mod_positive(coset + step, m);
      }
    }
    check_internal(coset == 0, "schreier_rewrite: element left the kernel coset");
    return out;
  }

  Word y() const { return Word('y'); }
  Word h_image() const { return Word('z') * Word('x', 2); }

 private:
  // x^n k x^e = x^(n+e) (x^-e k x^e): z_i -> z_(i+e), y -> y^((-1)^e).
  void shift(G2Element& e, std::int64_t by) const {
    e.xpow += by;
    for (auto& l : e.delta) l.index += by;
    if (by % 2 != 0) e.ycentral = -e.ycentral;
  }

  void multiply_z(G2Element& e, std::int64_t index, std::int64_t exp) const {
    std::int64_t q = detail::floor_divide(exp, order_);
    std::int64_t r = exp - q * order_;
    e.ycentral += sigma(index) * q;
    if (r == 0) return;
    if (!e.delta.empty() && e.delta.back().index == index) {
      auto& top = e.delta.back();
      top.power += r;
      if (top.power >= order_) {
        top.power -= order_;
        e.ycentral += sigma(index);
      }
      if (top.power == 0) e.delta.pop_back();
    } else {
      e.delta.push_back({index, r});
    }
  }

  std::int64_t b2_;
  std::int64_t order_;
};

inline std::string to_string(const G1Element& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.delta.size(); ++i) {
    if (i) out += ' ';
    out += e.delta[i].is_a ? std::string("A") : "B^" + std::to_string(e.delta[i].power);
  }
  return out + "] h^" + std::to_string(e.central);
}

inline std::string to_string(const G2Element& e) {
  std::string out = "x^" + std::to_string(e.xpow) + " [";
  for (std::size_t i = 0; i < e.delta.size(); ++i) {
    if (i) out += ' ';
    out += "z" + std::to_string(e.delta[i].index) + "^" + std::to_string(e.delta[i].power);
  }
  return out + "] y^" + std::to_string(e.ycentral);
}

}  // namespace knotlo
