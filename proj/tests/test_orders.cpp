#include <gtest/gtest.h>

#include <random>

#include "knotlo/orders.hpp"
#include "oracle_fixtures.hpp"

using namespace knotlo;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

char code(Sign s) { return s == Sign::Positive ? '+' : (s == Sign::Negative ? '-' : '0'); }

}  // namespace

TEST(Z2Order, Rules) {
  EXPECT_EQ(z2_is_positive(Z2Variant::PlusFirst, {-3, 1}), Sign::Positive);
  EXPECT_EQ(z2_is_positive(Z2Variant::PlusFirst, {2, 0}), Sign::Positive);
  EXPECT_EQ(z2_is_positive(Z2Variant::MinusFirst, {2, 0}), Sign::Negative);
  EXPECT_EQ(z2_is_positive(Z2Variant::MinusFirst, {5, -1}), Sign::Negative);
  EXPECT_EQ(z2_is_positive(Z2Variant::PlusFirst, {0, 0}), Sign::Identity);
  EXPECT_EQ(z2_is_positive(Z2Variant::MinusFirst, {0, 0}), Sign::Identity);
}

TEST(Magnus, AgainstOracle) {
  for (const auto& row : oracle::kMagnus) {
    std::vector<std::pair<char, std::int64_t>> w;
    const Word parsed = W(row.word);
    for (const auto& s : parsed.syllables()) {
      const bool upper = std::isupper(static_cast<unsigned char>(s.gen));
      w.push_back({static_cast<char>(std::tolower(s.gen)), upper ? -s.exp : s.exp});
    }
    MagnusResult m = magnus_sign(w);
    EXPECT_EQ(m.sign, row.sign) << row.word;
    EXPECT_EQ(m.degree, row.degree) << row.word;
  }
  EXPECT_EQ(magnus_sign(std::vector<std::pair<int, std::int64_t>>{{1, 2}, {1, -2}}).sign, 0);
}

TEST(Magnus, BiInvariantOnSamples) {
  // Magnus order is a bi-order: sign(u w u^-1) = sign(w).
  std::mt19937_64 rng(11);
  auto rnd = [&] {
    std::vector<std::pair<int, std::int64_t>> w;
    for (int i = 0; i < 5; ++i) w.push_back({static_cast<int>(draw_below(rng, 3)), static_cast<std::int64_t>(draw_below(rng, 5)) - 2});
    return w;
  };
  for (int i = 0; i < 300; ++i) {
    auto w = rnd(), u = rnd();
    auto ui = u;
    std::reverse(ui.begin(), ui.end());
    for (auto& s : ui) s.second = -s.second;
    auto conj = u;
    conj.insert(conj.end(), w.begin(), w.end());
    conj.insert(conj.end(), ui.begin(), ui.end());
    EXPECT_EQ(magnus_sign(conj).sign, magnus_sign(w).sign);
  }
}

TEST(G1Order, BallSignsAgainstFloatOracle) {
  const auto words = ball("ab", 4);
  for (const auto& row : oracle::kG1BallSigns) {
    G1Order o(knot_params(row.c1, row.c2));
    ASSERT_EQ(row.signs.size(), words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
      EXPECT_EQ(code(o.sign(words[i])), row.signs[i]) << row.c1 << "," << row.c2 << " " << words[i].to_string();
  }
}

TEST(G1Order, Examples) {
  for (auto [c1, c2] : std::vector<std::pair<int, int>>{{3, 4}, {5, 4}, {7, -6}}) {
    auto k = knot_params(c1, c2);
    G1Order o(k);
    EXPECT_EQ(o.sign(W("a^2")), Sign::Positive);
    auto t = o.decide(W("a^2"));
    EXPECT_EQ(t.layer, "test_point");
    EXPECT_EQ(t.detail, 0);
    Word mu = peripheral_word(k, Side::G1, {1, 0});
    Word h = W("a^2");
    EXPECT_EQ(o.sign(mu * h.inverse() * mu.inverse() * h.pow(2)), Sign::Positive);
    EXPECT_EQ(o.sign(mu), -o.sign(mu.inverse()));
    EXPECT_EQ(o.sign(mu), Sign::Positive);
    EXPECT_EQ(o.sign(W("a^2 b^-" + std::to_string(k.n()))), Sign::Identity);
  }
}

TEST(G2Order, AgainstOracle) {
  for (const auto& row : oracle::kG2Signs) {
    G2Order o(knot_params(row.c1, row.c2));
    SignTrace t = o.decide(W(row.word));
    EXPECT_EQ(static_cast<int>(t.sign), row.sign) << row.c1 << "," << row.c2 << " " << row.word;
    EXPECT_EQ(t.layer, row.layer) << row.word;
  }
}

TEST(G2Order, LayersAndReversal) {
  auto k = knot_params(3, -4);
  G2Order o(k), r(k, KernelOrder::Reversed);
  EXPECT_EQ(o.decide(W("z x^2")).layer, "pi");
  EXPECT_EQ(o.sign(W("y")), Sign::Negative);  // t(y) = b2 = -2
  EXPECT_EQ(r.sign(W("y")), Sign::Positive);
  EXPECT_EQ(r.sign(W("z x^2")), Sign::Positive);
  auto c = W("z x^-1 z x z^-1 x^-1 z^-1 x");
  EXPECT_EQ(o.decide(c).layer, "magnus");
  EXPECT_EQ(r.sign(c), -o.sign(c));
}

TEST(Family, Operators) {
  auto k = knot_params(5, 4);
  auto g1 = std::make_shared<const G1Order>(k);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, "ab", 7), g = random_word(rng, "ab", 3);
    EXPECT_EQ(family_is_positive(*g1, {Word(), false}, w), g1->sign(w));
    EXPECT_EQ(family_is_positive(*g1, {g, true}, w), family_is_positive(*g1, {g, false}, w.inverse()));
    // <^g then <^(g^-1) is the base order.
    FamilyMember inner(g1, {g, false});
    EXPECT_EQ(family_is_positive(inner, {g.inverse(), false}, w), g1->sign(w));
    // a <^g b iff a g < b g: w positive for <^g iff g^-1 w g positive.
    EXPECT_EQ(inner.sign(w), g1->sign(g.inverse() * w * g));
  }
}

TEST(Cones, TrichotomyAndSemigroup) {
  for (auto [c1, c2] : std::vector<std::pair<int, int>>{{3, 4}, {3, -4}, {5, 4}, {7, -6}}) {
    auto k = knot_params(c1, c2);
    G1Order o1(k);
    G2Order o2(k);
    for (const ConeOracle* o : {static_cast<const ConeOracle*>(&o1), static_cast<const ConeOracle*>(&o2)}) {
      const std::string gens = o == &o1 ? "ab" : "xz";
      for (const Word& w : ball(gens, 4)) {
        Sign s = o->sign(w);
        EXPECT_EQ(o->sign(w.inverse()), -s);
        EXPECT_EQ(s == Sign::Identity, o->is_identity(w));
      }
      std::mt19937_64 rng(static_cast<std::uint64_t>(c1 * 7 + c2));
      int checked = 0;
      while (checked < 1000) {
        Word u = random_word(rng, gens, 8), v = random_word(rng, gens, 8);
        if (o->sign(u) != Sign::Positive || o->sign(v) != Sign::Positive) continue;
        EXPECT_EQ(o->sign(u * v), Sign::Positive) << u.to_string() << " * " << v.to_string();
        ++checked;
      }
    }
  }
}
