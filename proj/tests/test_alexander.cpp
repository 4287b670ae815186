#include <gtest/gtest.h>

#include <random>

#include "knotlo/alexander.hpp"
#include "oracle_fixtures.hpp"

using namespace knotlo;

namespace {

LaurentPoly from_pairs(const std::vector<std::pair<std::int64_t, std::int64_t>>& v) {
  LaurentPoly p;
  for (auto [e, c] : v) p.add_term(e, c);
  return p;
}

}  // namespace

TEST(Laurent, ArithmeticAndPrinting) {
  LaurentPoly p{{1, 1}, {0, -1}, {-1, 1}};
  EXPECT_EQ(p.to_string(), "t - 1 + t^-1");
  EXPECT_EQ((p - p).is_zero(), true);
  EXPECT_EQ((p * LaurentPoly::monomial(1, 1)).min_exp(), 0);
  EXPECT_TRUE(p.is_symmetric());
  EXPECT_EQ(p.eval(1), 1);
  EXPECT_EQ(p.eval(-1), -3);
  EXPECT_EQ(LaurentPoly({{3, -2}, {1, 1}}).symmetric_normalized(), LaurentPoly({{1, 2}, {-1, -1}}));
  EXPECT_THROW(LaurentPoly({{1, 1}, {0, 1}}).symmetric_normalized(), Error);
}

TEST(Alexander, Fixtures) {
  EXPECT_EQ(alexander_poly_two_bridge(3, 1), from_pairs(oracle::kB31));
  EXPECT_EQ(alexander_poly_two_bridge(3, 1).to_string(), "t - 1 + t^-1");
  auto d53 = alexander_poly_two_bridge(5, 3);
  EXPECT_EQ(d53, from_pairs(oracle::kB53));
  EXPECT_EQ(std::llabs(d53.eval(-1)), 5);
}

TEST(Alexander, ThreeFour) {
  EXPECT_EQ(alexander_poly(knot_params(3, 4)).to_string(), "t^2 - 3t + 3 - 3t^-1 + t^-2");
}

TEST(Alexander, GridAgainstOracle) {
  ASSERT_EQ(oracle::kAlexander.size(), 50u);
  for (const auto& row : oracle::kAlexander) {
    auto k = knot_params(row.c1, row.c2);
    ASSERT_EQ(k.p, row.p);
    ASSERT_EQ(k.q, row.q);
    LaurentPoly d = alexander_poly(k);
    EXPECT_EQ(d, from_pairs(row.coeffs)) << row.c1 << "," << row.c2;
    EXPECT_EQ(std::llabs(d.eval(1)), 1);
    EXPECT_TRUE(d.is_symmetric());
    EXPECT_EQ(std::llabs(d.eval(-1)), std::llabs(row.c1 * row.c2 - 1));
    EXPECT_EQ(d.span(), 2 * std::llabs(k.b2));
    EXPECT_EQ(d.top_coeff() == 1, is_fibered(k)) << "monic iff fibered";
  }
}

TEST(LSpaceForm, Examples) {
  auto r = lspace_form(LaurentPoly{{1, 1}, {0, -1}, {-1, 1}});
  EXPECT_TRUE(r.matches);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.exponents, (std::vector<std::int64_t>{1}));
  auto c = lspace_form(LaurentPoly::constant(1));
  EXPECT_TRUE(c.matches);
  EXPECT_EQ(c.k, 0);
  EXPECT_FALSE(lspace_form(alexander_poly(knot_params(3, 4))).matches);
}

TEST(LSpaceForm, RejectsUnnormalized) {
  try {
    lspace_form(LaurentPoly{{2, 1}, {0, -1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
  EXPECT_THROW(lspace_form(LaurentPoly{{1, -1}, {0, 1}, {-1, -1}}), Error);
}

TEST(LSpaceForm, RandomFormPolynomials) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> ns;
    std::int64_t n = 0;
    const auto k = static_cast<std::int64_t>(draw_below(rng, 6));
    for (std::int64_t j = 0; j < k; ++j) ns.push_back(n += 1 + static_cast<std::int64_t>(draw_below(rng, 4)));
    LaurentPoly p = lspace_form_poly(ns);
    ASSERT_TRUE(p.is_normalized());
    auto r = lspace_form(p);
    ASSERT_TRUE(r.matches);
    EXPECT_EQ(r.k, k);
    EXPECT_EQ(r.exponents, ns);
    const std::int64_t det = std::llabs(p.eval(-1));
    EXPECT_LE(det, 2 * k + 1);
    if (k > 0) {
      EXPECT_LE(2 * k + 1, 2 * ns.back() + 1);
    }
  }
}

TEST(Verdict, Branches) {
  auto v = lspace_surgery_verdict(knot_params(5, 4));
  EXPECT_FALSE(v.admits);
  EXPECT_EQ(v.reason, LSpaceReason::NotFibered);

  auto f = lspace_surgery_verdict(knot_params(3, 4));
  EXPECT_FALSE(f.admits);
  EXPECT_EQ(f.reason, LSpaceReason::DeterminantExceedsGenusBound);
  EXPECT_EQ(f.determinant, 11);
  EXPECT_EQ(f.genus_bound, 5);

  auto g = lspace_surgery_verdict(knot_params(3, 6));
  EXPECT_EQ(g.reason, LSpaceReason::DeterminantExceedsGenusBound);
  EXPECT_EQ(g.determinant, 17);
  EXPECT_EQ(g.genus_bound, 7);
}
