#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "knotlo/hecke.hpp"
#include "knotlo/number_field.hpp"

using namespace knotlo;

namespace {

std::vector<long> coeffs(const IntPoly& p) {
  std::vector<long> out;
  for (const auto& c : p) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST(NumberField, MinimalPolynomials) {
  EXPECT_EQ(coeffs(poly::cos_pi_minimal_polynomial(3)), (std::vector<long>{-1, 1}));
  EXPECT_EQ(coeffs(poly::cos_pi_minimal_polynomial(5)), (std::vector<long>{-1, -1, 1}));
  EXPECT_EQ(coeffs(poly::cos_pi_minimal_polynomial(7)), (std::vector<long>{1, -2, -1, 1}));
  EXPECT_EQ(coeffs(poly::cos_pi_minimal_polynomial(9)), (std::vector<long>{-1, -3, 0, 1}));
  EXPECT_EQ(coeffs(poly::cos_pi_minimal_polynomial(11)), (std::vector<long>{-1, 3, 3, -4, -1, 1}));
}

TEST(NumberField, SignsAgreeWithFloatingPoint) {
  for (int n : {5, 7, 9, 11}) {
    auto F = NumberField::cos_pi_over(n);
    const double lam = 2 * std::cos(std::numbers::pi / n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (int i = 0; i < 2000; ++i) {
      FieldElem x = F->zero();
      double v = 0, pw = 1;
      for (int j = 0; j < F->degree(); ++j) {
        long c = static_cast<long>(draw_below(rng, 41)) - 20;
        x[static_cast<std::size_t>(j)] = c;
        v += static_cast<double>(c) * pw;
        pw *= lam;
      }
      if (std::abs(v) < 1e-9) continue;
      EXPECT_EQ(F->sign(x), v > 0 ? 1 : -1);
    }
  }
}

TEST(NumberField, ExactZeroAndTinyValues) {
  auto F = NumberField::cos_pi_over(5);  // lambda^2 = lambda + 1
  FieldElem L = F->generator();
  FieldElem z = F->sub(F->mul(L, L), F->add(L, F->from_int(1)));
  EXPECT_TRUE(NumberField::is_zero(z));
  EXPECT_EQ(F->sign(z), 0);
  // F_{k+1} - F_k lambda = (-1/lambda)^k: tiny, sign (-1)^k.
  mpz_class a = 1, b = 1;
  for (int k = 1; k < 400; ++k) {
    FieldElem x = F->zero();
    x[0] = b;
    x[1] = -a;
    EXPECT_EQ(F->sign(x), k % 2 == 0 ? 1 : -1) << k;
    mpz_class c = a + b;
    a = b;
    b = c;
  }
}

TEST(NumberField, CorruptedPolynomialFails) {
  try {
    NumberField F(IntPoly{-2, -1, 1}, 1.618034);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstructionFailed);
  }
  EXPECT_THROW(NumberField(IntPoly{-1, -1, 2}, 1.0), Error);
}

TEST(Lifted, ComposeInverseTranslation) {
  auto F = NumberField::cos_pi_over(7);
  LiftedGeometry g(F);
  const FieldElem z = F->zero(), one = F->from_int(1), m1 = F->from_int(-1);
  LiftedMap U = g.lift({z, m1, one, F->generator()}, 0);
  LiftedMap Ui = g.inverse(U);
  EXPECT_TRUE(g.equal(g.compose(U, Ui), g.translation(0)));
  EXPECT_TRUE(g.equal(g.compose(Ui, U), g.translation(0)));
  EXPECT_TRUE(g.equal(g.power(U, 7), g.translation(1)));
  EXPECT_TRUE(g.equal(g.power(U, -7), g.translation(-1)));
  LiftedPoint p{g.point(1, 1), 3};
  EXPECT_EQ(g.compare(g.apply(g.translation(2), p), LiftedPoint{p.point, 5}), 0);
  // U moves every point forward by less than half a turn.
  for (auto [u, v] : {std::pair{1L, 0L}, {0L, 1L}, {1L, 1L}, {-1L, 1L}, {3L, -2L}}) {
    LiftedPoint q{g.point(u, v), 0};
    LiftedPoint img = g.apply(U, q);
    EXPECT_GT(g.compare(img, q), 0);
    EXPECT_LT(g.compare(img, LiftedPoint{q.point, 1}), 0);
  }
}

TEST(Hecke, ExactIdentities) {
  for (std::int64_t b1 = 1; b1 <= 5; ++b1) {
    G1Realization r(knot_params(2 * b1 + 1, 4));
    const auto& g = r.geometry();
    const std::int64_t n = 2 * b1 + 1;
    EXPECT_TRUE(g.equal(g.compose(r.a(), r.a()), g.translation(n - 2)));
    EXPECT_TRUE(g.equal(g.power(r.b_power(1), n), g.translation(n - 2)));
    const FieldElem tr = g.trace(r.mu().matrix);
    EXPECT_EQ(std::llabs(tr[0].get_si()), 2);
    for (std::size_t i = 1; i < tr.size(); ++i) EXPECT_EQ(tr[i], 0);
    EXPECT_EQ(g.compare(g.apply(r.mu(), r.test_points()[0]), r.test_points()[0]), 0);
    EXPECT_EQ(r.test_points().size(), 4u);
  }
}

TEST(Hecke, BOneMatrices) {
  G1Realization r(knot_params(3, 4));
  const auto& m = r.a().matrix;
  EXPECT_EQ(m.a[0], 0);
  EXPECT_EQ(m.b[0], -1);
  EXPECT_EQ(m.c[0], 1);
  EXPECT_EQ(m.d[0], 0);
  const auto& u = r.b_power(1).matrix;
  EXPECT_EQ(u.a[0], 0);
  EXPECT_EQ(u.b[0], -1);
  EXPECT_EQ(u.c[0], 1);
  EXPECT_EQ(u.d[0], 1);
  EXPECT_TRUE(r.geometry().equal(r.geometry().compose(r.a(), r.a()), r.geometry().translation(1)));
}

TEST(Hecke, ActionIsAHomomorphism) {
  G1Realization r(knot_params(5, 4));
  const auto& G = r.group();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, "ab", 6), v = random_word(rng, "ab", 6);
    auto lhs = r.map_of(G.normal_form(u * v));
    auto rhs = r.geometry().compose(r.map_of(G.normal_form(u)), r.map_of(G.normal_form(v)));
    EXPECT_TRUE(r.geometry().equal(lhs, rhs)) << u.to_string() << " | " << v.to_string();
  }
}

TEST(Hecke, WrongFieldFails) {
  try {
    G1Realization r(2, NumberField::cos_pi_over(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstructionFailed);
  }
}
