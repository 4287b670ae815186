#include <gtest/gtest.h>

#include "knotlo/certify.hpp"
#include "knotlo/selftest.hpp"

using namespace knotlo;

namespace {

SampleBudget small_budget() {
  SampleBudget b;
  b.radius = 4;
  b.conj_len = 3;
  b.peripheral_box = 4;
  b.samples = 2000;
  b.random_conjugators = 16;
  return b;
}

}  // namespace

TEST(Certify, AllChecksOnRepresentativeKnots) {
  for (auto [c1, c2] : std::vector<std::pair<int, int>>{{3, 4}, {5, 4}, {3, -4}}) {
    auto rep = certify(knot_params(c1, c2), small_budget(), "all");
    EXPECT_EQ(rep.verdict, Verdict::Certified) << c1 << "," << c2 << " " << rep.error;
    EXPECT_EQ(rep.violations(), 0);
    EXPECT_GT(rep.stats["plus_first"], 0);
    EXPECT_GT(rep.stats["minus_first"], 0);
  }
}

TEST(Certify, Reproducible) {
  auto k = knot_params(5, 4);
  auto a = certify(k, small_budget(), "cone");
  auto b = certify(k, small_budget(), "cone");
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
  }
}

TEST(Certify, SelectionFollowsSignOfB2) {
  auto plus = certify(knot_params(3, 4), small_budget(), "compat");
  EXPECT_EQ(plus.stats["selected base"], plus.stats["g1_members"]);
  auto minus = certify(knot_params(3, -4), small_budget(), "compat");
  EXPECT_EQ(minus.stats["selected base^x"], minus.stats["g1_members"]);
}

TEST(Certify, RestrictionOfBaseMembers) {
  auto k = knot_params(3, 4);
  G2Order std_order(k), rev(k, KernelOrder::Reversed);
  EXPECT_EQ(restriction_variant(std_order, {Word(), false}, k, 5), Z2Variant::PlusFirst);
  EXPECT_EQ(restriction_variant(rev, {Word(), false}, k, 5), Z2Variant::MinusFirst);
  EXPECT_EQ(restriction_variant(std_order, {Word('x'), false}, k, 5), Z2Variant::MinusFirst);
  // Switching the whole cone makes z x^2 negative: neither order on A.
  EXPECT_FALSE(restriction_variant(std_order, {Word(), true}, k, 5).has_value());
}

TEST(Certify, NavasIdentityConjugator) {
  auto k = knot_params(3, 4);
  G1Order g1(k);
  Word mu = peripheral_word(k, Side::G1, {1, 0});
  const Sign s = g1.sign(mu);
  for (std::int64_t r = -5; r <= 5; ++r)
    EXPECT_EQ(g1.sign(peripheral_word(k, Side::G1, {r, 0})), sign_of(r) * s);
  for (std::int64_t r = -5; r <= 5; ++r)
    for (std::int64_t t = -5; t < 0; ++t) EXPECT_EQ(g1.sign(peripheral_word(k, Side::G1, {r, t})), Sign::Negative);
}

TEST(Certify, BadBudgetRejected) {
  SampleBudget b;
  b.radius = 0;
  EXPECT_THROW(certify(knot_params(3, 4), b, "cone"), Error);
  EXPECT_THROW(certify(knot_params(3, 4), SampleBudget{}, "bogus"), Error);
}

TEST(Mutation, AllCorruptionsDetected) {
  for (auto [c1, c2] : std::vector<std::pair<int, int>>{{3, 4}, {7, -6}}) {
    auto results = mutation_selftests(knot_params(c1, c2));
    ASSERT_EQ(results.size(), 5u);
    for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  }
}

TEST(Mutation, SignFlipIsLocalized) {
  auto k = knot_params(3, 4);
  auto g1 = std::make_shared<const G1Order>(k);
  const Word target = Word::parse("a b^-1");
  auto rep = audit_cone(SignFlipOracle(g1, target), "ab", mutation_budget(), "G1");
  ASSERT_EQ(rep.verdict, Verdict::Refuted);
  EXPECT_EQ(rep.counterexamples.front().word, target.to_string());
}

TEST(Selftest, Passes) {
  for (const auto& r : run_selftest()) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}
