#pragma once

// Fixture suite and harness mutation tests shared by the CLI `selftest`
// command, the unit tests and the acceptance runner.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "alexander.hpp"
#include "certify.hpp"
#include "hecke.hpp"
#include "number_field.hpp"
#include "orders.hpp"

namespace knotlo {

/// Flips the sign of exactly one word (its inverse keeps the true sign).
class SignFlipOracle : public ConeOracle {
 public:
  SignFlipOracle(std::shared_ptr<const ConeOracle> base, Word target)
      : base_(std::move(base)), target_(std::move(target)) {}
  std::string group() const override { return base_->group(); }
  bool is_identity(const Word& w) const override { return base_->is_identity(w); }
  SignTrace decide(const Word& w) const override {
    SignTrace t = base_->decide(w);
    if (w == target_) t.sign = -t.sign;
    return t;
  }

 private:
  std::shared_ptr<const ConeOracle> base_;
  Word target_;
};

/// Reports Identity for one nontrivial word.
class FalseIdentityOracle : public ConeOracle {
 public:
  FalseIdentityOracle(std::shared_ptr<const ConeOracle> base, Word target)
      : base_(std::move(base)), target_(std::move(target)) {}
  std::string group() const override { return base_->group(); }
  bool is_identity(const Word& w) const override { return base_->is_identity(w); }
  SignTrace decide(const Word& w) const override {
    if (w == target_) return {};
    return base_->decide(w);
  }

 private:
  std::shared_ptr<const ConeOracle> base_;
  Word target_;
};

/// Reverses the sign whenever the first (pi) layer of a G2 order decides.
class PiLayerReversedOracle : public ConeOracle {
 public:
  explicit PiLayerReversedOracle(std::shared_ptr<const ConeOracle> base) : base_(std::move(base)) {}
  std::string group() const override { return base_->group(); }
  bool is_identity(const Word& w) const override { return base_->is_identity(w); }
  SignTrace decide(const Word& w) const override {
    SignTrace t = base_->decide(w);
    if (t.layer == "pi") t.sign = -t.sign;
    return t;
  }

 private:
  std::shared_ptr<const ConeOracle> base_;
};

/// Picks a candidate restricting to the wrong Z^2 order.
inline std::size_t corrupted_selection(Sign mu_sign, const std::vector<Z2Variant>& variants) {
  return proof_selection(-mu_sign, variants);
}

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline SampleBudget mutation_budget() {
  SampleBudget b;
  b.radius = 3;
  b.conj_len = 2;
  b.peripheral_box = 3;
  b.samples = 500;
  b.random_conjugators = 8;
  return b;
}

/// The five injected corruptions; each passes iff the harness reports Refuted.
inline std::vector<SelftestResult> mutation_selftests(const TwoBridgeParams& k,
                                                      const SampleBudget& b = mutation_budget()) {
  auto g1 = std::make_shared<const G1Order>(k);
  auto g2 = std::make_shared<const G2Order>(k, KernelOrder::Standard);
  auto g2r = std::make_shared<const G2Order>(k, KernelOrder::Reversed);
  std::vector<SelftestResult> out;

  auto refuted_with = [](const CertificateReport& r, const std::string& word) {
    if (r.verdict != Verdict::Refuted) return false;
    if (word.empty()) return true;
    for (const auto& c : r.counterexamples)
      if (c.word == word) return true;
    return false;
  };
  auto record = [&](const std::string& name, const CertificateReport& r, const std::string& word) {
    const bool ok = refuted_with(r, word);
    out.push_back({name, ok,
                   std::string(to_string(r.verdict)) + ", " + std::to_string(r.violations()) + " violation(s)" +
                       (word.empty() ? "" : ", target " + word + (ok ? " listed" : " missing"))});
  };

  const Word flip = Word::parse("a b^-1");
  record("g1_single_sign_flip", audit_cone(SignFlipOracle(g1, flip), "ab", b, "G1"), flip.to_string());

  const Word fake = Word::parse("x z^-1");
  record("g2_false_identity", audit_cone(FalseIdentityOracle(g2, fake), "xz", b, "G2"), fake.to_string());

  record("g1_fully_reversed", check_navas_law(FamilyMember(g1, {Word(), true}), k, b), "");

  const PiLayerReversedOracle bad_pi(g2);
  const PiLayerReversedOracle bad_pi_r(g2r);
  record("g2_pi_layer_reversed", check_restriction_law({bad_pi, bad_pi_r}, k, b), "");

  record("corrupted_selection", certify_compatibility(*g1, {*g2, *g2r}, k, b, corrupted_selection), "");
  return out;
}

/// Fixtures: Alexander polynomials outside the family, exact realization
/// identities, a corrupted field, and the mutation tests on (3, 4).
inline std::vector<SelftestResult> run_selftest() {
  std::vector<SelftestResult> out;
  auto guard = [&](const std::string& name, const std::function<std::string()>& body) {
    try {
      out.push_back({name, true, body()});
    } catch (const Error& e) {
      out.push_back({name, false, std::string(to_string(e.code())) + ": " + e.what()});
    }
  };
  guard("alexander_b(3,1)", [] {
    LaurentPoly d = alexander_poly_two_bridge(3, 1);
    check_internal(d == LaurentPoly({{1, 1}, {0, -1}, {-1, 1}}), "b(3,1) is not t - 1 + t^-1");
    return d.to_string();
  });
  guard("alexander_b(5,3)", [] {
    LaurentPoly d = alexander_poly_two_bridge(5, 3);
    check_internal(std::llabs(d.eval(-1)) == 5, "|Delta(-1)| != 5 for b(5,3)");
    return d.to_string();
  });
  for (std::int64_t b1 = 1; b1 <= 5; ++b1)
    guard("realization_b1=" + std::to_string(b1), [b1] {
      G1Realization r(knot_params(2 * b1 + 1, 4));
      return "a~^2 = b~^n = T_" + std::to_string(r.h_shift()) + ", mu parabolic";
    });
  guard("corrupted_minimal_polynomial", [] {
    // x^2 - x - 1 (2cos(pi/5)) with its constant term changed.
    try {
      G1Realization r(2, std::make_shared<const NumberField>(IntPoly{-2, -1, 1}, 1.618034));
    } catch (const Error& e) {
      check_internal(e.code() == ErrorCode::ConstructionFailed, "wrong error kind");
      return std::string("ConstructionFailed: ") + e.what();
    }
    fail(ErrorCode::InternalCheckFailed, "corrupted field was accepted");
  });
  guard("wrong_field", [] {
    try {
      G1Realization r(2, NumberField::cos_pi_over(7));
    } catch (const Error& e) {
      check_internal(e.code() == ErrorCode::ConstructionFailed, "wrong error kind");
      return std::string("ConstructionFailed: ") + e.what();
    }
    fail(ErrorCode::InternalCheckFailed, "field of the wrong degree was accepted");
  });
  try {
    for (auto& r : mutation_selftests(knot_params(3, 4))) {
      r.name = "mutation_" + r.name;
      out.push_back(std::move(r));
    }
  } catch (const Error& e) {
    out.push_back({"mutation", false, e.what()});
  }
  return out;
}

}  // namespace knotlo
