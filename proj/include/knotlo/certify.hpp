#pragma once

// Property-test harness: normal-form soundness, cone axioms, the peripheral
// law of the G1 family, the restriction law of the G2 family, and the
// compatibility of the gluing with the two families.
//
// Every check is deterministic in (params, budget); random draws use
// std::mt19937_64 seeded from budget.seed and the portable draw_below.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cfrac.hpp"
#include "error.hpp"
#include "groups.hpp"
#include "orders.hpp"
#include "word.hpp"

namespace knotlo {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct SampleBudget {
  int radius = 5;              // ball radius for trichotomy
  int conj_len = 4;            // exhaustive conjugator length
  int peripheral_box = 5;      // |r|, |s| <= box
  int samples = 10000;         // random pairs / insertions per group
  int random_conjugators = 64; // extra seeded conjugators of length conj_len+1 .. 2 conj_len
  std::uint64_t seed = kDefaultSeed;

  void validate() const {
    if (radius < 1 || conj_len < 1 || peripheral_box < 1 || samples < 1 || random_conjugators < 0)
      fail(ErrorCode::InvalidArgument, "sample budget bounds must be >= 1");
  }
};

enum class Verdict { Certified, Refuted, Error };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Error: return "Error";
  }
  return "?";
}

struct CheckCount {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
};

struct Counterexample {
  std::string check;
  std::string word;
  std::string member;  // family member, if any
  std::string expected;
  std::string got;
};

struct CertificateReport {
  static constexpr std::size_t kMaxCounterexamples = 32;

  std::vector<CheckCount> checks;
  std::vector<Counterexample> counterexamples;  // first kMaxCounterexamples only
  std::map<std::string, std::int64_t> stats;
  std::string error;
  Verdict verdict = Verdict::Certified;

  CheckCount& check(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back({name, 0, 0});
    return checks.back();
  }

  void pass(const std::string& name) { ++check(name).passed; }

  void violation(Counterexample c) {
    ++check(c.check).failed;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(c));
    if (verdict == Verdict::Certified) verdict = Verdict::Refuted;
  }

  std::int64_t violations() const {
    std::int64_t n = 0;
    for (const auto& c : checks) n += c.failed;
    return n;
  }

  void merge(const CertificateReport& other) {
    for (const auto& c : other.checks) {
      auto& mine = check(c.name);
      mine.passed += c.passed;
      mine.failed += c.failed;
    }
    for (const auto& c : other.counterexamples)
      if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(c);
    for (const auto& [k, v] : other.stats) stats[k] += v;
    if (other.verdict == Verdict::Error) {
      verdict = Verdict::Error;
      if (error.empty()) error = other.error;
    } else if (other.verdict == Verdict::Refuted && verdict == Verdict::Certified) {
      verdict = Verdict::Refuted;
    }
  }
};

namespace detail {

/// Runs body(report); an Error from an oracle becomes an Error verdict.
template <class F>
CertificateReport guarded(F&& body) {
  CertificateReport rep;
  try {
    body(rep);
  } catch (const Error& e) {
    rep.verdict = Verdict::Error;
    rep.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return rep;
}

inline std::string sign_name(Sign s) { return to_string(s); }

}  // namespace detail

/// Exhaustive ball of radius conj_len, then random_conjugators words of length
/// conj_len + 1 .. 2 conj_len (seeded; `salt` separates independent streams).
inline std::vector<Word> conjugator_sample(std::string_view gens, const SampleBudget& b, std::uint64_t salt) {
  std::vector<Word> out = ball(gens, b.conj_len);
  std::mt19937_64 rng(b.seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
  for (int i = 0; i < b.random_conjugators; ++i) {
    int len = b.conj_len + 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(b.conj_len)));
    out.push_back(random_word(rng, gens, len));
  }
  return out;
}

// ---------------------------------------------------------------- normal forms

/// Relator insertion (nf(u v) = nf(u g r g^-1 v)), homomorphy, and peripheral
/// faithfulness for both normal forms.
inline CertificateReport check_normal_forms(const TwoBridgeParams& k, const SampleBudget& b) {
  b.validate();
  return detail::guarded([&](CertificateReport& rep) {
    const Presentations pres = presentations(k);
    const G1Group g1(k);
    const G2Group g2(k);
    std::mt19937_64 rng(b.seed);

    auto run = [&](const std::string& tag, const std::string& gens, const std::vector<Word>& relators,
                   auto&& equal) {
      for (int i = 0; i < b.samples; ++i) {
        Word w = random_word(rng, gens, static_cast<int>(draw_below(rng, 13)));
        Word g = random_word(rng, gens, static_cast<int>(draw_below(rng, 5)));
        Word r = relators[draw_below(rng, relators.size())];
        if (draw_below(rng, 2)) r = r.inverse();
        const auto split = static_cast<std::size_t>(draw_below(rng, w.syllables().size() + 1));
        Word u, v;
        for (std::size_t j = 0; j < w.syllables().size(); ++j) {
          const auto& s = w.syllables()[j];
          (j < split ? u : v).push(s.gen, s.exp);
        }
        Word inserted = u * g * r * g.inverse() * v;
        if (equal(w, inserted))
          rep.pass(tag + ".insertion");
        else
          rep.violation({tag + ".insertion", inserted.to_string(), "", w.to_string(), "different normal form"});
      }
    };
    run("G1", "ab", pres.g1.relators, [&](const Word& x, const Word& y) { return g1.equal(x, y); });
    run("G2", "xyz", pres.g2.relators, [&](const Word& x, const Word& y) { return g2.equal(x, y); });

    for (int i = 0; i < b.samples / 10; ++i) {
      Word u = random_word(rng, "ab", static_cast<int>(draw_below(rng, 13)));
      Word v = random_word(rng, "ab", static_cast<int>(draw_below(rng, 13)));
      if (g1.normal_form(u * v) == g1.multiply(g1.normal_form(u), g1.normal_form(v)))
        rep.pass("G1.homomorphy");
      else
        rep.violation({"G1.homomorphy", (u * v).to_string(), "", "", ""});
      Word x = random_word(rng, "xyz", static_cast<int>(draw_below(rng, 13)));
      Word y = random_word(rng, "xyz", static_cast<int>(draw_below(rng, 13)));
      if (g2.normal_form(x * y) == g2.multiply(g2.normal_form(x), g2.normal_form(y)))
        rep.pass("G2.homomorphy");
      else
        rep.violation({"G2.homomorphy", (x * y).to_string(), "", "", ""});
    }

    const int box = b.peripheral_box;
    for (std::int64_t r = -box; r <= box; ++r)
      for (std::int64_t s = -box; s <= box; ++s) {
        const bool zero = r == 0 && s == 0;
        Word w1 = peripheral_word(k, Side::G1, {r, s});
        Word w2 = peripheral_word(k, Side::G2, {r, s});
        const bool ok1 = g1.normal_form(w1).is_identity() == zero;
        const bool ok2 = g2.normal_form(w2).is_identity() == zero;
        if (ok1) rep.pass("peripheral"); else rep.violation({"peripheral", w1.to_string(), "", "", ""});
        if (ok2) rep.pass("peripheral"); else rep.violation({"peripheral", w2.to_string(), "", "", ""});
      }

    const bool glue_mu = g2.equal(pres.gluing.mu_image, Word('y'));
    const bool glue_h = g2.equal(pres.gluing.h_image, Word('z') * Word('x', 2));
    if (glue_mu && glue_h) rep.pass("gluing"); else rep.violation({"gluing", "", "", "", ""});
  });
}

// ---------------------------------------------------------------- cones

/// Trichotomy on the ball over `gens`, identity agreement with normal forms,
/// and the semigroup property on budget.samples pairs of positive words.
inline CertificateReport audit_cone(const ConeOracle& oracle, std::string_view gens, const SampleBudget& b,
                                    const std::string& label = "") {
  b.validate();
  return detail::guarded([&](CertificateReport& rep) {
    const std::string tag = label.empty() ? oracle.group() : label;
    for (const Word& w : ball(gens, b.radius)) {
      const Sign s = oracle.sign(w);
      const Sign si = oracle.sign(w.inverse());
      const bool id = oracle.is_identity(w);
      if (si != -s)
        rep.violation({tag + ".trichotomy", w.to_string(), "", "inverse has opposite sign",
                       std::string(to_string(s)) + "/" + to_string(si)});
      else if ((s == Sign::Identity) != id)
        rep.violation({tag + ".identity", w.to_string(), "", id ? "Identity" : "non-identity", to_string(s)});
      else
        rep.pass(tag + ".trichotomy");
    }

    std::mt19937_64 rng(b.seed + 1);
    std::vector<Word> positive;
    const std::size_t pool = 1000;
    for (std::int64_t tries = 0; positive.size() < pool; ++tries) {
      check_internal(tries < 100 * static_cast<std::int64_t>(pool), "audit_cone: no positive words found");
      Word w = random_word(rng, gens, 1 + static_cast<int>(draw_below(rng, 12)));
      if (oracle.sign(w) == Sign::Positive) positive.push_back(std::move(w));
    }
    for (int i = 0; i < b.samples; ++i) {
      const Word& u = positive[draw_below(rng, positive.size())];
      const Word& v = positive[draw_below(rng, positive.size())];
      Word uv = u * v;
      const Sign s = oracle.sign(uv);
      if (s == Sign::Positive)
        rep.pass(tag + ".semigroup");
      else
        rep.violation({tag + ".semigroup", u.to_string() + " * " + v.to_string(), "", "Positive", to_string(s)});
    }
  });
}

/// Cone audits for both bases and a few conjugated / reversed family members.
inline CertificateReport check_cones(const TwoBridgeParams& k, const SampleBudget& b) {
  CertificateReport rep;
  auto g1 = std::make_shared<const G1Order>(k);
  auto g2 = std::make_shared<const G2Order>(k, KernelOrder::Standard);
  auto g2r = std::make_shared<const G2Order>(k, KernelOrder::Reversed);
  rep.merge(audit_cone(*g1, "ab", b, "G1"));
  rep.merge(audit_cone(*g2, "xz", b, "G2"));
  rep.merge(audit_cone(*g2r, "xz", b, "G2.kernel_reversed"));

  std::mt19937_64 rng(b.seed + 2);
  SampleBudget small = b;
  small.radius = std::min(b.radius, 4);
  small.samples = std::max(1, b.samples / 10);
  for (int i = 0; i < 2; ++i) {
    Word c1 = random_word(rng, "ab", b.conj_len);
    Word c2 = random_word(rng, "xz", b.conj_len);
    const bool rev = i == 1;
    rep.merge(audit_cone(FamilyMember(g1, {c1, rev}), "ab", small, "G1^(" + c1.to_string() + (rev ? ",rev)" : ")")));
    rep.merge(audit_cone(FamilyMember(g2, {c2, rev}), "xz", small, "G2^(" + c2.to_string() + (rev ? ",rev)" : ")")));
  }
  return rep;
}

// ---------------------------------------------------------------- G1 family

/// For every conjugator g and (r, s) != (0, 0) in the box, mu^r h^s under <^g is
/// Positive if s > 0, Negative if s < 0, and sign(r) * sign(g^-1 mu g) if s = 0.
inline CertificateReport check_navas_law(const ConeOracle& g1, const TwoBridgeParams& k, const SampleBudget& b) {
  b.validate();
  return detail::guarded([&](CertificateReport& rep) {
    const Word mu = peripheral_word(k, Side::G1, {1, 0});
    const int box = b.peripheral_box;
    for (const Word& g : conjugator_sample("ab", b, 1)) {
      const OrderFamilySpec spec{g, false};
      const Sign mu_sign = family_is_positive(g1, spec, mu);
      if (mu_sign == Sign::Identity) {
        rep.violation({"navas", mu.to_string(), spec.to_string(), "nontrivial", "Identity"});
        continue;
      }
      rep.stats[mu_sign == Sign::Positive ? "mu_positive" : "mu_negative"] += 1;
      for (std::int64_t r = -box; r <= box; ++r)
        for (std::int64_t s = -box; s <= box; ++s) {
          if (r == 0 && s == 0) continue;
          const Sign expect = s != 0 ? sign_of(s) : sign_of(r) * mu_sign;
          const Word w = peripheral_word(k, Side::G1, {r, s});
          const Sign got = family_is_positive(g1, spec, w);
          if (got == expect)
            rep.pass("navas");
          else
            rep.violation({"navas", w.to_string(), spec.to_string(), to_string(expect), to_string(got)});
        }
    }
  });
}

// ---------------------------------------------------------------- G2 family

/// The variant a member restricts to on the box, if it is one of the two.
inline std::optional<Z2Variant> restriction_variant(const ConeOracle& g2, const OrderFamilySpec& spec,
                                                    const TwoBridgeParams& k, int box,
                                                    Counterexample* witness = nullptr) {
  bool plus = true, minus = true;
  for (std::int64_t r = -box; r <= box; ++r)
    for (std::int64_t s = -box; s <= box; ++s) {
      const Word w = peripheral_word(k, Side::G2, {r, s});
      const Sign got = family_is_positive(g2, spec, w);
      plus = plus && got == z2_is_positive(Z2Variant::PlusFirst, {r, s});
      minus = minus && got == z2_is_positive(Z2Variant::MinusFirst, {r, s});
      if (!plus && !minus) {
        if (witness) *witness = {"restrict", w.to_string(), spec.to_string(), "PlusFirst or MinusFirst", to_string(got)};
        return std::nullopt;
      }
    }
  check_internal(plus != minus, "restriction matched both Z^2 orders");
  return plus ? Z2Variant::PlusFirst : Z2Variant::MinusFirst;
}

struct G2Family {
  const ConeOracle& standard;  // extension order built on the standard kernel order
  const ConeOracle& reversed;  // same with the reversed kernel order
};

/// Each member (conjugators x {standard, kernel-reversed}) restricts to exactly
/// one of PlusFirst / MinusFirst on A = <y, z x^2>; both occur.
inline CertificateReport check_restriction_law(const G2Family& fam, const TwoBridgeParams& k,
                                               const SampleBudget& b) {
  b.validate();
  return detail::guarded([&](CertificateReport& rep) {
    for (const ConeOracle* base : {&fam.standard, &fam.reversed}) {
      const std::string label = base == &fam.standard ? "" : " kernel-reversed";
      for (const Word& g : conjugator_sample("xz", b, 2)) {
        const OrderFamilySpec spec{g, false};
        Counterexample witness;
        auto v = restriction_variant(*base, spec, k, b.peripheral_box, &witness);
        rep.stats["members"] += 1;
        if (!v) {
          witness.member += label;
          rep.violation(std::move(witness));
          continue;
        }
        rep.pass("restrict");
        rep.stats[*v == Z2Variant::PlusFirst ? "plus_first" : "minus_first"] += 1;
      }
    }
    if (rep.stats["plus_first"] > 0 && rep.stats["minus_first"] > 0)
      rep.pass("both_variants");
    else
      rep.violation({"both_variants", "", "", "both witnessed",
                     rep.stats["plus_first"] > 0 ? "PlusFirst only" : "MinusFirst only"});
  });
}

// ---------------------------------------------------------------- compatibility

/// Picks a candidate index given the sign of mu under <^g and each candidate's
/// A-restriction.
using SelectionRule = std::function<std::size_t(Sign, const std::vector<Z2Variant>&)>;

/// The rule of the main proof: <_A if mu is positive, <'_A otherwise.
inline std::size_t proof_selection(Sign mu_sign, const std::vector<Z2Variant>& variants) {
  const Z2Variant want = mu_sign == Sign::Positive ? Z2Variant::PlusFirst : Z2Variant::MinusFirst;
  for (std::size_t i = 0; i < variants.size(); ++i)
    if (variants[i] == want) return i;
  fail(ErrorCode::InternalCheckFailed, "no candidate G2 member restricts to the required order");
}

/// For each sampled <^g on G1 select a G2 member (among the standard base, its
/// x-conjugate, and the kernel-reversed base) and check that every positive
/// mu^r h^s maps to a positive y^r (z x^2)^s.
inline CertificateReport certify_compatibility(const ConeOracle& g1, const G2Family& fam, const TwoBridgeParams& k,
                                               const SampleBudget& b,
                                               const SelectionRule& select = proof_selection) {
  b.validate();
  return detail::guarded([&](CertificateReport& rep) {
    struct Candidate {
      const ConeOracle* base;
      OrderFamilySpec spec;
      std::string name;
      Z2Variant variant;
    };
    std::vector<Candidate> cands{{&fam.standard, {Word(), false}, "base", {}},
                                 {&fam.standard, {Word('x'), false}, "base^x", {}},
                                 {&fam.reversed, {Word(), false}, "kernel-reversed base", {}}};
    std::vector<Z2Variant> variants;
    for (auto& c : cands) {
      // The variant is read off the sign of y; the restriction law check confirms the rest.
      const Sign y = family_is_positive(*c.base, c.spec, Word('y'));
      c.variant = y == Sign::Positive ? Z2Variant::PlusFirst : Z2Variant::MinusFirst;
      variants.push_back(c.variant);
    }

    const Word mu = peripheral_word(k, Side::G1, {1, 0});
    const int box = b.peripheral_box;
    for (const Word& g : conjugator_sample("ab", b, 3)) {
      const OrderFamilySpec spec1{g, false};
      const Sign mu_sign = family_is_positive(g1, spec1, mu);
      const std::size_t pick = select(mu_sign, variants);
      check_internal(pick < cands.size(), "selection rule returned no candidate");
      const Candidate& c = cands[pick];
      rep.stats["g1_members"] += 1;
      rep.stats["selected " + c.name] += 1;
      const std::string member = "G1 " + spec1.to_string() + " -> G2 " + c.name;
      for (std::int64_t r = -box; r <= box; ++r)
        for (std::int64_t s = -box; s <= box; ++s) {
          if (r == 0 && s == 0) continue;
          if (family_is_positive(g1, spec1, peripheral_word(k, Side::G1, {r, s})) != Sign::Positive) continue;
          const Word w2 = peripheral_word(k, Side::G2, {r, s});
          const Sign got = family_is_positive(*c.base, c.spec, w2);
          if (got == Sign::Positive)
            rep.pass("compat");
          else
            rep.violation({"compat", w2.to_string(), member, "Positive", to_string(got)});
        }
    }
  });
}

/// The enabled checks: "nf", "cone", "navas", "restrict", "compat" or "all".
inline CertificateReport certify(const TwoBridgeParams& k, const SampleBudget& b, const std::string& which) {
  static const std::vector<std::string> kAll{"nf", "cone", "navas", "restrict", "compat"};
  if (which != "all" && std::find(kAll.begin(), kAll.end(), which) == kAll.end())
    fail(ErrorCode::InvalidArgument, "unknown check '" + which + "'");
  b.validate();
  CertificateReport rep;
  const G1Order g1(k);
  const G2Order g2(k, KernelOrder::Standard), g2r(k, KernelOrder::Reversed);
  const G2Family fam{g2, g2r};
  auto on = [&](const char* name) { return which == "all" || which == name; };
  if (on("nf")) rep.merge(check_normal_forms(k, b));
  if (on("cone")) rep.merge(check_cones(k, b));
  if (on("navas")) rep.merge(check_navas_law(g1, k, b));
  if (on("restrict")) rep.merge(check_restriction_law(fam, k, b));
  if (on("compat")) rep.merge(certify_compatibility(g1, fam, k, b));
  return rep;
}

}  // namespace knotlo
