#pragma once

// Command-line front end.  Every command prints one JSON document on `out`;
// failures print {"error": {"code", "message"}} and return the exit code of
// the error kind (OutOfFamily 2, ParseError / InvalidArgument 3,
// ConstructionFailed / InternalCheckFailed 4).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alexander.hpp"
#include "certify.hpp"
#include "cfrac.hpp"
#include "groups.hpp"
#include "json_io.hpp"
#include "orders.hpp"
#include "selftest.hpp"

namespace knotlo::cli {

/// Default seed, overridable with the KNOTLO_SEED environment variable.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("KNOTLO_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') fail(ErrorCode::ParseError, "KNOTLO_SEED must be an unsigned integer");
    return v;
  }
  return kDefaultSeed;
}

namespace detail {

struct KnotArgs {
  std::optional<std::int64_t> c1, c2;
  std::string knot;  // "c1,c2"

  void add(CLI::App* cmd) {
    cmd->add_option("--c1", c1, "odd integer, |c1| > 2");
    cmd->add_option("--c2", c2, "even integer, |c2| > 2");
    cmd->add_option("--knot", knot, "shorthand \"c1,c2\"");
  }

  TwoBridgeParams params() const {
    std::int64_t a = 0, b = 0;
    if (!knot.empty()) {
      auto comma = knot.find(',');
      if (comma == std::string::npos) fail(ErrorCode::ParseError, "--knot expects \"c1,c2\"");
      try {
        std::size_t used = 0;
        a = std::stoll(knot.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("c1");
        std::string rest = knot.substr(comma + 1);
        b = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("c2");
      } catch (const std::logic_error&) {
        fail(ErrorCode::ParseError, "--knot expects two integers \"c1,c2\"");
      }
      if (c1 || c2) fail(ErrorCode::InvalidArgument, "give either --knot or --c1/--c2");
    } else {
      if (!c1 || !c2) fail(ErrorCode::InvalidArgument, "--c1 and --c2 are required");
      a = *c1;
      b = *c2;
    }
    return knot_params(a, b);
  }
};

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err = std::cerr) {
  // "order sign ..." is accepted as a spelling of "order-sign ...".
  if (args.size() >= 2 && args[0] == "order" && args[1] == "sign") {
    args.erase(args.begin());
    args[0] = "order-sign";
  }

  CLI::App app{"knotlo: invariants and left-order certificates for the surgeries K[c1,c2](2 c2)", "knotlo"};
  app.require_subcommand(1);

  detail::KnotArgs info_knot, alex_knot, pres_knot, sign_knot, cert_knot;

  auto* info = app.add_subcommand("knot-info", "parameters, Alexander polynomial and L-space verdict");
  info_knot.add(info);

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a family knot or of b(p, q)");
  alex_knot.add(alex);
  std::optional<std::int64_t> fixture_p, fixture_q;
  alex->add_option("--p", fixture_p, "two-bridge fixture b(p, q), odd p");
  alex->add_option("--q", fixture_q, "two-bridge fixture b(p, q)");

  auto* pres = app.add_subcommand("presentation", "presentations of G1, G2, pi1(M) and the gluing");
  pres_knot.add(pres);

  auto* sign = app.add_subcommand("order-sign", "sign of a word under a family member");
  sign_knot.add(sign);
  std::string group, conjugator = "1", word_text;
  bool reversed = false, kernel_reversed = false;
  sign->add_option("--group", group, "g1 or g2")->required()->check(CLI::IsMember({"g1", "g2"}));
  sign->add_option("--conjugator", conjugator, "conjugator word g (member <^g)");
  sign->add_flag("--reversed", reversed, "switch positive and negative cones");
  sign->add_flag("--kernel-reversed", kernel_reversed, "g2 only: base built on the reversed kernel order");
  sign->add_option("word", word_text, "word, e.g. \"b^-1 a\"")->required();

  auto* cert = app.add_subcommand("certify", "run the certification checks");
  cert_knot.add(cert);
  SampleBudget budget;
  std::optional<std::uint64_t> seed;
  std::string check = "all", out_file;
  cert->add_option("--radius", budget.radius, "ball radius for trichotomy")->capture_default_str();
  cert->add_option("--conj-len", budget.conj_len, "exhaustive conjugator length")->capture_default_str();
  cert->add_option("--peripheral-box", budget.peripheral_box, "bound on |r|, |s|")->capture_default_str();
  cert->add_option("--samples", budget.samples, "random samples per group")->capture_default_str();
  cert->add_option("--random-conjugators", budget.random_conjugators, "extra seeded conjugators")
      ->capture_default_str();
  cert->add_option("--seed", seed, "seed (default 20240601 or $KNOTLO_SEED)");
  cert->add_option("--check", check, "nf|cone|navas|restrict|compat|all")->capture_default_str();
  cert->add_option("--out", out_file, "also write the report to FILE");

  auto* self = app.add_subcommand("selftest", "fixtures, exact identities and mutation tests");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::emit(out, error_json(ErrorCode::ParseError, e.what()));
    return exit_code(ErrorCode::ParseError);
  }

  try {
    if (info->parsed()) {
      detail::emit(out, knot_info_json(info_knot.params()));
      return 0;
    }
    if (alex->parsed()) {
      if (fixture_p || fixture_q) {
        if (!fixture_p || !fixture_q) fail(ErrorCode::InvalidArgument, "--p and --q go together");
        const LaurentPoly d = alexander_poly_two_bridge(*fixture_p, *fixture_q);
        detail::emit(out, Json{{"schema", kSchemaVersion},
                               {"fixture", {*fixture_p, *fixture_q}},
                               {"alexander", to_json(d)},
                               {"determinant", std::llabs(d.eval(-1))},
                               {"lspace_form", to_json(lspace_form(d))}});
        return 0;
      }
      Json j = knot_info_json(alex_knot.params());
      j.erase("knot");
      detail::emit(out, j);
      return 0;
    }
    if (pres->parsed()) {
      detail::emit(out, presentation_json(pres_knot.params()));
      return 0;
    }
    if (sign->parsed()) {
      const TwoBridgeParams k = sign_knot.params();
      const Word w = Word::parse(word_text);
      const Word g = Word::parse(conjugator);
      std::unique_ptr<ConeOracle> base;
      if (group == "g1") {
        if (kernel_reversed) fail(ErrorCode::InvalidArgument, "--kernel-reversed applies to g2 only");
        base = std::make_unique<G1Order>(k);
        require_alphabet(w, "ab", "G1");
        require_alphabet(g, "ab", "G1");
      } else {
        base = std::make_unique<G2Order>(k, kernel_reversed ? KernelOrder::Reversed : KernelOrder::Standard);
        require_alphabet(w, "xyz", "G2");
        require_alphabet(g, "xyz", "G2");
      }
      const OrderFamilySpec spec{g, reversed};
      const SignTrace t = family_decide(*base, spec, w);
      Json j{{"schema", kSchemaVersion},
             {"group", group},
             {"knot", {{"c1", k.c1}, {"c2", k.c2}}},
             {"word", w.to_string()},
             {"conjugator", g.to_string()},
             {"reversed", reversed}};
      if (group == "g2") j["kernel_order"] = kernel_reversed ? "reversed" : "standard";
      j["evaluated"] = w.conjugated_by(g).to_string();
      j["sign"] = to_string(t.sign);
      j["trace"] = to_json(t);
      detail::emit(out, j);
      return 0;
    }
    if (cert->parsed()) {
      const TwoBridgeParams k = cert_knot.params();
      budget.seed = seed ? *seed : default_seed();
      const CertificateReport rep = certify(k, budget, check);
      Json j{{"schema", kSchemaVersion},
             {"knot", {{"c1", k.c1}, {"c2", k.c2}}},
             {"check", check},
             {"budget", to_json(budget)}};
      j["report"] = to_json(rep);
      if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + out_file);
        f << j.dump(2) << '\n';
      }
      detail::emit(out, j);
      if (rep.verdict == Verdict::Certified) return 0;
      return rep.verdict == Verdict::Refuted ? 1 : exit_code(ErrorCode::InternalCheckFailed);
    }
    if (self->parsed()) {
      bool ok = true;
      Json results = Json::array();
      for (const auto& r : run_selftest()) {
        ok = ok && r.passed;
        results.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      detail::emit(out, Json{{"schema", kSchemaVersion}, {"passed", ok}, {"results", results}});
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    detail::emit(out, error_json(e.code(), e.what()));
    return exit_code(e.code());
  }
  err << "no command\n";
  return 1;
}

}  // namespace knotlo::cli
