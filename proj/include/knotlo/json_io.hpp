#pragma once

// JSON views of the library's results.  Every top-level document carries
// "schema": kSchemaVersion; golden files in tests/golden pin the layout.

#include <string>

#include <json.hpp>

#include "alexander.hpp"
#include "certify.hpp"
#include "cfrac.hpp"
#include "groups.hpp"
#include "orders.hpp"

namespace knotlo {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const TwoBridgeParams& k) {
  const LensSpace lens = double_branched_cover(k);
  return Json{{"c1", k.c1},
              {"c2", k.c2},
              {"b1", k.b1},
              {"b2", k.b2},
              {"p", k.p},
              {"q", k.q},
              {"slope", k.slope},
              {"mirrored", k.mirrored},
              {"fibered", is_fibered(k)},
              {"genus", genus(k)},
              {"lens", {lens.p, lens.q}},
              {"even_expansion", even_expansion(k).entries()}};
}

inline Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) coeffs.push_back({it->first, it->second});
  return Json{{"coeffs", coeffs}, {"text", p.to_string()}};
}

inline Json to_json(const LSpaceFormReport& r) {
  Json j{{"matches", r.matches}};
  if (r.matches) {
    j["k"] = r.k;
    j["exponents"] = r.exponents;
  }
  return j;
}

inline Json to_json(const LSpaceVerdict& v) {
  Json j{{"admits", v.admits}, {"reason", to_string(v.reason)}, {"determinant", v.determinant}};
  if (v.reason == LSpaceReason::DeterminantExceedsGenusBound) j["genus_bound"] = v.genus_bound;
  return j;
}

/// knot-info / alexander payload.
inline Json knot_info_json(const TwoBridgeParams& k) {
  const LaurentPoly d = alexander_poly(k);
  Json j{{"schema", kSchemaVersion}, {"knot", to_json(k)}};
  j["alexander"] = to_json(d);
  j["determinant"] = std::llabs(d.eval(-1));
  j["lspace_form"] = to_json(lspace_form(d));
  j["verdict"] = to_json(lspace_surgery_verdict(k));
  return j;
}

inline Json to_json(const GroupPresentation& p) {
  Json gens = Json::array();
  for (char c : p.generators) gens.push_back(std::string(1, c));
  return Json{{"generators", gens}, {"relators", p.relator_strings()}};
}

inline Json presentation_json(const TwoBridgeParams& k) {
  const Presentations pr = presentations(k);
  return Json{{"schema", kSchemaVersion},
              {"knot", {{"c1", k.c1}, {"c2", k.c2}}},
              {"g1", to_json(pr.g1)},
              {"g1_bc", to_json(g1_bc_presentation(k))},
              {"g2", to_json(pr.g2)},
              {"manifold", to_json(pr.manifold)},
              {"gluing",
               {{"mu", pr.gluing.mu.to_string()},
                {"h", pr.gluing.h.to_string()},
                {"mu_image", pr.gluing.mu_image.to_string()},
                {"h_image", pr.gluing.h_image.to_string()}}}};
}

inline Json to_json(const SignTrace& t) {
  return Json{{"sign", to_string(t.sign)}, {"layer", t.layer}, {"detail", t.detail}};
}

inline Json to_json(const SampleBudget& b) {
  return Json{{"radius", b.radius},
              {"conj_len", b.conj_len},
              {"peripheral_box", b.peripheral_box},
              {"samples", b.samples},
              {"random_conjugators", b.random_conjugators},
              {"seed", b.seed}};
}

inline Json to_json(const CertificateReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
  Json cex = Json::array();
  for (const auto& c : r.counterexamples)
    cex.push_back({{"check", c.check}, {"word", c.word}, {"member", c.member}, {"expected", c.expected}, {"got", c.got}});
  Json j{{"verdict", to_string(r.verdict)}, {"violations", r.violations()}, {"checks", checks},
         {"counterexamples", cex}, {"stats", r.stats}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline Json error_json(ErrorCode code, const std::string& message) {
  return Json{{"error", {{"code", to_string(code)}, {"message", message}}}};
}

}  // namespace knotlo
