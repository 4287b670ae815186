#pragma once

// Positive-cone oracles.
//
//  * Z2Order: the two lexicographic orders on the peripheral Z^2.
//  * G1Order: first-difference order of the lifted action (hecke.hpp) on the
//    test sequence p0, p1, p2, p3.
//  * G2Order: pi (x-exponent), then t: ker pi -> Z (z_i -> (-1)^i), then the
//    Magnus order on the free group ker t in the global Schreier basis.
//    KernelOrder::Reversed uses the opposite order on ker pi (layers 2 and 3).
//  * FamilyMember: the conjugate <^g of a base order, optionally reversed.
//    <^g is the order with a <^g b iff a g < b g, so w is positive for <^g iff
//    g^-1 w g is positive for the base order.

#include <cstdint>
#include <memory>
#include <string>

#include "error.hpp"
#include "groups.hpp"
#include "hecke.hpp"
#include "magnus.hpp"
#include "word.hpp"

namespace knotlo {

enum class Sign { Negative = -1, Identity = 0, Positive = 1 };

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Identity: return "Identity";
    case Sign::Positive: return "Positive";
  }
  return "?";
}

inline Sign sign_of(std::int64_t v) {
  return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Identity);
}

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// Which rule decided a sign: "identity", "test_point" (G1, detail = index),
/// "pi", "t" (G2, detail = value), "magnus" (G2, detail = degree).
struct SignTrace {
  Sign sign = Sign::Identity;
  std::string layer = "identity";
  std::int64_t detail = 0;
};

// ---------------------------------------------------------------- Z^2

enum class Z2Variant { PlusFirst, MinusFirst };

inline const char* to_string(Z2Variant v) { return v == Z2Variant::PlusFirst ? "PlusFirst" : "MinusFirst"; }

/// PlusFirst: (r, s) > 0 iff s > 0, or s = 0 and r > 0.  MinusFirst: same with r < 0.
inline Sign z2_is_positive(Z2Variant order, PeripheralVector v) {
  if (v.s != 0) return sign_of(v.s);
  return order == Z2Variant::PlusFirst ? sign_of(v.r) : sign_of(-v.r);
}

// ---------------------------------------------------------------- cones

class ConeOracle {
 public:
  virtual ~ConeOracle() = default;

  /// "G1" or "G2".
  virtual std::string group() const = 0;
  virtual SignTrace decide(const Word& w) const = 0;
  /// Independent equality oracle (normal forms).
  virtual bool is_identity(const Word& w) const = 0;

  Sign sign(const Word& w) const { return decide(w).sign; }
};

class G1Order : public ConeOracle {
 public:
  explicit G1Order(const TwoBridgeParams& k) : real_(std::make_shared<const G1Realization>(k)) {}
  explicit G1Order(std::shared_ptr<const G1Realization> real) : real_(std::move(real)) {}

  std::string group() const override { return "G1"; }
  const G1Realization& realization() const noexcept { return *real_; }

  bool is_identity(const Word& w) const override {
    return real_->group().normal_form(w).is_identity();
  }

  SignTrace decide(const Word& w) const override {
    const G1Element e = real_->group().normal_form(w);
    if (e.is_identity()) return {};
    const auto& pts = real_->test_points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int c = real_->geometry().compare(real_->act(e, pts[i]), pts[i]);
      if (c != 0) return {c > 0 ? Sign::Positive : Sign::Negative, "test_point", static_cast<std::int64_t>(i)};
    }
    fail(ErrorCode::InternalCheckFailed, "G1 order: nontrivial element fixes every test point");
  }

 private:
  std::shared_ptr<const G1Realization> real_;
};

enum class KernelOrder { Standard, Reversed };

class G2Order : public ConeOracle {
 public:
  explicit G2Order(const TwoBridgeParams& k, KernelOrder kernel = KernelOrder::Standard)
      : group_(k.b2), kernel_(kernel) {}
  G2Order(std::int64_t b2, KernelOrder kernel) : group_(b2), kernel_(kernel) {}

  std::string group() const override { return "G2"; }
  KernelOrder kernel_order() const noexcept { return kernel_; }
  const G2Group& g2() const noexcept { return group_; }

  bool is_identity(const Word& w) const override { return group_.normal_form(w).is_identity(); }

  SignTrace decide(const Word& w) const override {
    const G2Element e = group_.normal_form(w);
    if (e.is_identity()) return {};
    if (e.xpow != 0) return {sign_of(e.xpow), "pi", e.xpow};
    const Sign flip = kernel_ == KernelOrder::Standard ? Sign::Positive : Sign::Negative;
    if (std::int64_t t = group_.kernel_t(e); t != 0) return {flip * sign_of(t), "t", t};
    std::vector<std::pair<G2Group::BasisKey, std::int64_t>> basis = group_.schreier_rewrite(e);
    MagnusResult m = magnus_sign(basis);
    check_internal(m.sign != 0, "G2 order: nontrivial element of ker t rewrote to the empty word");
    return {flip * sign_of(m.sign), "magnus", m.degree};
  }

 private:
  G2Group group_;
  KernelOrder kernel_;
};

// ---------------------------------------------------------------- families

struct OrderFamilySpec {
  Word conjugator;
  bool reversed = false;

  std::string to_string() const {
    return "g=" + conjugator.to_string() + (reversed ? " reversed" : "");
  }
};

/// Sign of w under the member <^g (reversed if requested) of the base's conjugation family.
inline SignTrace family_decide(const ConeOracle& base, const OrderFamilySpec& spec, const Word& w) {
  SignTrace t = base.decide(w.conjugated_by(spec.conjugator));
  if (spec.reversed) t.sign = -t.sign;
  return t;
}

inline Sign family_is_positive(const ConeOracle& base, const OrderFamilySpec& spec, const Word& w) {
  return family_decide(base, spec, w).sign;
}

/// A family member viewed as an oracle in its own right.
class FamilyMember : public ConeOracle {
 public:
  FamilyMember(std::shared_ptr<const ConeOracle> base, OrderFamilySpec spec)
      : base_(std::move(base)), spec_(std::move(spec)) {}

  std::string group() const override { return base_->group(); }
  bool is_identity(const Word& w) const override { return base_->is_identity(w); }
  SignTrace decide(const Word& w) const override { return family_decide(*base_, spec_, w); }

  const OrderFamilySpec& spec() const noexcept { return spec_; }

 private:
  std::shared_ptr<const ConeOracle> base_;
  OrderFamilySpec spec_;
};

}  // namespace knotlo
