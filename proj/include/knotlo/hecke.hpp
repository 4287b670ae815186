#pragma once

// Exact lifted action of G1 = <a, b | a^2 = b^n> (n = 2 b1 + 1) on the line
// covering the projective line over Q(lambda), lambda = 2 cos(pi / n).
//
// Projectively, a acts by S = [[0, -1], [1, 0]] and b by U^-2 where
// U = [[0, -1], [1, lambda]] is the rotation of order n in the Hecke group.
// With U-hat the lift of U moving every point by less than half a turn,
//
//   b~ = U-hat^(n-2),   a~ = S-hat T_((n-3)/2),   a~^2 = b~^n = T_(n-2),
//
// so h = a^2 acts by the deck translation T_(n-2).  The projective image of
// mu = b^-b1 a is parabolic and mu~ fixes a lift of its fixed point; both facts
// are checked exactly at construction.  For b1 = 1 this is the plain
// realization a~ = S-hat, b~ = U-hat, h = T_1.

#include <cstdint>
#include <memory>
#include <vector>

#include "error.hpp"
#include "groups.hpp"
#include "lifted_action.hpp"
#include "number_field.hpp"

namespace knotlo {

class G1Realization {
 public:
  static constexpr std::int64_t kMaxB1 = 64;

  explicit G1Realization(const TwoBridgeParams& k)
      : G1Realization(k.b1, field_for(k.b1)) {}

  /// `field` must be Q(2 cos(pi / (2 b1 + 1))); any other field fails the exact checks.
  G1Realization(std::int64_t b1, std::shared_ptr<const NumberField> field)
      : group_(b1), geo_(std::move(field)) {
    const std::int64_t n = group_.n();
    const NumberField& F = geo_.field();
    const FieldElem zero = F.zero(), one = F.from_int(1), mone = F.from_int(-1);

    s_hat_ = geo_.lift({zero, mone, one, zero}, 0);
    u_hat_ = geo_.lift({zero, mone, one, F.generator()}, 0);
    a_ = geo_.compose(s_hat_, geo_.translation((n - 3) / 2));
    b_pow_.push_back(geo_.translation(0));
    const LiftedMap b = geo_.power(u_hat_, n - 2);
    for (std::int64_t j = 1; j <= n; ++j) b_pow_.push_back(geo_.compose(b_pow_.back(), b));

    const LiftedMap h = geo_.translation(n - 2);
    require(geo_.equal(geo_.power(s_hat_, 2), geo_.translation(1)), "S-hat^2 != T_1");
    require(geo_.equal(geo_.power(u_hat_, n), geo_.translation(1)), "U-hat^n != T_1");
    require(geo_.equal(geo_.compose(a_, a_), h), "a~^2 != T_(n-2)");
    require(geo_.equal(b_pow_.back(), h), "b~^n != T_(n-2)");
    b_pow_.pop_back();

    mu_ = map_of(group_.normal_form(group_.mu()));
    const FieldElem tr = geo_.trace(mu_.matrix);
    const bool parabolic = NumberField::is_zero(F.sub(tr, F.from_int(2))) ||
                           NumberField::is_zero(F.add(tr, F.from_int(2)));
    require(parabolic, "mu is not parabolic");
    const Mat2& m = mu_.matrix;
    const FieldElem t = F.sign(tr) > 0 ? one : mone;
    Vec2 v{m.b, F.sub(t, m.a)};
    if (NumberField::is_zero(v.u) && NumberField::is_zero(v.v)) v = {F.sub(t, m.d), m.c};
    require(!(NumberField::is_zero(v.u) && NumberField::is_zero(v.v)), "mu acts trivially");
    p0_ = {geo_.normalize(v), 0};
    require(geo_.compare(geo_.apply(mu_, p0_), p0_) == 0, "mu~ does not fix its parabolic point");

    test_points_.push_back(p0_);
    for (auto [u, w] : {std::pair{1L, 0L}, {0L, 1L}, {1L, 1L}, {-1L, 1L}}) {
      if (test_points_.size() == 4) break;
      ProjPoint q = geo_.point(u, w);
      if (!geo_.same_point(q, p0_.point)) test_points_.push_back({q, 0});
    }
  }

  const G1Group& group() const noexcept { return group_; }
  const LiftedGeometry& geometry() const noexcept { return geo_; }
  const LiftedMap& a() const noexcept { return a_; }
  /// b~^j, 0 <= j < n.
  const LiftedMap& b_power(std::int64_t j) const { return b_pow_.at(static_cast<std::size_t>(j)); }
  const LiftedMap& mu() const noexcept { return mu_; }
  /// Translation length of h in windings.
  std::int64_t h_shift() const noexcept { return group_.n() - 2; }
  /// p0 (the fixed point of mu~ at winding 0) followed by three other points.
  const std::vector<LiftedPoint>& test_points() const noexcept { return test_points_; }

  LiftedPoint act(const G1Element& e, LiftedPoint x) const {
    x.winding += e.central * h_shift();
    for (auto it = e.delta.rbegin(); it != e.delta.rend(); ++it)
      x = geo_.apply(it->is_a ? a_ : b_pow_[static_cast<std::size_t>(it->power)], x);
    return x;
  }

  LiftedMap map_of(const G1Element& e) const {
    LiftedMap f = geo_.translation(e.central * h_shift());
    for (auto it = e.delta.rbegin(); it != e.delta.rend(); ++it)
      f = geo_.compose(it->is_a ? a_ : b_pow_[static_cast<std::size_t>(it->power)], f);
    return f;
  }

 private:
  static std::shared_ptr<const NumberField> field_for(std::int64_t b1) {
    if (b1 < 1 || b1 > kMaxB1)
      fail(ErrorCode::InvalidArgument, "the G1 order is implemented for 1 <= b1 <= " + std::to_string(kMaxB1));
    return NumberField::cos_pi_over(static_cast<int>(2 * b1 + 1));
  }

  static void require(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::ConstructionFailed, std::string("G1 realization: ") + what);
  }

  G1Group group_;
  LiftedGeometry geo_;
  LiftedMap s_hat_, u_hat_, a_, mu_;
  std::vector<LiftedMap> b_pow_;
  LiftedPoint p0_;
  std::vector<LiftedPoint> test_points_;
};

}  // namespace knotlo
