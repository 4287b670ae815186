#pragma once

// The universal cover of the projective line over Q(lambda), and lifts of
// SL2 maps to it.
//
// A projective point [u:v] has an angle in [0, pi) (the angle of the line
// spanned by (u, v)); a lifted point is (point, winding) and sits at
// angle + pi * winding on the real line.  A lifted map is an SL2 matrix M with
// an offset o: it sends the base point (e1, 0) to (M e1, o), and is extended
// to the line by monotonicity and commutation with the deck translation
// T_1 : winding -> winding + 1.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_field.hpp"

namespace knotlo {

struct Vec2 {
  FieldElem u, v;
};

/// [[a, b], [c, d]]
struct Mat2 {
  FieldElem a, b, c, d;
};

/// Normalized representative: v > 0, or v == 0 and u > 0.
struct ProjPoint {
  Vec2 coords;
};

struct LiftedPoint {
  ProjPoint point;
  std::int64_t winding = 0;
};

struct LiftedMap {
  Mat2 matrix;
  std::int64_t offset = 0;
  ProjPoint base_image;  // normalized M e1
};

class LiftedGeometry {
 public:
  explicit LiftedGeometry(std::shared_ptr<const NumberField> field) : field_(std::move(field)) {}

  const NumberField& field() const noexcept { return *field_; }
  std::shared_ptr<const NumberField> field_ptr() const noexcept { return field_; }

  ProjPoint normalize(Vec2 w) const {
    const NumberField& F = *field_;
    int s = F.sign(w.v);
    if (s == 0) {
      s = F.sign(w.u);
      check_internal(s != 0, "zero vector has no projective class");
    }
    if (s < 0) {
      w.u = F.neg(w.u);
      w.v = F.neg(w.v);
    }
    return {std::move(w)};
  }

  ProjPoint point(long u, long v) const {
    return normalize({field_->from_int(u), field_->from_int(v)});
  }

  Vec2 apply(const Mat2& m, const Vec2& x) const {
    const NumberField& F = *field_;
    return {F.add(F.mul(m.a, x.u), F.mul(m.b, x.v)), F.add(F.mul(m.c, x.u), F.mul(m.d, x.v))};
  }

  Mat2 multiply(const Mat2& m, const Mat2& n) const {
    const NumberField& F = *field_;
    return {F.add(F.mul(m.a, n.a), F.mul(m.b, n.c)), F.add(F.mul(m.a, n.b), F.mul(m.b, n.d)),
            F.add(F.mul(m.c, n.a), F.mul(m.d, n.c)), F.add(F.mul(m.c, n.b), F.mul(m.d, n.d))};
  }

  Mat2 identity_matrix() const {
    return {field_->from_int(1), field_->zero(), field_->zero(), field_->from_int(1)};
  }

  FieldElem trace(const Mat2& m) const { return field_->add(m.a, m.d); }
  FieldElem det(const Mat2& m) const { return field_->sub(field_->mul(m.a, m.d), field_->mul(m.b, m.c)); }

  /// u1 v2 - u2 v1
  FieldElem cross(const ProjPoint& p, const ProjPoint& q) const {
    const NumberField& F = *field_;
    return F.sub(F.mul(p.coords.u, q.coords.v), F.mul(q.coords.u, p.coords.v));
  }

  bool same_point(const ProjPoint& p, const ProjPoint& q) const {
    return NumberField::is_zero(cross(p, q));
  }

  /// Strict comparison of angles in [0, pi).
  bool angle_less(const ProjPoint& p, const ProjPoint& q) const {
    const bool p_at_zero = NumberField::is_zero(p.coords.v);
    const bool q_at_zero = NumberField::is_zero(q.coords.v);
    if (p_at_zero) return !q_at_zero;
    if (q_at_zero) return false;
    return field_->sign(cross(p, q)) > 0;
  }

  /// -1, 0, 1 in the order of the line.
  int compare(const LiftedPoint& x, const LiftedPoint& y) const {
    if (x.winding != y.winding) return x.winding < y.winding ? -1 : 1;
    if (same_point(x.point, y.point)) return 0;
    return angle_less(x.point, y.point) ? -1 : 1;
  }

  LiftedMap lift(Mat2 m, std::int64_t offset) const {
    check_internal(field_->sign(det(m)) > 0, "lifted maps must preserve orientation");
    ProjPoint base = normalize({m.a, m.c});
    return {std::move(m), offset, std::move(base)};
  }

  LiftedMap translation(std::int64_t k) const { return lift(identity_matrix(), k); }

  LiftedPoint base_point() const { return {point(1, 0), 0}; }

  LiftedPoint apply(const LiftedMap& f, const LiftedPoint& x) const {
    ProjPoint img = normalize(apply(f.matrix, x.point.coords));
    std::int64_t w = x.winding + f.offset + (angle_less(img, f.base_image) ? 1 : 0);
    return {std::move(img), w};
  }

  /// f after g.
  LiftedMap compose(const LiftedMap& f, const LiftedMap& g) const {
    std::int64_t offset = apply(f, apply(g, base_point())).winding;
    return lift(multiply(f.matrix, g.matrix), offset);
  }

  LiftedMap inverse(const LiftedMap& f) const {
    const NumberField& F = *field_;
    Mat2 adj{f.matrix.d, F.neg(f.matrix.b), F.neg(f.matrix.c), f.matrix.a};
    const bool base_moves = !NumberField::is_zero(f.base_image.coords.v);
    return lift(std::move(adj), -f.offset - (base_moves ? 1 : 0));
  }

  LiftedMap power(const LiftedMap& f, std::int64_t k) const {
    LiftedMap base = k < 0 ? inverse(f) : f;
    LiftedMap out = translation(0);
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = compose(out, base);
    return out;
  }

  /// Equal as lifted maps: matrices agree up to sign (projectively, for SL2) and offsets agree.
  bool equal(const LiftedMap& f, const LiftedMap& g) const {
    if (f.offset != g.offset) return false;
    auto same = [](const Mat2& m, const Mat2& n, bool negate) {
      auto eq = [&](const FieldElem& x, const FieldElem& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
          if (x[i] != (negate ? -y[i] : y[i])) return false;
        return true;
      };
      return eq(m.a, n.a) && eq(m.b, n.b) && eq(m.c, n.c) && eq(m.d, n.d);
    };
    return same(f.matrix, g.matrix, false) || same(f.matrix, g.matrix, true);
  }

 private:
  std::shared_ptr<const NumberField> field_;
};

}  // namespace knotlo
