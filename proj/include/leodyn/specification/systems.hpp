#pragma once
// RegionSystem adapters: piecewise-affine maps with IntervalSet regions and
// shift spaces with CylinderSet regions.

#include <optional>
#include <vector>

#include "leodyn/interval/affine_map.hpp"
#include "leodyn/interval/interval_set.hpp"
#include "leodyn/specification/specification.hpp"
#include "leodyn/symbolic/cylinder_set.hpp"

namespace leodyn::spec {

class IntervalSystem {
 public:
  using Point = Rational;
  using Region = interval::IntervalSet;

  explicit IntervalSystem(interval::PiecewiseAffineMap map) : map_(std::move(map)) {}
  const interval::PiecewiseAffineMap& map() const { return map_; }

  Point step(const Point& x) const { return map_(x); }
  Rational distance(const Point& x, const Point& y) const;
  Region ball(const Point& x, const Rational& eps) const;
  Region image(const Region& r) const { return map_.image(r); }
  Region preimage(const Region& r) const { return map_.preimage(r); }
  Region intersect(const Region& a, const Region& b) const { return a.intersect(b); }
  bool is_empty(const Region& r) const { return r.empty(); }
  bool is_whole(const Region& r) const { return r == Region::unit(); }
  bool includes(const Region& outer, const Region& inner) const { return outer.includes(inner); }
  // Smallest-denominator rational in the largest component (leftmost on ties).
  Point representative(const Region& r) const;
  // Smallest preimage of x.
  Point preimage_point(const Point& x) const;
  // Smallest fixed point of f^period in the closure of r.
  std::optional<Point> periodic_point(const Region& r, int period) const;
  // Points j·spacing in [0,1).
  std::vector<Point> net(const Rational& spacing) const;
  bool same_point(const Point& a, const Point& b) const { return a == b; }

 private:
  interval::PiecewiseAffineMap map_;
};

class ShiftSystem {
 public:
  using Point = symbolic::SequencePoint;
  using Region = symbolic::CylinderSet;

  explicit ShiftSystem(symbolic::ShiftSpace space) : space_(std::move(space)) {}
  const symbolic::ShiftSpace& space() const { return space_; }

  Point step(const Point& x) const { return x.shifted().normalized(); }
  // 2^{-(first differing index)}.
  Rational distance(const Point& x, const Point& y) const;
  // Closed ball {d <= eps}: the cylinder of the first ⌈log₂(1/eps)⌉ symbols.
  Region ball(const Point& x, const Rational& eps) const;
  Region image(const Region& r) const { return symbolic::shift_image(space_, r); }
  Region preimage(const Region& r) const { return symbolic::shift_preimage(space_, r); }
  Region intersect(const Region& a, const Region& b) const { return symbolic::intersect(space_, a, b); }
  bool is_empty(const Region& r) const { return r.empty(); }
  bool is_whole(const Region& r) const { return r.is_whole(); }
  bool includes(const Region& outer, const Region& inner) const { return symbolic::includes(space_, outer, inner); }
  // Lexicographically smallest allowed sequence in r.
  Point representative(const Region& r) const;
  // Prepends the smallest predecessor of x₀.
  Point preimage_point(const Point& x) const;
  // Lexicographically smallest u^∞ in r with |u| = period.
  std::optional<Point> periodic_point(const Region& r, int period) const;
  // One representative per allowed word of length ⌈log₂(1/spacing)⌉.
  std::vector<Point> net(const Rational& spacing) const;
  bool same_point(const Point& a, const Point& b) const { return a == b; }

  // Smallest allowed extension of an allowed word.
  Point smallest_extension(const symbolic::Word& w) const;
  // ⌈log₂(1/eps)⌉, 0 for eps >= 1.
  static int ball_depth(const Rational& eps);

 private:
  symbolic::ShiftSpace space_;
};

static_assert(RegionSystem<IntervalSystem>);
static_assert(RegionSystem<ShiftSystem>);

}  // namespace leodyn::spec
