#include "leodyn/interval/affine_map.hpp"

#include <algorithm>

#include "leodyn/core/errors.hpp"

namespace leodyn::interval {

const char* to_string(Topology t) { return t == Topology::circle ? "circle" : "interval"; }

Topology parse_topology(const std::string& name) {
  if (name == "circle") return Topology::circle;
  if (name == "interval") return Topology::interval;
  throw ParseError("unknown topology '" + name + "'");
}

namespace {

Rational value_at(const AffineBranch& b, const Rational& x) {
  Rational v = b.slope * x + b.intercept;
  return v;
}

std::vector<AffineBranch> split_mod_one(const AffineBranch& b) {
  std::vector<AffineBranch> out;
  Rational v_lo = value_at(b, b.lo);
  Rational v_hi = value_at(b, b.hi);
  BigInt first = floor_of(v_lo);
  BigInt last = ceil_of(v_hi) - 1;
  for (BigInt k = first; k <= last; ++k) {
    Rational start = (Rational(k) - b.intercept) / b.slope;
    Rational stop = (Rational(k + 1) - b.intercept) / b.slope;
    Rational lo = std::max(start, b.lo);
    Rational hi = std::min(stop, b.hi);
    if (lo < hi) out.push_back({lo, hi, b.slope, Rational(b.intercept - Rational(k))});
  }
  return out;
}

}  // namespace

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<AffineBranch> branches, Topology topology, bool reduce_mod_one)
    : branches_(std::move(branches)), topology_(topology), reduce_mod_one_(reduce_mod_one) {
  if (branches_.empty()) throw InvalidMap("map has no branches");
  if (branches_.front().lo != 0) throw InvalidMap("first branch must start at 0");
  if (branches_.back().hi != 1) throw InvalidMap("last branch must end at 1");
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    const AffineBranch& b = branches_[i];
    if (!(b.lo < b.hi)) throw InvalidMap("branch " + std::to_string(i) + " has an empty domain");
    if (i + 1 < branches_.size() && b.hi != branches_[i + 1].lo) {
      throw InvalidMap("branch domains must be contiguous at branch " + std::to_string(i));
    }
    if (b.slope == 0) throw InvalidMap("branch " + std::to_string(i) + " has zero slope");
    if (reduce_mod_one_) {
      if (b.slope < 0) throw InvalidMap("mod-one reduction requires increasing branches");
      auto split = split_mod_one(b);
      pieces_.insert(pieces_.end(), split.begin(), split.end());
    } else {
      pieces_.push_back(b);
    }
  }
  for (const AffineBranch& p : pieces_) {
    Rational a = value_at(p, p.lo);
    Rational z = value_at(p, p.hi);
    if (p.slope > 0 ? (a < 0 || z > 1) : (z < 0 || a > 1)) {
      throw InvalidMap("branch on [" + format_rational(p.lo) + "," + format_rational(p.hi) + ") leaves [0,1]");
    }
  }
}

const AffineBranch& PiecewiseAffineMap::piece_at(const Rational& x) const {
  if (x < 0 || x >= 1) throw PointOutsideDomain("point " + format_rational(x) + " is outside [0,1)");
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& value, const AffineBranch& b) { return value < b.lo; });
  return *std::prev(it);
}

Rational PiecewiseAffineMap::operator()(const Rational& x) const {
  Rational y = value_at(piece_at(x), x);
  if (y == 1) {
    if (topology_ == Topology::circle) return Rational(0);
    throw ValueOutsideDomain("f(" + format_rational(x) + ") = 1 lies outside [0,1)");
  }
  return y;
}

IntervalSet PiecewiseAffineMap::image(const IntervalSet& s) const {
  std::vector<Interval> out;
  bool hits_one = false;
  for (const AffineBranch& p : pieces_) {
    IntervalSet part = s.intersect(IntervalSet{Interval::half_open(p.lo, p.hi)});
    for (const Interval& iv : part.parts()) {
      Interval mapped;
      if (p.slope > 0) {
        mapped = Interval{value_at(p, iv.lo), value_at(p, iv.hi), iv.lo_closed, iv.hi_closed};
      } else {
        mapped = Interval{value_at(p, iv.hi), value_at(p, iv.lo), iv.hi_closed, iv.lo_closed};
      }
      if (mapped.hi == 1 && mapped.hi_closed) hits_one = true;
      out.push_back(mapped);
    }
  }
  if (hits_one && topology_ == Topology::circle) out.push_back(Interval::point(0));
  return IntervalSet(std::move(out)).intersect(IntervalSet::unit());
}

IntervalSet PiecewiseAffineMap::preimage(const IntervalSet& s) const {
  IntervalSet target = s;
  if (topology_ == Topology::circle && s.contains(0)) target = target.unite(IntervalSet{Interval::point(1)});
  std::vector<Interval> out;
  for (const AffineBranch& p : pieces_) {
    Interval domain = Interval::half_open(p.lo, p.hi);
    Rational v_lo = value_at(p, p.lo);
    Rational v_hi = value_at(p, p.hi);
    const Rational& range_lo = p.slope > 0 ? v_lo : v_hi;
    const Rational& range_hi = p.slope > 0 ? v_hi : v_lo;
    for (const Interval& iv : target.parts()) {
      if (iv.hi < range_lo || iv.lo > range_hi) continue;
      Rational x_lo = (iv.lo - p.intercept) / p.slope;
      Rational x_hi = (iv.hi - p.intercept) / p.slope;
      Interval pulled = p.slope > 0 ? Interval{x_lo, x_hi, iv.lo_closed, iv.hi_closed}
                                    : Interval{x_hi, x_lo, iv.hi_closed, iv.lo_closed};
      IntervalSet clipped = IntervalSet{pulled}.intersect(IntervalSet{domain});
      out.insert(out.end(), clipped.parts().begin(), clipped.parts().end());
    }
  }
  return IntervalSet(std::move(out));
}

Rational PiecewiseAffineMap::min_abs_slope() const {
  Rational best = abs(pieces_.front().slope);
  for (const AffineBranch& p : pieces_) {
    Rational m = abs(p.slope);
    if (m < best) best = m;
  }
  return best;
}

PiecewiseAffineMap doubling_map() {
  return PiecewiseAffineMap({{Rational(0), ratio(1, 2), Rational(2), Rational(0)},
                             {ratio(1, 2), Rational(1), Rational(2), Rational(-1)}},
                            Topology::circle);
}

PiecewiseAffineMap beta_map(const Rational& beta) {
  if (beta <= 1) throw InvalidArgument("beta must exceed 1");
  return PiecewiseAffineMap({{Rational(0), Rational(1), beta, Rational(0)}}, Topology::interval, true);
}

PiecewiseAffineMap identity_map(Topology topology) {
  return PiecewiseAffineMap({{Rational(0), Rational(1), Rational(1), Rational(0)}}, topology);
}

}  // namespace leodyn::interval
