#include "leodyn/interval/dynamics.hpp"

#include <algorithm>
#include <vector>

#include "leodyn/core/errors.hpp"

namespace leodyn::interval {

namespace {

// Circle distance of a signed displacement t.
Rational circle_norm(const Rational& t) {
  Rational f = frac_of(t);
  Rational g = 1 - f;
  return f < g ? f : g;
}

}  // namespace

Rational distance(const Rational& x, const Rational& y, Topology topology) {
  Rational d = abs(Rational(x - y));
  if (topology == Topology::circle) {
    Rational other = 1 - d;
    if (other < d) return other;
  }
  return d;
}

IntervalSet ball(const Rational& x, const Rational& eps, Topology topology) {
  if (eps <= 0 || eps > ratio(1, 2)) throw BadRadius("radius " + format_rational(eps) + " is outside (0,1/2]");
  if (x < 0 || x >= 1) throw PointOutsideDomain("ball center " + format_rational(x) + " is outside [0,1)");
  Rational lo = x - eps;
  Rational hi = x + eps;
  if (topology == Topology::circle) {
    if (eps == ratio(1, 2)) return IntervalSet::unit();
    std::vector<Interval> parts{Interval::open(lo, hi)};
    if (lo < 0) parts.push_back(Interval::open(lo + 1, Rational(1)));
    if (hi > 1) parts.push_back(Interval::open(Rational(0), hi - 1));
    if (lo < 0 || hi > 1) parts.push_back(Interval::point(0));  // the wrap point 0 ≡ 1 lies inside
    return IntervalSet(std::move(parts)).intersect(IntervalSet::unit());
  }
  return IntervalSet{Interval::open(lo, hi)}.intersect(IntervalSet::unit());
}

Rational iterate(const PiecewiseAffineMap& f, Rational x, int n) {
  for (int i = 0; i < n; ++i) x = f(x);
  return x;
}

IntervalSet image_n(const PiecewiseAffineMap& f, IntervalSet s, int n) {
  for (int i = 0; i < n; ++i) s = f.image(s);
  return s;
}

IntervalSet preimage_n(const PiecewiseAffineMap& f, IntervalSet s, int n) {
  for (int i = 0; i < n; ++i) s = f.preimage(s);
  return s;
}

IntervalSet pullback_within(const PiecewiseAffineMap& f, const IntervalSet& region, int k, const IntervalSet& target) {
  std::vector<IntervalSet> chain{region};
  chain.reserve(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j < k; ++j) chain.push_back(f.image(chain.back()));
  IntervalSet s = chain[static_cast<std::size_t>(k)].intersect(target);
  for (int j = k - 1; j >= 0 && !s.empty(); --j) {
    s = chain[static_cast<std::size_t>(j)].intersect(f.preimage(s));
  }
  return s;
}

IntervalSet bowen_ball(const PiecewiseAffineMap& f, const Rational& x, int n, const Rational& eps) {
  if (n < 1) throw InvalidArgument("bowen_ball needs n >= 1");
  IntervalSet b = ball(x, eps, f.topology());
  Rational fx = x;
  for (int j = 1; j < n; ++j) {
    fx = f(fx);
    b = pullback_within(f, b, j, ball(fx, eps, f.topology()));
  }
  return b;
}

Rational diameter(const IntervalSet& s, Topology topology) {
  if (s.empty()) return Rational(0);
  const auto& parts = s.parts();
  if (topology == Topology::interval) {
    Rational d = parts.back().hi - parts.front().lo;
    return d;
  }
  Rational half = ratio(1, 2);
  Rational best = 0;
  for (const Interval& a : parts) {
    for (const Interval& b : parts) {
      // Displacements t = u − v with u ∈ cl(a), v ∈ cl(b) fill [a.lo − b.hi, a.hi − b.lo].
      Rational t_lo = a.lo - b.hi;
      Rational t_hi = a.hi - b.lo;
      if (t_hi - t_lo >= 1) return half;
      // Is there t ≡ 1/2 (mod 1) in [t_lo, t_hi]?
      Rational shifted = t_lo - half;
      Rational first = Rational(ceil_of(shifted)) + half;
      if (first <= t_hi) return half;
      Rational c = std::max(circle_norm(t_lo), circle_norm(t_hi));
      if (c > best) best = c;
    }
  }
  return best;
}

Rational bowen_image_diam(const PiecewiseAffineMap& f, const Rational& x, int n, const Rational& eps) {
  return diameter(image_n(f, bowen_ball(f, x, n, eps), n), f.topology());
}

Rational distance_to_set(const Rational& x, const IntervalSet& s, Topology topology) {
  if (s.empty()) throw InvalidArgument("distance to the empty set");
  Rational best = 1;
  for (const Interval& iv : s.parts()) {
    if (x >= iv.lo && x <= iv.hi) return Rational(0);
    Rational d = std::min(distance(x, iv.lo, topology), distance(x, iv.hi, topology));
    if (d < best) best = d;
  }
  return best;
}

namespace {

// sup over cl(a) of the distance to cl(b).  The distance function is
// piecewise linear; its maxima sit at endpoints of a or at midpoints of the
// gaps of b.
Rational directed_hausdorff(const IntervalSet& a, const IntervalSet& b, Topology topology) {
  std::vector<Rational> gap_mids;
  const auto& bp = b.parts();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) gap_mids.push_back((bp[i].hi + bp[i + 1].lo) / 2);
  if (topology == Topology::circle) {
    Rational wrap = (bp.back().hi + bp.front().lo + 1) / 2;
    gap_mids.push_back(frac_of(wrap));
  } else {
    gap_mids.push_back(Rational(0));
    gap_mids.push_back(Rational(1));
  }
  Rational best = 0;
  auto consider = [&](const Rational& x) {
    Rational d = distance_to_set(x, b, topology);
    if (d > best) best = d;
  };
  for (const Interval& iv : a.parts()) {
    consider(iv.lo);
    consider(iv.hi == 1 && topology == Topology::circle ? Rational(0) : iv.hi);
    for (const Rational& m : gap_mids) {
      if (m >= iv.lo && m <= iv.hi) consider(m);
    }
  }
  return best;
}

}  // namespace

std::optional<Rational> hausdorff_distance(const IntervalSet& a, const IntervalSet& b, Topology topology) {
  if (a.empty() && b.empty()) return Rational(0);
  if (a.empty() || b.empty()) return std::nullopt;
  return std::max(directed_hausdorff(a, b, topology), directed_hausdorff(b, a, topology));
}

LeoCertificate leo_certify(const PiecewiseAffineMap& f, const IntervalSet& j, int max_n) {
  if (j.empty()) throw InvalidArgument("leo_certify needs a nonempty interval set");
  LeoCertificate cert;
  IntervalSet current = j;
  const IntervalSet whole = IntervalSet::unit();
  for (int n = 0;; ++n) {
    cert.iterations = n;
    if (current == whole) {
      cert.covering_n = n;
      break;
    }
    if (n == max_n) break;
    IntervalSet next = f.image(current);
    if (next == current) {
      cert.stalled = true;
      break;
    }
    current = std::move(next);
  }
  cert.terminal = std::move(current);
  return cert;
}

std::optional<std::pair<Rational, Rational>> expanding_check(const PiecewiseAffineMap& f, const ExpandingWitness& w) {
  if (w.grid_step <= 0) throw InvalidArgument("grid_step must be positive");
  if (w.lambda <= 1 || w.delta0 <= 0 || w.delta0 > ratio(1, 2)) {
    throw InvalidArgument("expanding witness needs lambda > 1 and 0 < delta0 <= 1/2");
  }
  std::vector<Rational> grid;
  std::vector<std::optional<Rational>> values;
  for (Rational x = 0; x < 1; x += w.grid_step) {
    grid.push_back(x);
    try {
      values.emplace_back(f(x));
    } catch (const ValueOutsideDomain&) {
      values.emplace_back(std::nullopt);  // measure-zero point mapped to 1; skipped
    }
  }
  const Topology t = f.topology();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!values[i]) continue;
    for (std::size_t k = i + 1; k < grid.size(); ++k) {
      if (!values[k]) continue;
      Rational d = distance(grid[i], grid[k], t);
      if (d >= w.delta0) {
        if (t == Topology::interval) break;  // distances only grow along the row
        continue;
      }
      Rational image_d = distance(*values[i], *values[k], t);
      if (image_d < w.lambda * d) return std::make_pair(grid[i], grid[k]);
    }
  }
  for (const AffineBranch& p : f.pieces()) {
    if (abs(p.slope) < w.lambda) {
      Rational mid = (p.lo + p.hi) / 2;
      Rational y = std::min(mid, Rational(p.lo + w.delta0 / 2));
      return std::make_pair(p.lo, y);
    }
  }
  return std::nullopt;
}

std::optional<int> expansivity_first_separation(const PiecewiseAffineMap& f, const Rational& x, const Rational& y,
                                                const ExpansivityWitness& w) {
  if (w.alpha <= 0 || w.horizon < 1) throw InvalidArgument("expansivity witness needs alpha > 0 and horizon >= 1");
  Rational u = x;
  Rational v = y;
  for (int n = 0; n <= w.horizon; ++n) {
    if (distance(u, v, f.topology()) > w.alpha) return n;
    if (n == w.horizon) break;
    u = f(u);
    v = f(v);
  }
  return std::nullopt;
}

}  // namespace leodyn::interval
