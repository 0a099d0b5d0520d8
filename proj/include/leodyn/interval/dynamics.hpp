#pragma once
// Metric notions, Bowen balls and the LEO / expanding / expansivity
// predicates for piecewise-affine maps.

#include <optional>
#include <utility>

#include "leodyn/interval/affine_map.hpp"
#include "leodyn/interval/interval_set.hpp"

namespace leodyn::interval {

// |x − y| on the interval, min(|x − y|, 1 − |x − y|) on the circle.
Rational distance(const Rational& x, const Rational& y, Topology topology);

// Open ball {y ∈ [0,1) : d(x,y) < eps}.  eps must lie in (0, 1/2]; on the
// circle radius 1/2 gives the whole space.  Throws BadRadius otherwise.
IntervalSet ball(const Rational& x, const Rational& eps, Topology topology);

Rational iterate(const PiecewiseAffineMap& f, Rational x, int n);
IntervalSet image_n(const PiecewiseAffineMap& f, IntervalSet s, int n);
IntervalSet preimage_n(const PiecewiseAffineMap& f, IntervalSet s, int n);

// region ∩ f^{-k}(target), computed by pulling target back along the
// forward image chain of region (exact, and far smaller than f^{-k}(target)).
IntervalSet pullback_within(const PiecewiseAffineMap& f, const IntervalSet& region, int k, const IntervalSet& target);

// B_n(x,eps) = {y : d(f^i x, f^i y) < eps for 0 <= i < n}, via
// B_{j+1} = B_j ∩ f^{-j}(B(f^j x, eps)).
IntervalSet bowen_ball(const PiecewiseAffineMap& f, const Rational& x, int n, const Rational& eps);

// Diameter of the closure of s in the map's metric (0 for the empty set).
Rational diameter(const IntervalSet& s, Topology topology);

// diam f^n(B_n(x,eps)).
Rational bowen_image_diam(const PiecewiseAffineMap& f, const Rational& x, int n, const Rational& eps);

// Distance from x to the closure of s; s must be nonempty.
Rational distance_to_set(const Rational& x, const IntervalSet& s, Topology topology);
// Hausdorff distance between closures; nullopt when exactly one set is empty.
std::optional<Rational> hausdorff_distance(const IntervalSet& a, const IntervalSet& b, Topology topology);

struct LeoCertificate {
  std::optional<int> covering_n;  // least N with f^N(J) = [0,1)
  IntervalSet terminal;           // f^N(J) at the last iterate computed
  int iterations = 0;
  bool stalled = false;           // the image chain reached a fixed set ≠ [0,1)

  bool certified() const { return covering_n.has_value(); }
};

// Least N <= max_n (N >= 0) with f^N(J) = [0,1) exactly.  The search stops
// early once f^{j+1}(J) = f^j(J), since the chain can then never grow.
LeoCertificate leo_certify(const PiecewiseAffineMap& f, const IntervalSet& j, int max_n);

struct ExpandingWitness {
  Rational lambda;
  Rational delta0;
  Rational grid_step = pow2(-10);
};

// First grid pair (in lexicographic order) with d(x,y) < delta0 and
// d(fx,fy) < lambda·d(x,y); afterwards any branch whose |slope| < lambda
// supplies a pair.  nullopt means the check passed.
std::optional<std::pair<Rational, Rational>> expanding_check(const PiecewiseAffineMap& f, const ExpandingWitness& w);

struct ExpansivityWitness {
  Rational alpha;
  int horizon = 64;
};

// Least n <= horizon with d(f^n x, f^n y) > alpha; nullopt if none.
std::optional<int> expansivity_first_separation(const PiecewiseAffineMap& f, const Rational& x, const Rational& y,
                                                const ExpansivityWitness& w);

}  // namespace leodyn::interval
