#pragma once
// N-spaced specifications and the nested-region shadowing solver, generic
// over any system that provides exact region arithmetic.
//
// Frame.  All regions live at the anchor time a₁ (the start of the first
// window).  With mᵢ = bᵢ − aᵢ and wᵢ = f^{aᵢ}xᵢ the solver builds
//   R₁ = B_{m₁+1}(w₁, ε),
//   Rᵢ = R_{i−1} ∩ f^{−(aᵢ−a₁)}(B_{mᵢ+1}(wᵢ, ε)),
// picks z ∈ Rₙ, and returns a point y with f^{a₁}y = z.  Bowen balls of
// length mᵢ+1 constrain every time aᵢ ≤ k ≤ bᵢ, and the offset aᵢ − a₁ is
// the actual time elapsed between windows.

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leodyn/core/errors.hpp"
#include "leodyn/core/rational.hpp"

namespace leodyn::spec {

template <class S>
concept RegionSystem = requires(const S& sys, const typename S::Point& p, const typename S::Region& r,
                                const Rational& eps, int n) {
  typename S::Point;
  typename S::Region;
  { sys.step(p) } -> std::same_as<typename S::Point>;
  { sys.distance(p, p) } -> std::same_as<Rational>;
  { sys.ball(p, eps) } -> std::same_as<typename S::Region>;
  { sys.image(r) } -> std::same_as<typename S::Region>;
  { sys.preimage(r) } -> std::same_as<typename S::Region>;
  { sys.intersect(r, r) } -> std::same_as<typename S::Region>;
  { sys.is_empty(r) } -> std::convertible_to<bool>;
  { sys.is_whole(r) } -> std::convertible_to<bool>;
  { sys.includes(r, r) } -> std::convertible_to<bool>;
  { sys.representative(r) } -> std::same_as<typename S::Point>;
  { sys.preimage_point(p) } -> std::same_as<typename S::Point>;
  { sys.periodic_point(r, n) } -> std::same_as<std::optional<typename S::Point>>;
  { sys.net(eps) } -> std::same_as<std::vector<typename S::Point>>;
  { sys.same_point(p, p) } -> std::convertible_to<bool>;
};

template <class Point>
struct OrbitSegment {
  int a = 0;
  int b = 0;
  Point x{};
  // When set, x already denotes the window start f^a(base point).  Used by
  // the periodic extension, whose base point is a negative-time preimage
  // that is never materialized.
  bool anchored = false;

  friend bool operator==(const OrbitSegment&, const OrbitSegment&) = default;
};

template <class Point>
struct SpecificationInstance {
  std::vector<OrbitSegment<Point>> segments;
  int gap = 0;
  Rational eps;

  friend bool operator==(const SpecificationInstance&, const SpecificationInstance&) = default;
};

template <class S>
struct ShadowResult {
  using Point = typename S::Point;
  using Region = typename S::Region;
  std::vector<Region> certificate;  // R₁ ⊇ R₂ ⊇ … at the anchor time
  int anchor_time = 0;              // a₁
  Point anchor_point{};             // z ∈ final region
  Point representative{};           // y with f^{a₁}y = z
  std::optional<int> period;
  Rational max_deviation;
  int covering_time = 0;

  friend bool operator==(const ShadowResult&, const ShadowResult&) = default;
};

struct ShadowOptions {
  std::optional<int> covering_time;  // skip recomputation when known
  int max_covering_time = 64;
};

template <RegionSystem S>
typename S::Point iterate(const S& sys, typename S::Point x, int n) {
  for (int i = 0; i < n; ++i) x = sys.step(x);
  return x;
}

// region ∩ f^{-k}(target) along the forward image chain of region.
template <RegionSystem S>
typename S::Region pullback_within(const S& sys, const typename S::Region& region, int k,
                                   const typename S::Region& target) {
  std::vector<typename S::Region> chain{region};
  chain.reserve(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j < k; ++j) chain.push_back(sys.image(chain.back()));
  typename S::Region s = sys.intersect(chain[static_cast<std::size_t>(k)], target);
  for (int j = k - 1; j >= 0 && !sys.is_empty(s); --j) {
    s = sys.intersect(chain[static_cast<std::size_t>(j)], sys.preimage(s));
  }
  return s;
}

// B_n(x, eps) = {y : d(f^i x, f^i y) < eps, 0 <= i < n}; symbolic systems
// use closed balls, see their ball().
template <RegionSystem S>
typename S::Region bowen_ball(const S& sys, const typename S::Point& x, int n, const Rational& eps) {
  if (n < 1) throw InvalidArgument("bowen_ball needs n >= 1");
  typename S::Region b = sys.ball(x, eps);
  typename S::Point fx = x;
  for (int j = 1; j < n; ++j) {
    fx = sys.step(fx);
    b = pullback_within(sys, b, j, sys.ball(fx, eps));
  }
  return b;
}

// 1-based index of the first segment violating a_i − b_{i−1} >= gap.
template <class Point>
std::optional<std::size_t> validate_spacing(const SpecificationInstance<Point>& spec) {
  for (std::size_t i = 1; i < spec.segments.size(); ++i) {
    if (spec.segments[i].a - spec.segments[i - 1].b < spec.gap) return i + 1;
  }
  return std::nullopt;
}

// Least N >= 1 with f^N(B(y, eps)) = X for every y in the system's eps/3-net.
template <RegionSystem S>
int covering_time(const S& sys, const Rational& eps, int max_n = 64) {
  const Rational third = eps / 3;
  int worst = 0;
  for (const auto& y : sys.net(third)) {
    typename S::Region r = sys.ball(y, eps);
    int n = 0;
    while (!sys.is_whole(r) || n == 0) {
      if (n == max_n) {
        throw NotCoveringWithinBound("ball images do not cover the space within " + std::to_string(max_n) +
                                     " steps at eps = " + format_rational(eps));
      }
      r = sys.image(r);
      ++n;
    }
    worst = std::max(worst, n);
  }
  return worst;
}

template <class Point, class S>
Point window_start(const S& sys, const OrbitSegment<Point>& seg) {
  return seg.anchored ? seg.x : iterate(sys, seg.x, seg.a);
}

// max over segments and a_i <= k <= b_i of d(f^k y, f^k x_i).
template <RegionSystem S>
Rational max_deviation(const S& sys, const SpecificationInstance<typename S::Point>& spec,
                       const typename S::Point& y) {
  Rational worst = 0;
  typename S::Point fy = y;
  int time = 0;
  for (const auto& seg : spec.segments) {
    fy = iterate(sys, fy, seg.a - time);
    time = seg.a;
    typename S::Point target = window_start(sys, seg);
    typename S::Point cur = fy;
    for (int k = seg.a; k <= seg.b; ++k) {
      Rational d = sys.distance(cur, target);
      if (d > worst) worst = d;
      if (k < seg.b) {
        cur = sys.step(cur);
        target = sys.step(target);
      }
    }
  }
  return worst;
}

namespace detail {

template <RegionSystem S>
int checked_covering_time(const S& sys, const SpecificationInstance<typename S::Point>& spec,
                          const ShadowOptions& options) {
  if (spec.segments.empty()) throw InvalidArgument("specification has no segments");
  for (const auto& seg : spec.segments) {
    if (seg.a < 0 || seg.b < seg.a) throw InvalidArgument("segment needs 0 <= a <= b");
  }
  if (auto bad = validate_spacing(spec)) {
    throw SpacingViolation("segment " + std::to_string(*bad) + " violates the gap " + std::to_string(spec.gap));
  }
  int n = options.covering_time ? *options.covering_time : covering_time(sys, spec.eps, options.max_covering_time);
  if (spec.gap < n) {
    throw GapBelowCoveringTime("gap " + std::to_string(spec.gap) + " is below covering_time = " + std::to_string(n) +
                               " at eps = " + format_rational(spec.eps));
  }
  return n;
}

template <RegionSystem S>
std::vector<typename S::Region> refine(const S& sys, const SpecificationInstance<typename S::Point>& spec) {
  const int a1 = spec.segments.front().a;
  std::vector<typename S::Region> certificate;
  for (std::size_t i = 0; i < spec.segments.size(); ++i) {
    const auto& seg = spec.segments[i];
    typename S::Region window = bowen_ball(sys, window_start(sys, seg), seg.b - seg.a + 1, spec.eps);
    typename S::Region r =
        certificate.empty() ? window : pullback_within(sys, certificate.back(), seg.a - a1, window);
    if (sys.is_empty(r)) {
      throw EmptyRefinement("refinement stage " + std::to_string(i + 1) + " is empty");
    }
    certificate.push_back(std::move(r));
  }
  return certificate;
}

template <RegionSystem S>
typename S::Point pull_back_point(const S& sys, typename S::Point z, int steps) {
  for (int i = 0; i < steps; ++i) z = sys.preimage_point(z);
  return z;
}

}  // namespace detail

template <RegionSystem S>
ShadowResult<S> shadow(const S& sys, const SpecificationInstance<typename S::Point>& spec,
                       const ShadowOptions& options = {}) {
  ShadowResult<S> result;
  result.covering_time = detail::checked_covering_time(sys, spec, options);
  result.certificate = detail::refine(sys, spec);
  result.anchor_time = spec.segments.front().a;
  result.anchor_point = sys.representative(result.certificate.back());
  result.representative = detail::pull_back_point(sys, result.anchor_point, result.anchor_time);
  if (!sys.same_point(iterate(sys, result.representative, result.anchor_time), result.anchor_point)) {
    throw EmptyRefinement("anchor preimage does not return to the representative");
  }
  result.max_deviation = max_deviation(sys, spec, result.representative);
  if (result.max_deviation > spec.eps) {
    throw EmptyRefinement("representative deviates by " + format_rational(result.max_deviation) + " > eps");
  }
  return result;
}

// Appends a_{n+1} = b_n + N, b_{n+1} = a_{n+1} + m₁ whose window repeats
// segment 1's window (stored as an anchored segment).
template <class Point, class S>
SpecificationInstance<Point> periodic_extend(const S& sys, const SpecificationInstance<Point>& spec) {
  if (spec.segments.empty()) throw InvalidArgument("specification has no segments");
  if (auto bad = validate_spacing(spec)) {
    throw SpacingViolation("segment " + std::to_string(*bad) + " violates the gap " + std::to_string(spec.gap));
  }
  SpecificationInstance<Point> out = spec;
  const auto& first = spec.segments.front();
  OrbitSegment<Point> wrap;
  wrap.a = spec.segments.back().b + spec.gap;
  wrap.b = wrap.a + (first.b - first.a);
  wrap.x = window_start(sys, first);
  wrap.anchored = true;
  out.segments.push_back(std::move(wrap));
  return out;
}

// P = b_{n+1} − a₁ + N for the extended instance.
template <class Point>
int periodic_period(const SpecificationInstance<Point>& extended) {
  return extended.segments.back().b - extended.segments.front().a + extended.gap;
}

template <RegionSystem S>
ShadowResult<S> periodic_shadow(const S& sys, const SpecificationInstance<typename S::Point>& spec,
                                const ShadowOptions& options = {}) {
  ShadowResult<S> result;
  result.covering_time = detail::checked_covering_time(sys, spec, options);
  const auto extended = periodic_extend(sys, spec);
  result.certificate = detail::refine(sys, extended);
  const int period = periodic_period(extended);
  auto z = sys.periodic_point(result.certificate.back(), period);
  if (!z) {
    throw NoPeriodicPointInRegion("no fixed point of f^" + std::to_string(period) + " in the final region");
  }
  result.anchor_time = spec.segments.front().a;
  result.anchor_point = *z;
  // y = f^{(−a₁) mod P}(z) satisfies f^{a₁}y = z and f^P y = y.
  const int lead = ((-result.anchor_time) % period + period) % period;
  result.representative = iterate(sys, *z, lead);
  if (!sys.same_point(iterate(sys, result.representative, period), result.representative)) {
    throw NoPeriodicPointInRegion("candidate is not fixed by f^" + std::to_string(period));
  }
  result.period = period;
  result.max_deviation = max_deviation(sys, spec, result.representative);
  if (result.max_deviation > spec.eps) {
    throw EmptyRefinement("periodic representative deviates by " + format_rational(result.max_deviation) + " > eps");
  }
  return result;
}

}  // namespace leodyn::spec
