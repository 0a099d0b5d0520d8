#pragma once
// Shared helpers for the test suites: seeded generators and brute-force
// membership oracles that do not go through IntervalSet algebra.

#include <random>
#include <vector>

#include "leodyn/interval/interval_set.hpp"
#include "leodyn/specification/specification.hpp"

namespace testsupport {

using leodyn::Rational;
using leodyn::interval::Interval;
using leodyn::interval::IntervalSet;

inline Rational q(long n, long d) { return leodyn::ratio(n, d); }

// Random intervals with endpoints k/den inside [0,1] and random flags.
inline std::vector<Interval> random_intervals(std::mt19937_64& rng, int count, long den) {
  std::uniform_int_distribution<long> endpoint(0, den);
  std::bernoulli_distribution flag(0.5);
  std::vector<Interval> out;
  for (int i = 0; i < count; ++i) {
    long a = endpoint(rng);
    long b = endpoint(rng);
    if (a > b) std::swap(a, b);
    Interval iv{q(a, den), q(b, den), flag(rng), flag(rng)};
    if (b == den) iv.hi_closed = false;
    out.push_back(iv);
  }
  return out;
}

inline bool raw_contains(const std::vector<Interval>& parts, const Rational& x) {
  for (const Interval& iv : parts) {
    if (iv.contains(x)) return true;
  }
  return false;
}

// Probe points: all multiples of 1/(4·den) in [0,1) — hits every endpoint,
// every gap interior and every single-point component.
inline std::vector<Rational> probes(long den) {
  std::vector<Rational> pts;
  for (long k = 0; k < 4 * den; ++k) pts.push_back(q(k, 4 * den));
  return pts;
}

// Random N-spaced specification on [0,1): up to max_segments windows of
// length <= max_length, spaced by gap + (0..2), rational base points.
inline leodyn::spec::SpecificationInstance<Rational> random_spec(std::mt19937_64& rng, int max_segments,
                                                                 int max_length, int gap, const Rational& eps) {
  std::uniform_int_distribution<int> count(1, max_segments);
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> extra(0, 2);
  std::uniform_int_distribution<int> start(0, 3);
  std::uniform_int_distribution<long> den(1, 97);
  leodyn::spec::SpecificationInstance<Rational> spec;
  spec.gap = gap;
  spec.eps = eps;
  int t = start(rng);
  for (int i = count(rng); i > 0; --i) {
    long d = den(rng);
    std::uniform_int_distribution<long> num(0, d - 1);
    leodyn::spec::OrbitSegment<Rational> seg;
    seg.a = t;
    seg.b = t + length(rng);
    seg.x = q(num(rng), d);
    spec.segments.push_back(seg);
    t = seg.b + gap + extra(rng);
  }
  return spec;
}

}  // namespace testsupport
