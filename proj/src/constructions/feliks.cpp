#include "leodyn/constructions/feliks.hpp"

#include <algorithm>
#include <random>

#include "leodyn/core/errors.hpp"
#include "leodyn/interval/dynamics.hpp"

namespace leodyn::constructions {

using interval::IntervalSet;
using interval::Topology;

namespace {

const interval::PiecewiseAffineMap& doubling() {
  static const interval::PiecewiseAffineMap f = interval::doubling_map();
  return f;
}

// Components on the circle: the parts touching 0 and 1 form one arc.
std::size_t arc_count(const IntervalSet& s) {
  const auto& parts = s.parts();
  if (parts.size() >= 2 && parts.front().lo == 0 && parts.front().lo_closed && parts.back().hi == 1) {
    return parts.size() - 1;
  }
  return parts.size();
}

}  // namespace

int least_period(const Rational& x) {
  if (x < 0 || x >= 1) throw PointOutsideDomain("point outside [0,1)");
  if (mpz_even_p(x.get_den_mpz_t()) != 0) throw InvalidArgument(format_rational(x) + " is not periodic");
  Rational y = x;
  for (int p = 1;; ++p) {
    y = doubling()(y);
    if (y == x) return p;
  }
}

namespace {

constexpr int kMaxListedPeriod = 40;

// Calls visit(x) for the points of least period exactly p in ascending
// order, stopping early when visit returns true.  k/(2^p − 1) has least
// period d | p iff (2^p − 1)/(2^d − 1) divides k.
template <class Visit>
bool for_each_least_period(int p, Visit&& visit) {
  const unsigned long long den = (1ULL << p) - 1;
  std::vector<unsigned long long> proper;
  for (int d = 1; d < p; ++d) {
    if (p % d == 0) proper.push_back(den / ((1ULL << d) - 1));
  }
  for (unsigned long long k = 0; k < den; ++k) {
    bool shorter = false;
    for (unsigned long long q : proper) shorter = shorter || k % q == 0;
    if (shorter && p > 1) continue;
    Rational x{BigInt(static_cast<unsigned long>(k)), BigInt(static_cast<unsigned long>(den))};
    x.canonicalize();
    if (visit(x)) return true;
  }
  return false;
}

}  // namespace

std::vector<Rational> periodic_points(int p) {
  if (p < 1) throw InvalidArgument("period must be positive");
  if (p > 24) throw TooLarge("periodic point listing limited to p <= 24");
  std::vector<Rational> out;
  for (int d = 1; d <= p; ++d) {
    if (p % d) continue;
    for_each_least_period(d, [&](const Rational& x) {
      out.push_back(x);
      return false;
    });
  }
  return out;
}

std::vector<Rational> enumerate_periodic_points(int max_period) {
  if (max_period > 24) throw TooLarge("periodic point listing limited to periods <= 24");
  std::vector<Rational> out;
  for (int p = 1; p <= max_period; ++p) {
    for_each_least_period(p, [&](const Rational& x) {
      out.push_back(x);
      return false;
    });
  }
  return out;
}

std::pair<IntervalSet, std::size_t> removal_set(const Rational& q, const Rational& radius, int depth) {
  IntervalSet generation = interval::ball(q, radius, Topology::circle);
  IntervalSet total = generation;
  std::size_t pieces = arc_count(generation);
  for (int j = 1; j <= depth; ++j) {
    generation = doubling().preimage(generation);
    pieces += arc_count(generation);
    total = total.unite(generation);
  }
  return {total, pieces};
}

namespace {

// Does the (finite) orbit of periodic x avoid every ball of the ledger?
bool orbit_avoids(const Rational& x, const std::vector<LedgerEntry>& ledger) {
  Rational y = x;
  do {
    for (const LedgerEntry& e : ledger) {
      if (interval::distance(y, e.point, Topology::circle) < e.radius) return false;
    }
    y = doubling()(y);
  } while (y != x);
  return true;
}

}  // namespace

CantorApprox feliks_cantor(int level, int depth, const Rational& zeta0, const Rational& ratio, int max_period) {
  if (level < 0 || depth < 0) throw InvalidArgument("level and depth must be non-negative");
  if (zeta0 <= 0 || zeta0 > leodyn::ratio(1, 2)) throw BadRadius("zeta0 must lie in (0,1/2]");
  if (ratio <= 0 || ratio >= 1) throw InvalidArgument("radius ratio must lie in (0,1)");
  CantorApprox approx;
  approx.level = level;
  approx.depth = depth;
  approx.zeta0 = zeta0;
  approx.ratio = ratio;
  approx.max_period = max_period;
  approx.remaining = IntervalSet::unit();

  if (max_period < 1 || max_period > kMaxListedPeriod) throw InvalidArgument("max_period must lie in [1,40]");
  std::size_t cursor = 0;  // enumeration indices below this were used or skipped
  Rational radius = zeta0;
  for (int i = 0; i <= level; ++i) {
    std::optional<std::pair<std::size_t, Rational>> pick;
    std::size_t index = 0;
    for (int p = 1; p <= max_period && !pick; ++p) {
      for_each_least_period(p, [&](const Rational& x) {
        const std::size_t n = index++;
        if (n >= cursor && orbit_avoids(x, approx.ledger)) {
          pick.emplace(n, x);
          return true;
        }
        return false;
      });
    }
    if (!pick) {
      throw EmptyRemainder("no periodic point of period <= " + std::to_string(max_period) + " survives level " +
                           std::to_string(i));
    }
    const Rational q = pick->second;
    auto [removed, pieces] = removal_set(q, radius, depth);
    approx.remaining = approx.remaining.subtract(removed);
    approx.ledger.push_back({q, radius, pick->first, least_period(q), pieces});
    if (approx.remaining.empty()) throw EmptyRemainder("remaining set vanished at level " + std::to_string(i));
    cursor = pick->first + 1;
    radius *= ratio;
  }
  return approx;
}

IntervalSet remaining_at_depth(const CantorApprox& approx, int depth) {
  IntervalSet r = IntervalSet::unit();
  for (const LedgerEntry& e : approx.ledger) r = r.subtract(removal_set(e.point, e.radius, std::max(depth, 0)).first);
  return r;
}

bool FeliksReport::covering_holds() const {
  return std::all_of(covering.begin(), covering.end(),
                     [](const CoveringSample& s) { return s.contains_remaining && s.within_shallower; });
}

FeliksReport feliks_verify(const CantorApprox& approx, int max_period, int covering_n, int samples,
                           std::uint64_t seed) {
  FeliksReport report;
  const IntervalSet& r = approx.remaining;
  const std::size_t scope = approx.ledger.empty() ? 0 : approx.ledger.back().enumeration_index;
  const std::vector<Rational> enumeration = enumerate_periodic_points(std::max(max_period, 1));
  for (std::size_t n = 0; n < enumeration.size(); ++n) {
    if (!r.contains(enumeration[n])) continue;
    report.surviving_periodic.push_back(enumeration[n]);
    if (n <= scope) report.scope_survivors.push_back(enumeration[n]);
  }

  const IntervalSet image = doubling().image(r);
  report.invariance_defect = interval::hausdorff_distance(image, r, Topology::circle);
  report.slack_measure = image.subtract(r).measure();
  Rational deepest = 0;
  for (const LedgerEntry& e : approx.ledger) {
    deepest += interval::preimage_n(doubling(), interval::ball(e.point, e.radius, Topology::circle), approx.depth)
                   .measure();
  }
  report.deepest_generation_measure = deepest;

  report.covering_n = covering_n;
  report.covering_eps = pow2(-covering_n);
  if (r.empty() || samples <= 0) return report;
  const IntervalSet shallower = remaining_at_depth(approx, approx.depth - covering_n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_part(0, r.size() - 1);
  std::uniform_int_distribution<long> pick_offset(1, (1L << 20) - 1);
  for (int s = 0; s < samples; ++s) {
    const interval::Interval& part = r.parts()[pick_part(rng)];
    Rational x = part.lo + (part.hi - part.lo) * leodyn::ratio(pick_offset(rng), 1L << 20);
    if (part.lo == part.hi) x = part.lo;
    IntervalSet local = interval::ball(x, report.covering_eps, Topology::circle).intersect(r);
    IntervalSet pushed = interval::image_n(doubling(), local, covering_n);
    report.covering.push_back({x, pushed.includes(r), shallower.includes(pushed), pushed == shallower});
  }
  return report;
}

}  // namespace leodyn::constructions
