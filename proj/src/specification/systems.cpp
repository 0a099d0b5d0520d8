#include "leodyn/specification/systems.hpp"

#include <algorithm>
#include <functional>

#include "leodyn/interval/dynamics.hpp"
#include "leodyn/symbolic/dynamics.hpp"

namespace leodyn::spec {

using interval::Interval;
using interval::IntervalSet;
using symbolic::Symbol;
using symbolic::Word;

Rational IntervalSystem::distance(const Point& x, const Point& y) const {
  return interval::distance(x, y, map_.topology());
}

IntervalSet IntervalSystem::ball(const Point& x, const Rational& eps) const {
  return interval::ball(x, eps, map_.topology());
}

Rational IntervalSystem::representative(const Region& r) const {
  if (r.empty()) throw EmptyRefinement("no representative in an empty region");
  const Interval* best = &r.parts().front();
  for (const Interval& iv : r.parts()) {
    if (iv.length() > best->length()) best = &iv;
  }
  return simplest_between(best->lo, best->hi, best->lo_closed, best->hi_closed);
}

Rational IntervalSystem::preimage_point(const Point& x) const {
  IntervalSet pre = map_.preimage(IntervalSet{Interval::point(x)});
  if (pre.empty()) throw InvalidArgument("point " + format_rational(x) + " has no preimage");
  return pre.parts().front().lo;
}

std::optional<Rational> IntervalSystem::periodic_point(const Region& r, int period) const {
  if (period < 1) throw InvalidArgument("period must be positive");
  // Closed pieces [u,v] on which f^j acts as x ↦ s·x + c (affine
  // extensions of the branches to their closed domains).  The itinerary
  // tree is walked depth first with children in increasing x, so leaves
  // are met left to right and the first verified fixed point is the least.
  struct Piece {
    Rational u, v, s, c;
  };
  constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 22;
  std::uint64_t visited = 0;
  const IntervalSet hull = r.closure();
  const auto& branches = map_.pieces();

  auto accept = [&](const Piece& pc) -> std::optional<Rational> {
    Rational x;
    if (pc.s != 1) {
      x = pc.c / (1 - pc.s);
    } else if (pc.c == 0) {
      x = pc.u;
    } else {
      return std::nullopt;
    }
    if (x < pc.u || x > pc.v) return std::nullopt;
    if (x == 1 && map_.topology() == interval::Topology::circle) x = 0;
    if (x < 0 || x >= 1) return std::nullopt;
    try {
      if (interval::iterate(map_, x, period) == x && (hull.contains(x) || (x == 0 && hull.contains(Rational(1))))) {
        return x;
      }
    } catch (const ValueOutsideDomain&) {
    }
    return std::nullopt;
  };

  std::function<std::optional<Rational>(const Piece&, int)> walk = [&](const Piece& pc,
                                                                       int depth) -> std::optional<Rational> {
    if (++visited > kMaxNodes) throw TooLarge("periodic-point search exceeded the node cap");
    if (depth == period) return accept(pc);
    Rational y1 = pc.s * pc.u + pc.c;
    Rational y2 = pc.s * pc.v + pc.c;
    const Rational& y_lo = std::min(y1, y2);
    const Rational& y_hi = std::max(y1, y2);
    std::vector<Piece> children;
    for (const auto& br : branches) {
      Rational lo = std::max(y_lo, br.lo);
      Rational hi = std::min(y_hi, br.hi);
      if (lo > hi) continue;
      Rational x1 = (lo - pc.c) / pc.s;
      Rational x2 = (hi - pc.c) / pc.s;
      children.push_back({std::min(x1, x2), std::max(x1, x2), Rational(br.slope * pc.s),
                          Rational(br.slope * pc.c + br.intercept)});
    }
    if (pc.s < 0) std::reverse(children.begin(), children.end());
    for (const Piece& child : children) {
      if (auto x = walk(child, depth + 1)) return x;
    }
    return std::nullopt;
  };

  for (const Interval& iv : hull.parts()) {
    if (auto x = walk({iv.lo, iv.hi, Rational(1), Rational(0)}, 0)) return x;
  }
  return std::nullopt;
}

std::vector<Rational> IntervalSystem::net(const Rational& spacing) const {
  if (spacing <= 0) throw InvalidArgument("net spacing must be positive");
  std::vector<Rational> pts;
  for (Rational x = 0; x < 1; x += spacing) pts.push_back(x);
  return pts;
}

int ShiftSystem::ball_depth(const Rational& eps) {
  if (eps <= 0) throw BadRadius("radius must be positive");
  int m = 0;
  Rational scale = 1;
  while (scale > eps) {
    scale /= 2;
    ++m;
  }
  return m;
}

Rational ShiftSystem::distance(const Point& x, const Point& y) const {
  auto i = symbolic::first_difference(x, y);
  if (!i) return Rational(0);
  return pow2(-static_cast<long>(*i));
}

symbolic::CylinderSet ShiftSystem::ball(const Point& x, const Rational& eps) const {
  return symbolic::CylinderSet(space_, {x.take(static_cast<std::size_t>(ball_depth(eps)))});
}

symbolic::SequencePoint ShiftSystem::smallest_extension(const Word& w) const {
  Word stem = w;
  if (stem.empty()) stem.push_back(0);
  // Follow minimal successors from the last symbol until a symbol repeats:
  // walk = s0 s1 ... s_{L-1} and s_L = s_start closes the cycle.
  Word walk{stem.back()};
  stem.pop_back();
  std::vector<int> first_seen(static_cast<std::size_t>(space_.alphabet_size()), -1);
  first_seen[static_cast<std::size_t>(walk.back())] = 0;
  for (;;) {
    Symbol next = space_.successors(walk.back()).front();
    int seen = first_seen[static_cast<std::size_t>(next)];
    if (seen >= 0) {
      stem.insert(stem.end(), walk.begin(), walk.begin() + seen);
      Word cycle(walk.begin() + seen, walk.end());
      return Point{stem, cycle}.normalized();
    }
    first_seen[static_cast<std::size_t>(next)] = static_cast<int>(walk.size());
    walk.push_back(next);
  }
}

symbolic::SequencePoint ShiftSystem::representative(const Region& r) const {
  if (r.empty()) throw EmptyRefinement("no representative in an empty region");
  std::optional<Point> best;
  std::optional<Word> best_word;
  for (const Word& w : r.words()) {
    Point p = smallest_extension(w);
    const std::size_t horizon = w.size() + 2 * static_cast<std::size_t>(space_.alphabet_size()) + 2;
    Word key = p.take(horizon);
    if (!best_word || key < *best_word) {
      best_word = key;
      best = p;
    }
  }
  return *best;
}

symbolic::SequencePoint ShiftSystem::preimage_point(const Point& x) const {
  const auto& preds = space_.predecessors(x.at(0));
  if (preds.empty()) throw InvalidArgument("sequence has no preimage");
  Word prefix{preds.front()};
  prefix.insert(prefix.end(), x.prefix.begin(), x.prefix.end());
  return Point{prefix, x.cycle}.normalized();
}

std::optional<symbolic::SequencePoint> ShiftSystem::periodic_point(const Region& r, int period) const {
  if (period < 1) throw InvalidArgument("period must be positive");
  const auto n = static_cast<std::size_t>(space_.alphabet_size());
  const auto p = static_cast<std::size_t>(period);
  // reach[k][a][b]: a path of exactly k steps from a to b.
  std::vector<std::vector<std::vector<char>>> reach(p + 1, std::vector<std::vector<char>>(n, std::vector<char>(n, 0)));
  for (std::size_t a = 0; a < n; ++a) reach[0][a][a] = 1;
  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!reach[k - 1][a][b]) continue;
        for (Symbol c : space_.successors(static_cast<Symbol>(b))) reach[k][a][static_cast<std::size_t>(c)] = 1;
      }
    }
  }
  std::optional<Word> best;
  for (const Word& w : r.words()) {
    // Fold the word onto one period; conflicting symbols rule it out.
    std::vector<int> fixed(p, -1);
    bool consistent = true;
    for (std::size_t i = 0; i < w.size() && consistent; ++i) {
      int& slot = fixed[i % p];
      if (slot >= 0 && slot != w[i]) consistent = false;
      slot = w[i];
    }
    if (!consistent) continue;
    // Greedy smallest completion: each position takes the least symbol from
    // which the next constrained position (cyclically, position 0) stays
    // reachable.  The first symbol is tried in increasing order.
    auto complete = [&](Symbol head) -> std::optional<Word> {
      Word u(p);
      u[0] = head;
      for (std::size_t i = 0; i < p; ++i) {
        std::vector<Symbol> options;
        if (i == 0) {
          options = {head};
        } else if (fixed[i] >= 0) {
          options = {fixed[i]};
        } else {
          options = space_.successors(u[i - 1]);
        }
        std::size_t j = i + 1;
        while (j < p && fixed[j] < 0) ++j;
        bool placed = false;
        for (Symbol s : options) {
          if (i > 0 && !space_.allows(u[i - 1], s)) continue;
          bool feasible = j < p ? reach[j - i][static_cast<std::size_t>(s)][static_cast<std::size_t>(fixed[j])]
                                : reach[p - i][static_cast<std::size_t>(s)][static_cast<std::size_t>(head)];
          if (feasible) {
            u[i] = s;
            placed = true;
            break;
          }
        }
        if (!placed) return std::nullopt;
      }
      return u;
    };
    std::optional<Word> found;
    for (Symbol head = 0; head < static_cast<Symbol>(n) && !found; ++head) {
      if (fixed[0] >= 0 && head != fixed[0]) continue;
      found = complete(head);
    }
    bool ok = found.has_value();
    Word u = ok ? *found : Word{};
    if (ok && (!best || u < *best)) best = u;
  }
  if (!best) return std::nullopt;
  return Point{{}, *best}.normalized();
}

std::vector<symbolic::SequencePoint> ShiftSystem::net(const Rational& spacing) const {
  std::vector<Point> pts;
  for (const Word& w : symbolic::allowed_words(space_, static_cast<std::size_t>(ball_depth(spacing)))) {
    pts.push_back(smallest_extension(w));
  }
  return pts;
}

}  // namespace leodyn::spec
