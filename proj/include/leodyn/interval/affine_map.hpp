#pragma once
// Piecewise-affine self-maps of [0,1), read either as an interval map or as a
// circle map (where 1 is identified with 0).

#include <vector>

#include "leodyn/core/rational.hpp"
#include "leodyn/interval/interval_set.hpp"

namespace leodyn::interval {

enum class Topology { interval, circle };

const char* to_string(Topology t);
Topology parse_topology(const std::string& name);

// x ↦ slope·x + intercept on the half-open domain [lo, hi).
struct AffineBranch {
  Rational lo;
  Rational hi;
  Rational slope;
  Rational intercept;

  friend bool operator==(const AffineBranch& a, const AffineBranch& b) {
    return a.lo == b.lo && a.hi == b.hi && a.slope == b.slope && a.intercept == b.intercept;
  }
};

class PiecewiseAffineMap {
 public:
  // Validates the branch table and throws InvalidMap when it does not
  // partition [0,1), a slope is zero, or a branch leaves [0,1].
  // With reduce_mod_one each output is taken mod 1; such branches must be
  // increasing.
  PiecewiseAffineMap(std::vector<AffineBranch> branches, Topology topology, bool reduce_mod_one = false);

  const std::vector<AffineBranch>& branches() const { return branches_; }
  // The branch table after splitting reduce_mod_one branches at integer
  // crossings: every piece is a plain affine map into [0,1].
  const std::vector<AffineBranch>& pieces() const { return pieces_; }
  Topology topology() const { return topology_; }
  bool reduces_mod_one() const { return reduce_mod_one_; }

  // Throws PointOutsideDomain for x ∉ [0,1).  A decreasing branch may reach
  // the value 1 at its left endpoint; on the circle that is 0, on the
  // interval it throws ValueOutsideDomain.
  Rational operator()(const Rational& x) const;
  const AffineBranch& piece_at(const Rational& x) const;

  IntervalSet image(const IntervalSet& s) const;
  IntervalSet preimage(const IntervalSet& s) const;

  Rational min_abs_slope() const;

  friend bool operator==(const PiecewiseAffineMap& a, const PiecewiseAffineMap& b) {
    return a.branches_ == b.branches_ && a.topology_ == b.topology_ && a.reduce_mod_one_ == b.reduce_mod_one_;
  }

 private:
  std::vector<AffineBranch> branches_;
  std::vector<AffineBranch> pieces_;
  Topology topology_;
  bool reduce_mod_one_;
};

// x ↦ 2x mod 1 on the circle.
PiecewiseAffineMap doubling_map();
// T_β(x) = βx − ⌊βx⌋ on [0,1) with interval topology.
PiecewiseAffineMap beta_map(const Rational& beta);
PiecewiseAffineMap identity_map(Topology topology);

}  // namespace leodyn::interval
