#include "leodyn/constructions/examples.hpp"

#include "leodyn/core/errors.hpp"

namespace leodyn::constructions {

using interval::AffineBranch;
using interval::IntervalSet;
using interval::PiecewiseAffineMap;
using interval::Topology;

ReplicatedMap replicated_fold_map(int levels) {
  if (levels < 0) throw InvalidArgument("replication levels must be non-negative");
  // f₀ on thirds of [0,1/2).
  const std::vector<AffineBranch> base{
      {Rational(0), ratio(1, 6), Rational(3), Rational(0)},
      {ratio(1, 6), ratio(1, 3), Rational(-3), Rational(1)},
      {ratio(1, 3), ratio(1, 2), Rational(3), Rational(-1)},
  };
  std::vector<AffineBranch> branches;
  for (int n = 0; n <= levels; ++n) {
    const Rational scale = pow2(-n);      // 2^{-n}
    const Rational shift = 1 - scale;     // 1 − 2^{-n}
    for (const AffineBranch& b : base) {
      // x = shift + scale·t maps t ∈ [b.lo, b.hi) onto the copy; the value is
      // shift + scale·(slope·t + intercept) with t = (x − shift)/scale.
      AffineBranch c;
      c.lo = shift + scale * b.lo;
      c.hi = shift + scale * b.hi;
      c.slope = b.slope;
      c.intercept = shift + scale * b.intercept - b.slope * shift;
      branches.push_back(c);
    }
  }
  ReplicatedMap out{PiecewiseAffineMap({{Rational(0), Rational(1), Rational(1), Rational(0)}}, Topology::interval),
                    levels, branches.size(), Rational(1 - pow2(-(levels + 1)))};
  branches.push_back({out.tail_start, Rational(1), Rational(1), Rational(0)});
  out.map = PiecewiseAffineMap(std::move(branches), Topology::interval);
  return out;
}

PiecewiseAffineMap invariant_interval_map() {
  return PiecewiseAffineMap({{Rational(0), ratio(1, 3), Rational(3), Rational(0)},
                             {ratio(1, 3), ratio(2, 3), Rational(-2), ratio(5, 3)},
                             {ratio(2, 3), Rational(1), Rational(2), Rational(-1)}},
                            Topology::interval);
}

bool verify_invariant(const PiecewiseAffineMap& f) {
  const IntervalSet upper = IntervalSet::half_open(ratio(1, 3), Rational(1));
  return f.image(upper) == upper;
}

}  // namespace leodyn::constructions
