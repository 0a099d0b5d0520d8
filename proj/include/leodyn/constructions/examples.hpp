#pragma once
// The replicated fold map and the map with an invariant subinterval.

#include "leodyn/interval/affine_map.hpp"

namespace leodyn::constructions {

struct ReplicatedMap {
  interval::PiecewiseAffineMap map;
  int levels = 0;                    // copies n = 0..levels
  std::size_t replicated_pieces = 0;  // 3 per copy
  Rational tail_start;               // identity on [tail_start, 1)
};

// The base fold f₀ on [0,1/2): 3x, −3x+1, 3x−1 on thirds of [0,1/2),
// copied onto (1−2^{−n}, 1−2^{−(n+1)}] by
//   f(x) = 1 − 2^{−n} + 2^{−n} f₀(2ⁿ(x − 1 + 2^{−n}))
// for n = 0..levels.  The infinitely many copies accumulating at 1 are
// truncated: the identity closes the table on [1 − 2^{−(levels+1)}, 1).
ReplicatedMap replicated_fold_map(int levels);

// 3x on [0,1/3), −2x + 5/3 on [1/3,2/3), 2x − 1 on [2/3,1).  The value at
// 1/3 is 1, outside [0,1); evaluation there throws ValueOutsideDomain.
interval::PiecewiseAffineMap invariant_interval_map();

// image([1/3,1)) = [1/3,1).
bool verify_invariant(const interval::PiecewiseAffineMap& f);

}  // namespace leodyn::constructions
