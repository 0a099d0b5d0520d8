#pragma once
// First-return coding of the countdown graph shift into binary sequences:
// a symbol n becomes the block 0 1ⁿ 0, consecutive blocks sharing their
// separating 0.

#include <vector>

namespace leodyn::constructions {

using Bits = std::vector<int>;

// τ(x) = inf{k >= 1 : x_k = 0} for a prefix starting with 0.  Throws
// MalformedWord when the prefix does not start with 0 or contains a
// non-binary symbol, NoReturnInPrefix when no later 0 occurs.
int rome_return_time(const Bits& prefix);

struct RomeWord {
  int n = 0;
  Bits bits() const;  // (0, 1ⁿ, 0)
  friend bool operator==(const RomeWord&, const RomeWord&) = default;
};

RomeWord rome_encode(int n);
// Inverse of rome_encode; throws MalformedWord unless w = (0, 1ⁿ, 0).
int rome_decode(const Bits& w);

// (v₀, v₁, …) ↦ 0 1^{v₀} 0 1^{v₁} 0 …
Bits rome_embed(const std::vector<int>& symbols);
// Inverse of rome_embed on complete codings.
std::vector<int> rome_parse(const Bits& bits);

}  // namespace leodyn::constructions
