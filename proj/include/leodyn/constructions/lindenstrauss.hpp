#pragma once
// Words over {0,1,2} with no two consecutive 0's, mapped onto a minimal
// subshift over {1,2} by deleting the 0's.

#include <functional>
#include <string>
#include <vector>

namespace leodyn::constructions {

using Letters = std::vector<int>;

// Deletes every 0.  Throws MalformedWord for letters outside {0,1,2} and
// ConsecutiveZeros for a factor (0,0).
Letters pi_suppress(const Letters& w);

// t_i = 1 + (popcount(i) mod 2): 1 2 2 1 2 1 1 2 …
Letters thue_morse(std::size_t length);

// Language oracle: is w a factor of the subshift, checked on a prefix of
// the given length?
using LanguageOracle = std::function<bool(const Letters& w, std::size_t depth)>;

LanguageOracle thue_morse_oracle();

enum class Membership { consistent, rejected };

struct MembershipResult {
  Membership verdict = Membership::rejected;
  std::string reason;
};

// consistent iff w has no consecutive 0's and its suppression is a factor
// of the oracle's language at the given depth.
MembershipResult lindenstrauss_membership(const Letters& w, const LanguageOracle& oracle = thue_morse_oracle(),
                                          std::size_t depth = 1024);

}  // namespace leodyn::constructions
