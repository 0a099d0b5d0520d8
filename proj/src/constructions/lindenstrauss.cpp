#include "leodyn/constructions/lindenstrauss.hpp"

#include <algorithm>
#include <bit>

#include "leodyn/core/errors.hpp"

namespace leodyn::constructions {

Letters pi_suppress(const Letters& w) {
  Letters out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] > 2) throw MalformedWord("letter " + std::to_string(w[i]) + " outside {0,1,2}");
    if (w[i] == 0) {
      if (i + 1 < w.size() && w[i + 1] == 0) {
        throw ConsecutiveZeros("consecutive 0's at index " + std::to_string(i));
      }
      continue;
    }
    out.push_back(w[i]);
  }
  return out;
}

Letters thue_morse(std::size_t length) {
  Letters t(length);
  for (std::size_t i = 0; i < length; ++i) t[i] = 1 + std::popcount(static_cast<unsigned long long>(i)) % 2;
  return t;
}

LanguageOracle thue_morse_oracle() {
  return [](const Letters& w, std::size_t depth) {
    if (w.empty()) return true;
    const Letters t = thue_morse(depth);
    return std::search(t.begin(), t.end(), w.begin(), w.end()) != t.end();
  };
}

MembershipResult lindenstrauss_membership(const Letters& w, const LanguageOracle& oracle, std::size_t depth) {
  Letters suppressed;
  try {
    suppressed = pi_suppress(w);
  } catch (const ConsecutiveZeros& e) {
    return {Membership::rejected, e.what()};
  } catch (const MalformedWord& e) {
    return {Membership::rejected, e.what()};
  }
  if (!oracle(suppressed, depth)) {
    return {Membership::rejected, "suppressed word is not a factor at depth " + std::to_string(depth)};
  }
  return {Membership::consistent, ""};
}

}  // namespace leodyn::constructions
