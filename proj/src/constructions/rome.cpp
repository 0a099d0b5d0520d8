#include "leodyn/constructions/rome.hpp"

#include <string>

#include "leodyn/core/errors.hpp"

namespace leodyn::constructions {

namespace {

void require_binary(const Bits& w) {
  for (int b : w) {
    if (b != 0 && b != 1) throw MalformedWord("symbol " + std::to_string(b) + " is not binary");
  }
}

}  // namespace

int rome_return_time(const Bits& prefix) {
  require_binary(prefix);
  if (prefix.empty() || prefix.front() != 0) throw MalformedWord("return times need a prefix starting with 0");
  for (std::size_t k = 1; k < prefix.size(); ++k) {
    if (prefix[k] == 0) return static_cast<int>(k);
  }
  throw NoReturnInPrefix("no 0 after index 0 in a prefix of length " + std::to_string(prefix.size()));
}

Bits RomeWord::bits() const {
  Bits w(static_cast<std::size_t>(n) + 2, 1);
  w.front() = 0;
  w.back() = 0;
  return w;
}

RomeWord rome_encode(int n) {
  if (n < 0) throw InvalidArgument("rome_encode needs n >= 0");
  return RomeWord{n};
}

int rome_decode(const Bits& w) {
  require_binary(w);
  if (w.size() < 2 || w.front() != 0 || w.back() != 0) throw MalformedWord("a Rome word has the form 0 1^n 0");
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i] != 1) throw MalformedWord("a Rome word has the form 0 1^n 0");
  }
  return static_cast<int>(w.size()) - 2;
}

Bits rome_embed(const std::vector<int>& symbols) {
  Bits out{0};
  for (int v : symbols) {
    if (v < 0) throw InvalidArgument("symbols must be non-negative");
    out.insert(out.end(), static_cast<std::size_t>(v), 1);
    out.push_back(0);
  }
  return out;
}

std::vector<int> rome_parse(const Bits& bits) {
  require_binary(bits);
  if (bits.empty() || bits.front() != 0 || bits.back() != 0) throw MalformedWord("coding must start and end with 0");
  std::vector<int> symbols;
  std::size_t i = 0;
  while (i + 1 < bits.size()) {
    int t = rome_return_time(Bits(bits.begin() + static_cast<long>(i), bits.end()));
    symbols.push_back(t - 1);
    i += static_cast<std::size_t>(t);
  }
  return symbols;
}

}  // namespace leodyn::constructions
