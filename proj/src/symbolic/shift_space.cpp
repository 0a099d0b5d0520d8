#include "leodyn/symbolic/shift_space.hpp"

#include <algorithm>
#include <numeric>

#include "leodyn/core/errors.hpp"

namespace leodyn::symbolic {

std::string to_string(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

ShiftSpace::ShiftSpace(Kind kind, std::vector<std::vector<Symbol>> successors)
    : kind_(kind), successors_(std::move(successors)), predecessors_(successors_.size()) {
  if (successors_.empty()) throw InvalidArgument("shift space needs a nonempty alphabet");
  for (std::size_t s = 0; s < successors_.size(); ++s) {
    auto& row = successors_[s];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (row.empty()) throw InvalidArgument("symbol " + std::to_string(s) + " has no successor");
    for (Symbol t : row) {
      if (t < 0 || t >= static_cast<Symbol>(successors_.size())) {
        throw SymbolOutOfAlphabet("successor " + std::to_string(t) + " outside the alphabet");
      }
      predecessors_[static_cast<std::size_t>(t)].push_back(static_cast<Symbol>(s));
    }
  }
}

ShiftSpace ShiftSpace::finite_type(std::vector<std::vector<int>> matrix) {
  const std::size_t n = matrix.size();
  std::vector<std::vector<Symbol>> succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw InvalidArgument("transition matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] != 0 && matrix[i][j] != 1) throw InvalidArgument("transition matrix entries must be 0 or 1");
      if (matrix[i][j]) succ[i].push_back(static_cast<Symbol>(j));
    }
  }
  return ShiftSpace(Kind::finite_type, std::move(succ));
}

ShiftSpace ShiftSpace::full_shift(int symbols) {
  if (symbols < 1) throw InvalidArgument("full shift needs at least one symbol");
  return finite_type(std::vector<std::vector<int>>(static_cast<std::size_t>(symbols),
                                                   std::vector<int>(static_cast<std::size_t>(symbols), 1)));
}

ShiftSpace ShiftSpace::golden_mean() { return finite_type({{1, 1}, {1, 0}}); }

ShiftSpace ShiftSpace::fixed_point() { return finite_type({{1}}); }

ShiftSpace ShiftSpace::countdown_graph(int truncation) {
  if (truncation < 1) throw InvalidArgument("countdown graph truncation must be at least 1");
  std::vector<std::vector<Symbol>> succ(static_cast<std::size_t>(truncation) + 1);
  for (Symbol s = 0; s <= truncation; ++s) {
    auto& row = succ[static_cast<std::size_t>(s)];
    if (s == 0) {
      row.resize(static_cast<std::size_t>(truncation) + 1);
      std::iota(row.begin(), row.end(), 0);
    } else {
      row = {s - 1, s};
    }
  }
  return ShiftSpace(Kind::countdown_graph, std::move(succ));
}

bool ShiftSpace::allows(Symbol from, Symbol to) const {
  if (!in_alphabet(from) || !in_alphabet(to)) {
    throw SymbolOutOfAlphabet("symbol outside alphabet of size " + std::to_string(alphabet_size()));
  }
  const auto& row = successors_[static_cast<std::size_t>(from)];
  return std::binary_search(row.begin(), row.end(), to);
}

const std::vector<Symbol>& ShiftSpace::successors(Symbol s) const {
  if (!in_alphabet(s)) throw SymbolOutOfAlphabet("symbol " + std::to_string(s) + " outside the alphabet");
  return successors_[static_cast<std::size_t>(s)];
}

const std::vector<Symbol>& ShiftSpace::predecessors(Symbol s) const {
  if (!in_alphabet(s)) throw SymbolOutOfAlphabet("symbol " + std::to_string(s) + " outside the alphabet");
  return predecessors_[static_cast<std::size_t>(s)];
}

std::vector<std::vector<int>> ShiftSpace::matrix() const {
  const std::size_t n = successors_.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (Symbol t : successors_[i]) m[i][static_cast<std::size_t>(t)] = 1;
  }
  return m;
}

std::string ShiftSpace::describe() const {
  if (kind_ == Kind::countdown_graph) return "countdown-graph(M=" + std::to_string(truncation()) + ")";
  return "sft(" + std::to_string(alphabet_size()) + " symbols)";
}

Symbol SequencePoint::at(std::size_t i) const {
  if (cycle.empty()) throw InvalidArgument("sequence point needs a nonempty cycle");
  if (i < prefix.size()) return prefix[i];
  return cycle[(i - prefix.size()) % cycle.size()];
}

Word SequencePoint::take(std::size_t n) const {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i);
  return w;
}

SequencePoint SequencePoint::shifted() const {
  if (!prefix.empty()) return {Word(prefix.begin() + 1, prefix.end()), cycle};
  Word rotated(cycle.begin() + 1, cycle.end());
  rotated.push_back(cycle.front());
  return {{}, rotated};
}

SequencePoint SequencePoint::normalized() const {
  if (cycle.empty()) throw InvalidArgument("sequence point needs a nonempty cycle");
  Word c = cycle;
  for (std::size_t len = 1; len <= c.size(); ++len) {
    if (c.size() % len) continue;
    bool repeats = true;
    for (std::size_t i = len; i < c.size() && repeats; ++i) repeats = c[i] == c[i - len];
    if (repeats) {
      c.resize(len);
      break;
    }
  }
  Word p = prefix;
  while (!p.empty() && p.back() == c.back()) {
    std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
    p.pop_back();
  }
  return {p, c};
}

bool operator==(const SequencePoint& a, const SequencePoint& b) {
  SequencePoint x = a.normalized();
  SequencePoint y = b.normalized();
  return x.prefix == y.prefix && x.cycle == y.cycle;
}

std::string to_string(const SequencePoint& p) {
  std::string out;
  for (Symbol s : p.prefix) out += std::to_string(s) + " ";
  out += "(";
  for (std::size_t i = 0; i < p.cycle.size(); ++i) out += (i ? " " : "") + std::to_string(p.cycle[i]);
  return out + ")^inf";
}

std::optional<std::size_t> first_difference(const SequencePoint& a, const SequencePoint& b) {
  const std::size_t horizon = std::max(a.prefix.size(), b.prefix.size()) + std::lcm(a.cycle.size(), b.cycle.size());
  for (std::size_t i = 0; i < horizon; ++i) {
    if (a.at(i) != b.at(i)) return i;
  }
  return std::nullopt;
}

bool is_allowed_point(const ShiftSpace& space, const SequencePoint& p) {
  const std::size_t horizon = p.prefix.size() + p.cycle.size() + 1;
  for (std::size_t i = 0; i < horizon; ++i) {
    if (!space.in_alphabet(p.at(i))) return false;
    if (!space.in_alphabet(p.at(i + 1)) || !space.allows(p.at(i), p.at(i + 1))) return false;
  }
  return true;
}

}  // namespace leodyn::symbolic
