#include "leodyn/specification/witness.hpp"

#include <algorithm>
#include <set>

namespace leodyn::spec {

using symbolic::SequencePoint;
using symbolic::ShiftSpace;
using symbolic::Symbol;

FailureWitness spec_failure_witness(const ShiftSpace& space, int gap) {
  if (space.kind() != ShiftSpace::Kind::countdown_graph) {
    throw NotApplicable("failure witnesses exist only for the countdown graph shift, not " + space.describe());
  }
  if (gap < 1) throw InvalidArgument("gap must be at least 1");
  if (space.truncation() < gap + 2) {
    throw TruncationTooSmall("truncation " + std::to_string(space.truncation()) + " is below N + 2 = " +
                             std::to_string(gap + 2));
  }
  FailureWitness w;
  w.gap = gap;
  w.start_symbol = gap + 2;
  w.eps = ratio(1, 4);

  std::set<Symbol> frontier{w.start_symbol};
  w.reachable.emplace_back(frontier.begin(), frontier.end());
  for (int t = 1; t <= gap; ++t) {
    std::set<Symbol> next;
    for (Symbol s : frontier) {
      for (Symbol c : space.successors(s)) next.insert(c);
    }
    frontier = std::move(next);
    w.reachable.emplace_back(frontier.begin(), frontier.end());
  }
  const auto& last = w.reachable.back();
  w.target_unreachable = !std::binary_search(last.begin(), last.end(), w.target_symbol);

  // Segment 1: n n n ... at time 0; segment 2: 0^N 1 0^∞ observed at time N
  // (so its orbit starts with symbol 1 there).
  SequencePoint x1{{}, {w.start_symbol}};
  symbolic::Word prefix(static_cast<std::size_t>(gap), 0);
  prefix.push_back(1);
  SequencePoint x2{prefix, {0}};
  w.spec.gap = gap;
  w.spec.eps = w.eps;
  w.spec.segments = {{0, 0, x1, false}, {gap, gap, x2, false}};
  return w;
}

}  // namespace leodyn::spec
