#pragma once
// Exact obstruction to the specification property on the countdown graph
// shift: from symbol n = N+2 the symbol 1 cannot be reached in N steps.

#include <vector>

#include "leodyn/specification/specification.hpp"
#include "leodyn/symbolic/shift_space.hpp"

namespace leodyn::spec {

struct FailureWitness {
  int gap = 0;           // N
  int start_symbol = 0;  // n = N + 2
  int target_symbol = 1;
  Rational eps;          // 1/4: shadowing pins the first symbol of each window
  SpecificationInstance<symbolic::SequencePoint> spec;
  // reachable[t] = symbols at index t of allowed sequences starting with n.
  std::vector<std::vector<symbolic::Symbol>> reachable;
  bool target_unreachable = false;
};

// Throws NotApplicable for spaces other than the countdown graph and
// TruncationTooSmall when the truncation M < N + 2.
FailureWitness spec_failure_witness(const symbolic::ShiftSpace& space, int gap);

}  // namespace leodyn::spec
