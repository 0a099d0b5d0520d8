#pragma once
// A Cantor set for the doubling map with no periodic points, built level by
// level: at level i the first enumerated periodic point qᵢ whose orbit
// avoids the previously removed balls is deleted together with its
// radius-ζᵢ ball and (at finite depth k) k generations of preimages.

#include <cstdint>
#include <optional>
#include <vector>

#include "leodyn/interval/interval_set.hpp"

namespace leodyn::constructions {

// Least period of x under doubling (x must be periodic, i.e. of odd
// denominator).
int least_period(const Rational& x);

// Fixed points of f^p, k/(2^p − 1), ordered by least period then value.
std::vector<Rational> periodic_points(int p);

// p₀, p₁, …: all periodic points of least period ≤ max_period, ordered by
// least period and ascending within a period.
std::vector<Rational> enumerate_periodic_points(int max_period);

struct LedgerEntry {
  Rational point;                     // qᵢ
  Rational radius;                    // ζᵢ = ζ₀ rⁱ
  std::size_t enumeration_index = 0;  // nᵢ with qᵢ = p_{nᵢ}
  int period = 0;
  std::size_t removed_pieces = 0;     // arcs removed: one per preimage branch, all generations
  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

struct CantorApprox {
  int level = 0;
  int depth = 0;
  Rational zeta0;
  Rational ratio;
  int max_period = 0;
  interval::IntervalSet remaining;
  std::vector<LedgerEntry> ledger;
  friend bool operator==(const CantorApprox&, const CantorApprox&) = default;
};

// ∪_{j ≤ depth} f^{-j}(B(q, ζ)) on the circle, with the number of arcs
// summed over generations.
std::pair<interval::IntervalSet, std::size_t> removal_set(const Rational& q, const Rational& radius, int depth);

// Levels 0..level.  qᵢ is chosen by exact membership of periodic points in
// the infinite-depth set (a periodic orbit is finite, so "never enters a
// removed ball" is decidable); the choice therefore does not depend on the
// depth, which keeps approximations nested in both level and depth.
// Throws EmptyRemainder if no candidate of least period ≤ max_period
// survives or the remaining set vanishes.
CantorApprox feliks_cantor(int level, int depth, const Rational& zeta0 = ratio(1, 16),
                           const Rational& ratio = leodyn::ratio(1, 4), int max_period = 20);

// The same ledger with a different preimage depth.
interval::IntervalSet remaining_at_depth(const CantorApprox& approx, int depth);

struct CoveringSample {
  Rational x;
  bool contains_remaining = false;    // f^N(B(x,ε) ∩ R_k) ⊇ R_k
  bool within_shallower = false;      // f^N(B(x,ε) ∩ R_k) ⊆ R_{k−N}
  bool equals_shallower = false;      // f^N(B(x,ε) ∩ R_k) = R_{k−N}
};

struct FeliksReport {
  // Periodic points of period ≤ max_period still in the approximation.
  std::vector<Rational> surviving_periodic;
  // Of those, the ones with enumeration index ≤ n_ℓ (should be none).
  std::vector<Rational> scope_survivors;
  // Hausdorff distance between f(R_k) and R_k.
  std::optional<Rational> invariance_defect;
  // measure(f(R_k) \ R_k) and the measure of the deepest generation.
  Rational slack_measure;
  Rational deepest_generation_measure;
  int covering_n = 0;
  Rational covering_eps;
  std::vector<CoveringSample> covering;

  bool covering_holds() const;
};

FeliksReport feliks_verify(const CantorApprox& approx, int max_period, int covering_n = 4, int samples = 20,
                           std::uint64_t seed = 1);

}  // namespace leodyn::constructions
