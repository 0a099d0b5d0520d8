#pragma once
// Expansions of 1 in a non-integer base β and the finite-depth zero-run
// classifier for the specification property of β-shifts.

#include <optional>
#include <string>
#include <vector>

#include "leodyn/core/rational.hpp"

namespace leodyn::interval {

// Either an exact rational β or a rational enclosure [lower, upper] of an
// irrational β whose width is at most 2^-precision_bits.  Enclosure
// arithmetic rounds outward on the 2^-precision_bits grid.
class BetaValue {
 public:
  static BetaValue exact(const Rational& beta);
  static BetaValue enclosure(const Rational& lower, const Rational& upper, int precision_bits);
  // Root of the integer polynomial (coefficients from the highest degree
  // down) isolated in [lo, hi] by exact bisection.
  static BetaValue polynomial_root(const std::vector<BigInt>& coefficients, const Rational& lo, const Rational& hi,
                                   int precision_bits = 128);
  static BetaValue golden_ratio(int precision_bits = 128);

  bool is_exact() const { return lower_ == upper_; }
  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  int precision_bits() const { return precision_bits_; }
  // A rational stand-in for building maps: β itself when exact, otherwise
  // the lower end of the enclosure.
  const Rational& approximation() const { return lower_; }
  double to_double() const;
  std::string describe() const;

  friend bool operator==(const BetaValue&, const BetaValue&) = default;

 private:
  BetaValue(Rational lower, Rational upper, int precision_bits);
  Rational lower_;
  Rational upper_;
  int precision_bits_;
};

enum class ExpansionConvention { greedy, quasi_greedy };

const char* to_string(ExpansionConvention c);

// digits[start ..] repeats with the given period from `start` on.
struct Periodicity {
  std::size_t start = 0;
  std::size_t length = 1;
  friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

struct BetaExpansion {
  BetaValue beta;
  std::vector<int> digits;
  ExpansionConvention convention;
  // Present when eventual periodicity was certified while generating.
  std::optional<Periodicity> period;

  friend bool operator==(const BetaExpansion&, const BetaExpansion&) = default;
};

// First k digits of the expansion of 1.  Greedy: d = ⌊βx⌋, x ← βx − d.
// Quasi-greedy: d = ⌈βx⌉ − 1, x ← βx − d, so a finite greedy tail is
// replaced by its infinite periodic form.  For integer β the greedy
// expansion "β" is not a digit string over {0..β−1}; the quasi-greedy
// (β−1)^∞ is returned for both conventions.  With an enclosure, an
// integer inside the enclosure of βx is taken as an exact hit (β is then a
// root of the corresponding polynomial); PrecisionExhausted is thrown if
// the enclosure becomes too wide to decide a digit.
BetaExpansion beta_expansion_of_one(const BetaValue& beta, int k,
                                    ExpansionConvention convention = ExpansionConvention::quasi_greedy);

struct SpecificationVerdict {
  int depth = 0;
  int max_zero_run = 0;
  // True iff the quasi-greedy expansion was certified eventually periodic
  // within the examined depth (bounded zero runs are then guaranteed).
  bool spec_consistent = false;
  std::optional<Periodicity> period;

  std::string label() const;
};

// Heuristic finite-depth verdict: max run of 0's among the first `depth`
// quasi-greedy digits, and "spec-consistent" when eventual periodicity is
// certified, otherwise "spec-fails-at-depth(r)" with r the observed run.
SpecificationVerdict classify_specification(const BetaValue& beta, int depth);

int max_zero_run(const std::vector<int>& digits);

}  // namespace leodyn::interval
