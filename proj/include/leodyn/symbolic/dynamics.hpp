#pragma once
// Admissibility, mixing, cylinder images and (n,ε)-separated counting for
// shift spaces with the metric d(x,y) = 2^{-(first differing index)}.

#include <cstdint>
#include <optional>
#include <vector>

#include "leodyn/core/rational.hpp"
#include "leodyn/symbolic/cylinder_set.hpp"

namespace leodyn::symbolic {

inline constexpr std::uint64_t kDefaultWordCap = std::uint64_t{1} << 22;

// Throws SymbolOutOfAlphabet for symbols outside the alphabet.
bool is_allowed(const ShiftSpace& space, const Word& w);

// Least N with every entry of A^N positive (boolean powers), searched up to
// alphabet_size²; nullopt means not primitive.
std::optional<int> primitivity_index(const ShiftSpace& space);

// σ^k([w]); throws WordNotAllowed.
CylinderSet cylinder_image(const ShiftSpace& space, const Word& w, int k);

// m with eps = 2^{-m}; throws InvalidArgument for other eps.
int dyadic_exponent(const Rational& eps);

// Number of allowed words of the given length (DFS enumeration); throws
// TooLarge once more than `cap` words have been enumerated.
std::uint64_t count_words(const ShiftSpace& space, std::size_t length, std::uint64_t cap = kDefaultWordCap);

// Maximal cardinality of an (n,ε)-separated set, ε = 2^{-m}: two sequences
// are separated iff they differ at an index < n + m, so the answer is the
// number of allowed words of length n + m.
std::uint64_t separated_count(const ShiftSpace& space, int n, const Rational& eps,
                              std::uint64_t cap = kDefaultWordCap);

// (1/n)·log separated_count(n, eps).
double entropy_estimate(const ShiftSpace& space, int n, const Rational& eps, std::uint64_t cap = kDefaultWordCap);

struct EntropyBoundRow {
  int k = 0;
  std::uint64_t separated = 0;  // s(kN, eps)
  std::uint64_t bound = 0;      // 2^k
  bool holds = false;
};

struct EntropyBoundReport {
  // σ^N(B(x,eps)) = whole space for every ball (each ball is a cylinder of
  // length m, so all of them are checked, not a sample).
  bool leo_precondition = false;
  std::vector<EntropyBoundRow> rows;
  bool pass = false;
};

// Checks s(kN, eps) >= 2^k for k = 1..k_max.
EntropyBoundReport leo_entropy_bound_check(const ShiftSpace& space, int n_cover, const Rational& eps, int k_max,
                                           std::uint64_t cap = kDefaultWordCap);

// All allowed words of a given length in lexicographic order.
std::vector<Word> allowed_words(const ShiftSpace& space, std::size_t length, std::uint64_t cap = kDefaultWordCap);

}  // namespace leodyn::symbolic
