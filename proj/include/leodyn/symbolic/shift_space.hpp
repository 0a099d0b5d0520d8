#pragma once
// One-sided shift spaces over a finite alphabet {0, ..., n-1}: subshifts of
// finite type given by a 0/1 transition matrix, and the countable "countdown"
// graph shift (0 → every symbol, v → {v−1, v}) truncated at a bound M.

#include <optional>
#include <string>
#include <vector>

namespace leodyn::symbolic {

using Symbol = int;
using Word = std::vector<Symbol>;

std::string to_string(const Word& w);

class ShiftSpace {
 public:
  enum class Kind { finite_type, countdown_graph };

  // Square 0/1 matrix; row i lists the allowed successors of symbol i.
  static ShiftSpace finite_type(std::vector<std::vector<int>> matrix);
  static ShiftSpace full_shift(int symbols);
  // [[1,1],[1,0]]: symbol 1 cannot follow itself.
  static ShiftSpace golden_mean();
  static ShiftSpace fixed_point();
  // Symbols 0..truncation; 0 → everything, v → {v−1, v}.
  static ShiftSpace countdown_graph(int truncation);

  Kind kind() const { return kind_; }
  int alphabet_size() const { return static_cast<int>(successors_.size()); }
  // M for countdown graphs, alphabet_size()−1 otherwise.
  int truncation() const { return alphabet_size() - 1; }
  bool in_alphabet(Symbol s) const { return s >= 0 && s < alphabet_size(); }
  bool allows(Symbol from, Symbol to) const;
  const std::vector<Symbol>& successors(Symbol s) const;
  const std::vector<Symbol>& predecessors(Symbol s) const;
  // The 0/1 transition matrix (materialized for both kinds).
  std::vector<std::vector<int>> matrix() const;
  std::string describe() const;

  friend bool operator==(const ShiftSpace& a, const ShiftSpace& b) {
    return a.kind_ == b.kind_ && a.successors_ == b.successors_;
  }

 private:
  ShiftSpace(Kind kind, std::vector<std::vector<Symbol>> successors);
  Kind kind_;
  std::vector<std::vector<Symbol>> successors_;
  std::vector<std::vector<Symbol>> predecessors_;
};

// An eventually periodic sequence prefix · cycle^∞ (cycle nonempty).
struct SequencePoint {
  Word prefix;
  Word cycle;

  Symbol at(std::size_t i) const;
  Word take(std::size_t n) const;
  SequencePoint shifted() const;
  // Prefix with any repetition of the cycle folded away, cycle reduced to
  // its primitive root and rotated accordingly.
  SequencePoint normalized() const;

  // Equality as sequences.
  friend bool operator==(const SequencePoint& a, const SequencePoint& b);
};

std::string to_string(const SequencePoint& p);

// Index of the first difference, nullopt for equal sequences.
std::optional<std::size_t> first_difference(const SequencePoint& a, const SequencePoint& b);
bool is_allowed_point(const ShiftSpace& space, const SequencePoint& p);

}  // namespace leodyn::symbolic
