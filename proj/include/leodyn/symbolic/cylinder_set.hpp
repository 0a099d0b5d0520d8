#pragma once
// Finite unions of cylinder sets [w] = {x : x starts with w}.

#include <vector>

#include "leodyn/symbolic/shift_space.hpp"

namespace leodyn::symbolic {

class CylinderSet {
 public:
  CylinderSet() = default;  // the empty set
  // Canonicalizes: drops disallowed words, absorbs words extending another
  // member, and merges complete families of siblings into their parent.
  // The whole space is {[]}.
  CylinderSet(const ShiftSpace& space, std::vector<Word> words);

  static CylinderSet whole();
  const std::vector<Word>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  bool is_whole() const { return words_.size() == 1 && words_.front().empty(); }
  bool contains(const SequencePoint& p) const;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;

 private:
  std::vector<Word> words_;
};

std::string to_string(const CylinderSet& c);

CylinderSet unite(const ShiftSpace& space, const CylinderSet& a, const CylinderSet& b);
CylinderSet intersect(const ShiftSpace& space, const CylinderSet& a, const CylinderSet& b);
// σ(A) and σ^{-1}(A).
CylinderSet shift_image(const ShiftSpace& space, const CylinderSet& a);
CylinderSet shift_preimage(const ShiftSpace& space, const CylinderSet& a);
bool includes(const ShiftSpace& space, const CylinderSet& outer, const CylinderSet& inner);

}  // namespace leodyn::symbolic
