#include "leodyn/symbolic/cylinder_set.hpp"

#include <algorithm>
#include <map>

namespace leodyn::symbolic {

namespace {

bool word_allowed(const ShiftSpace& space, const Word& w) {
  for (Symbol s : w) {
    if (!space.in_alphabet(s)) return false;
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!space.allows(w[i], w[i + 1])) return false;
  }
  return true;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

// Sorted lexicographically, a word's extensions follow it directly.
std::vector<Word> drop_absorbed(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<Word> out;
  for (Word& w : words) {
    if (!out.empty() && is_prefix(out.back(), w)) continue;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

CylinderSet::CylinderSet(const ShiftSpace& space, std::vector<Word> words) {
  std::erase_if(words, [&](const Word& w) { return !word_allowed(space, w); });
  words = drop_absorbed(std::move(words));
  // Merge complete sibling families bottom-up until nothing changes.
  bool changed = true;
  while (changed && !words.empty()) {
    changed = false;
    std::map<Word, std::vector<Symbol>> children;
    for (const Word& w : words) {
      if (w.empty()) continue;
      children[Word(w.begin(), w.end() - 1)].push_back(w.back());
    }
    std::vector<Word> merged;
    for (auto& [parent, kids] : children) {
      std::sort(kids.begin(), kids.end());
      std::vector<Symbol> expected;
      if (parent.empty()) {
        for (Symbol s = 0; s < space.alphabet_size(); ++s) expected.push_back(s);
      } else {
        expected = space.successors(parent.back());
      }
      if (kids == expected) merged.push_back(parent);
    }
    if (!merged.empty()) {
      changed = true;
      words.insert(words.end(), merged.begin(), merged.end());
      words = drop_absorbed(std::move(words));
    }
  }
  words_ = std::move(words);
}

CylinderSet CylinderSet::whole() {
  CylinderSet c;
  c.words_ = {Word{}};
  return c;
}

bool CylinderSet::contains(const SequencePoint& p) const {
  for (const Word& w : words_) {
    bool match = true;
    for (std::size_t i = 0; i < w.size() && match; ++i) match = p.at(i) == w[i];
    if (match) return true;
  }
  return false;
}

std::string to_string(const CylinderSet& c) {
  if (c.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < c.words().size(); ++i) {
    std::string word = to_string(c.words()[i]);
    out += (i ? ", [" : "[") + word.substr(1, word.size() - 2) + "]";
  }
  return out + "}";
}

CylinderSet unite(const ShiftSpace& space, const CylinderSet& a, const CylinderSet& b) {
  std::vector<Word> all = a.words();
  all.insert(all.end(), b.words().begin(), b.words().end());
  return CylinderSet(space, std::move(all));
}

CylinderSet intersect(const ShiftSpace& space, const CylinderSet& a, const CylinderSet& b) {
  std::vector<Word> out;
  for (const Word& u : a.words()) {
    for (const Word& v : b.words()) {
      if (is_prefix(u, v)) {
        out.push_back(v);
      } else if (is_prefix(v, u)) {
        out.push_back(u);
      }
    }
  }
  return CylinderSet(space, std::move(out));
}

CylinderSet shift_image(const ShiftSpace& space, const CylinderSet& a) {
  std::vector<Word> out;
  for (const Word& w : a.words()) {
    if (w.size() >= 2) {
      out.emplace_back(w.begin() + 1, w.end());
    } else if (w.size() == 1) {
      for (Symbol s : space.successors(w.front())) out.push_back({s});
    } else {
      for (Symbol s = 0; s < space.alphabet_size(); ++s) {
        if (!space.predecessors(s).empty()) out.push_back({s});
      }
    }
  }
  return CylinderSet(space, std::move(out));
}

CylinderSet shift_preimage(const ShiftSpace& space, const CylinderSet& a) {
  std::vector<Word> out;
  for (const Word& w : a.words()) {
    if (w.empty()) return CylinderSet::whole();
    for (Symbol p : space.predecessors(w.front())) {
      Word extended{p};
      extended.insert(extended.end(), w.begin(), w.end());
      out.push_back(std::move(extended));
    }
  }
  return CylinderSet(space, std::move(out));
}

bool includes(const ShiftSpace& space, const CylinderSet& outer, const CylinderSet& inner) {
  return intersect(space, outer, inner) == inner;
}

}  // namespace leodyn::symbolic
