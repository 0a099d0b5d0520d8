#include "leodyn/interval/interval_set.hpp"

#include <algorithm>

#include "leodyn/core/errors.hpp"

namespace leodyn::interval {

Interval Interval::half_open(const Rational& lo, const Rational& hi) { return {lo, hi, true, false}; }
Interval Interval::closed(const Rational& lo, const Rational& hi) { return {lo, hi, true, true}; }
Interval Interval::open(const Rational& lo, const Rational& hi) { return {lo, hi, false, false}; }
Interval Interval::point(const Rational& x) { return {x, x, true, true}; }

bool Interval::empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

bool Interval::contains(const Rational& x) const {
  bool above = lo_closed ? x >= lo : x > lo;
  bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

Rational Interval::length() const {
  if (empty()) return Rational(0);
  Rational r = hi - lo;
  return r;
}

std::string to_string(const Interval& iv) {
  return std::string(iv.lo_closed ? "[" : "(") + format_rational(iv.lo) + "," + format_rational(iv.hi) +
         (iv.hi_closed ? "]" : ")");
}

Interval parse_interval(const std::string& text) {
  if (text.size() < 5) throw ParseError("bad interval '" + text + "'");
  char open = text.front();
  char close = text.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')')) {
    throw ParseError("bad interval brackets in '" + text + "'");
  }
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("missing comma in interval '" + text + "'");
  Interval iv{parse_rational(text.substr(1, comma - 1)), parse_rational(text.substr(comma + 1, text.size() - comma - 2)),
              open == '[', close == ']'};
  return iv;
}

IntervalSet::IntervalSet(std::initializer_list<Interval> parts)
    : parts_(canonical(std::vector<Interval>(parts))) {}

IntervalSet::IntervalSet(std::vector<Interval> parts) : parts_(canonical(std::move(parts))) {}

IntervalSet IntervalSet::unit() { return IntervalSet{Interval::half_open(0, 1)}; }

IntervalSet IntervalSet::half_open(const Rational& lo, const Rational& hi) {
  return IntervalSet{Interval::half_open(lo, hi)};
}

std::vector<Interval> IntervalSet::canonical(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& iv) { return iv.empty(); });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> out;
  out.reserve(parts.size());
  for (Interval& iv : parts) {
    if (!out.empty()) {
      Interval& last = out.back();
      bool touches = iv.lo < last.hi || (iv.lo == last.hi && (last.hi_closed || iv.lo_closed));
      if (touches) {
        if (iv.hi > last.hi) {
          last.hi = iv.hi;
          last.hi_closed = iv.hi_closed;
        } else if (iv.hi == last.hi) {
          last.hi_closed = last.hi_closed || iv.hi_closed;
        }
        continue;
      }
    }
    out.push_back(std::move(iv));
  }
  return out;
}

bool IntervalSet::contains(const Rational& x) const {
  // Parts are sorted; the candidate is the last part starting at or before x.
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& value, const Interval& iv) { return value < iv.lo; });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(x);
}

Rational IntervalSet::measure() const {
  Rational total = 0;
  for (const Interval& iv : parts_) total += iv.hi - iv.lo;
  return total;
}

std::optional<Rational> IntervalSet::infimum() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.front().lo;
}

std::optional<Rational> IntervalSet::supremum() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.back().hi;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    Interval c;
    if (a.lo > b.lo) {
      c.lo = a.lo;
      c.lo_closed = a.lo_closed;
    } else if (b.lo > a.lo) {
      c.lo = b.lo;
      c.lo_closed = b.lo_closed;
    } else {
      c.lo = a.lo;
      c.lo_closed = a.lo_closed && b.lo_closed;
    }
    bool a_ends_first;
    if (a.hi < b.hi) {
      c.hi = a.hi;
      c.hi_closed = a.hi_closed;
      a_ends_first = true;
    } else if (b.hi < a.hi) {
      c.hi = b.hi;
      c.hi_closed = b.hi_closed;
      a_ends_first = false;
    } else {
      c.hi = a.hi;
      c.hi_closed = a.hi_closed && b.hi_closed;
      a_ends_first = !a.hi_closed || b.hi_closed;
    }
    if (!c.empty()) out.push_back(c);
    if (a_ends_first) {
      ++i;
    } else {
      ++j;
    }
  }
  IntervalSet result;
  result.parts_ = canonical(std::move(out));
  return result;
}

IntervalSet IntervalSet::complement_within(const Interval& window) const {
  std::vector<Interval> gaps;
  Rational cursor = window.lo;
  bool cursor_closed = window.lo_closed;
  for (const Interval& iv : parts_) {
    gaps.push_back(Interval{cursor, iv.lo, cursor_closed, !iv.lo_closed});
    cursor = iv.hi;
    cursor_closed = !iv.hi_closed;
  }
  gaps.push_back(Interval{cursor, window.hi, cursor_closed, window.hi_closed});
  return IntervalSet(std::move(gaps)).intersect(IntervalSet{window});
}

IntervalSet IntervalSet::complement() const { return complement_within(Interval::half_open(0, 1)); }

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  if (parts_.empty() || other.parts_.empty()) return *this;
  Rational lo = std::min(parts_.front().lo, other.parts_.front().lo);
  Rational hi = std::max(parts_.back().hi, other.parts_.back().hi);
  return intersect(other.complement_within(Interval::closed(lo, hi)));
}

bool IntervalSet::includes(const IntervalSet& other) const { return other.intersect(*this) == other; }

IntervalSet IntervalSet::interior() const {
  std::vector<Interval> out;
  for (const Interval& iv : parts_) out.push_back(Interval::open(iv.lo, iv.hi));
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::closure() const {
  std::vector<Interval> out;
  for (const Interval& iv : parts_) out.push_back(Interval::closed(iv.lo, iv.hi));
  return IntervalSet(std::move(out));
}

bool IntervalSet::same_up_to_endpoints(const IntervalSet& other) const { return interior() == other.interior(); }

std::string to_string(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const Interval& iv : s.parts()) {
    if (!out.empty()) out += " u ";
    out += to_string(iv);
  }
  return out;
}

}  // namespace leodyn::interval
