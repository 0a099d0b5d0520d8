#pragma once
// Finite unions of rational intervals with explicit endpoint flags.
//
// Every interval records whether each endpoint is included.  Open balls,
// their exact images under decreasing branches and the closures used by
// periodic-point searches all stay representable without rounding, and set
// equality is exact.  `same_up_to_endpoints` compares interiors for the
// places where only the measure-theoretic shape matters.

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "leodyn/core/rational.hpp"

namespace leodyn::interval {

struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = false;

  static Interval half_open(const Rational& lo, const Rational& hi);
  static Interval closed(const Rational& lo, const Rational& hi);
  static Interval open(const Rational& lo, const Rational& hi);
  static Interval point(const Rational& x);

  bool empty() const;
  bool contains(const Rational& x) const;
  Rational length() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
  }
};

// "[1/4,1/2)" style rendering; parse_interval accepts the same syntax.
std::string to_string(const Interval& iv);
Interval parse_interval(const std::string& text);

class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> parts);
  explicit IntervalSet(std::vector<Interval> parts);

  // The phase space [0,1).
  static IntervalSet unit();
  static IntervalSet half_open(const Rational& lo, const Rational& hi);

  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  const std::vector<Interval>& parts() const { return parts_; }

  bool contains(const Rational& x) const;
  Rational measure() const;
  std::optional<Rational> infimum() const;
  std::optional<Rational> supremum() const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet subtract(const IntervalSet& other) const;
  // Complement inside [0,1).
  IntervalSet complement() const;
  // True iff other ⊆ *this.
  bool includes(const IntervalSet& other) const;

  IntervalSet interior() const;
  IntervalSet closure() const;
  bool same_up_to_endpoints(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<Interval> parts_;
  static std::vector<Interval> canonical(std::vector<Interval> parts);
  IntervalSet complement_within(const Interval& window) const;
};

std::string to_string(const IntervalSet& s);

}  // namespace leodyn::interval
