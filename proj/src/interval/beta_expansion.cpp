#include "leodyn/interval/beta_expansion.hpp"

#include <map>

#include "leodyn/core/errors.hpp"

namespace leodyn::interval {

BetaValue::BetaValue(Rational lower, Rational upper, int precision_bits)
    : lower_(std::move(lower)), upper_(std::move(upper)), precision_bits_(precision_bits) {
  if (lower_ <= 1) throw InvalidArgument("beta must exceed 1");
  if (lower_ > upper_) throw InvalidArgument("beta enclosure is inverted");
  if (precision_bits_ < 8) throw InvalidArgument("precision must be at least 8 bits");
}

BetaValue BetaValue::exact(const Rational& beta) { return BetaValue(beta, beta, 128); }

BetaValue BetaValue::enclosure(const Rational& lower, const Rational& upper, int precision_bits) {
  return BetaValue(lower, upper, precision_bits);
}

namespace {

Rational evaluate(const std::vector<BigInt>& coefficients, const Rational& x) {
  Rational acc = 0;
  for (const BigInt& c : coefficients) acc = acc * x + Rational(c);
  return acc;
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Rational round_down(const Rational& q, int bits) {
  Rational scaled = q * pow2(bits);
  Rational r = Rational(floor_of(scaled)) * pow2(-bits);
  return r;
}

Rational round_up(const Rational& q, int bits) {
  Rational scaled = q * pow2(bits);
  Rational r = Rational(ceil_of(scaled)) * pow2(-bits);
  return r;
}

}  // namespace

BetaValue BetaValue::polynomial_root(const std::vector<BigInt>& coefficients, const Rational& lo, const Rational& hi,
                                     int precision_bits) {
  Rational a = lo;
  Rational b = hi;
  int sa = sign(evaluate(coefficients, a));
  int sb = sign(evaluate(coefficients, b));
  if (sa == 0) return exact(a);
  if (sb == 0) return exact(b);
  if (sa == sb) throw InvalidArgument("polynomial has no sign change on the bracket");
  const Rational width = pow2(-precision_bits);
  while (b - a > width) {
    Rational m = (a + b) / 2;
    int sm = sign(evaluate(coefficients, m));
    if (sm == 0) return exact(m);
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  return BetaValue(round_down(a, precision_bits), round_up(b, precision_bits), precision_bits);
}

BetaValue BetaValue::golden_ratio(int precision_bits) {
  return polynomial_root({BigInt(1), BigInt(-1), BigInt(-1)}, Rational(1), Rational(2), precision_bits);
}

double BetaValue::to_double() const {
  Rational mid = (lower_ + upper_) / 2;
  return mid.get_d();
}

std::string BetaValue::describe() const {
  if (is_exact()) return format_rational(lower_);
  return "[" + format_rational(lower_) + "," + format_rational(upper_) + "]@" + std::to_string(precision_bits_);
}

const char* to_string(ExpansionConvention c) {
  return c == ExpansionConvention::greedy ? "greedy" : "quasi-greedy";
}

BetaExpansion beta_expansion_of_one(const BetaValue& beta, int k, ExpansionConvention convention) {
  if (k < 1) throw InvalidArgument("digit count must be positive");
  BetaExpansion out{beta, {}, convention, std::nullopt};
  if (beta.is_exact() && is_integer(beta.lower())) convention = ExpansionConvention::quasi_greedy;
  const bool quasi = convention == ExpansionConvention::quasi_greedy;
  const int bits = beta.precision_bits();
  const Rational hit_width = pow2(-(bits / 2));

  // Remainder enclosure [x_lo, x_hi]; exact states are remembered so that a
  // revisit certifies eventual periodicity.
  Rational x_lo = 1;
  Rational x_hi = 1;
  std::map<Rational, std::size_t> seen;
  while (out.digits.size() < static_cast<std::size_t>(k)) {
    if (x_lo == x_hi) {
      auto [it, inserted] = seen.emplace(x_lo, out.digits.size());
      if (!inserted) {
        out.period = Periodicity{it->second, out.digits.size() - it->second};
        break;
      }
    }
    Rational y_lo = beta.lower() * x_lo;
    Rational y_hi = beta.upper() * x_hi;
    if (y_lo != y_hi) {
      y_lo = round_down(y_lo, bits);
      y_hi = round_up(y_hi, bits);
    }
    BigInt d_lo = quasi ? BigInt(ceil_of(y_lo) - 1) : floor_of(y_lo);
    BigInt d_hi = quasi ? BigInt(ceil_of(y_hi) - 1) : floor_of(y_hi);
    BigInt digit;
    if (d_lo == d_hi) {
      digit = d_lo;
      x_lo = y_lo - Rational(digit);
      x_hi = y_hi - Rational(digit);
    } else {
      if (y_hi - y_lo > hit_width) {
        throw PrecisionExhausted("beta enclosure too wide after " + std::to_string(out.digits.size()) +
                                 " digits; raise the precision");
      }
      // The enclosure straddles an integer n: treat βx = n as exact.
      BigInt n = quasi ? BigInt(ceil_of(y_lo)) : floor_of(y_hi);
      digit = quasi ? BigInt(n - 1) : n;
      x_lo = x_hi = quasi ? Rational(1) : Rational(0);
    }
    out.digits.push_back(static_cast<int>(digit.get_si()));
  }
  if (out.period) {
    const std::size_t start = out.period->start;
    const std::size_t len = out.period->length;
    while (out.digits.size() < static_cast<std::size_t>(k)) {
      out.digits.push_back(out.digits[start + (out.digits.size() - start) % len]);
    }
  }
  return out;
}

int max_zero_run(const std::vector<int>& digits) {
  int best = 0;
  int run = 0;
  for (int d : digits) {
    run = d == 0 ? run + 1 : 0;
    if (run > best) best = run;
  }
  return best;
}

std::string SpecificationVerdict::label() const {
  if (spec_consistent) return "spec-consistent";
  return "spec-fails-at-depth(" + std::to_string(max_zero_run) + ")";
}

SpecificationVerdict classify_specification(const BetaValue& beta, int depth) {
  BetaExpansion e = beta_expansion_of_one(beta, depth, ExpansionConvention::quasi_greedy);
  SpecificationVerdict v;
  v.depth = depth;
  v.max_zero_run = max_zero_run(e.digits);
  v.period = e.period;
  v.spec_consistent = e.period.has_value();
  return v;
}

}  // namespace leodyn::interval
