#pragma once
// Exact rational arithmetic helpers on top of GMP's mpq_class.
//
// Note: gmpxx uses expression templates, so always bind results to an
// explicit Rational/BigInt rather than `auto`.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace leodyn {

using BigInt = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms (mpq_class(num, den) alone does not canonicalize).
Rational ratio(long num, long den);

// Accepts "p/q", "p" and finite decimals such as "1.25" or "-0.5".
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers are written with denominator 1.
std::string format_rational(const Rational& q);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);
// q - floor(q), always in [0,1).
Rational frac_of(const Rational& q);
bool is_integer(const Rational& q);

// 2^exponent for any (possibly negative) exponent.
Rational pow2(long exponent);

// The rational of smallest denominator in the set bounded by lo and hi
// (with the given endpoint flags); ties between equal denominators go to
// the smaller value.  The set must be nonempty.
Rational simplest_between(const Rational& lo, const Rational& hi, bool lo_closed, bool hi_closed);

double to_double(const Rational& q);

}  // namespace leodyn
