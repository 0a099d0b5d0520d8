#include "leodyn/core/rational.hpp"

#include <cctype>

#include "leodyn/core/errors.hpp"

namespace leodyn {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  BigInt value(std::string(s), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational ratio(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    BigInt digits(std::string(int_part) + std::string(frac_part), 10);
    Rational q(digits, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(text, text));
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_of(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac_of(const Rational& q) {
  Rational r = q - Rational(floor_of(q));
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow2(long exponent) {
  BigInt p = 1;
  unsigned long magnitude = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), magnitude);
  if (exponent >= 0) return Rational(p);
  Rational r(BigInt(1), p);
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi, bool lo_closed, bool hi_closed) {
  if (lo > hi || (lo == hi && !(lo_closed && hi_closed))) {
    throw InvalidArgument("simplest_between: empty interval");
  }
  if (lo == hi) return lo;
  // Continued-fraction descent (Stern–Brocot).
  BigInt fl = floor_of(lo);
  if (is_integer(lo) && lo_closed) return lo;
  Rational candidate(fl + 1);
  if (candidate < hi || (candidate == hi && hi_closed)) return candidate;
  // lo and hi share the integer part fl; write x = fl + 1/t.
  Rational base(fl);
  Rational t_lo = 1 / Rational(hi - base);
  if (lo == base) {
    // lo open at an integer: t ranges over (t_lo, +inf) or [t_lo, +inf).
    Rational t = is_integer(t_lo) && hi_closed ? t_lo : Rational(floor_of(t_lo) + 1);
    Rational r = base + 1 / t;
    return r;
  }
  Rational t_hi = 1 / Rational(lo - base);
  Rational t = simplest_between(t_lo, t_hi, hi_closed, lo_closed);
  Rational r = base + 1 / t;
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace leodyn
