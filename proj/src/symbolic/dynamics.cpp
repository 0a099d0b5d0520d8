#include "leodyn/symbolic/dynamics.hpp"

#include <cmath>

#include "leodyn/core/errors.hpp"

namespace leodyn::symbolic {

bool is_allowed(const ShiftSpace& space, const Word& w) {
  for (Symbol s : w) {
    if (!space.in_alphabet(s)) throw SymbolOutOfAlphabet("symbol " + std::to_string(s) + " outside the alphabet");
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!space.allows(w[i], w[i + 1])) return false;
  }
  return true;
}

std::optional<int> primitivity_index(const ShiftSpace& space) {
  using Matrix = std::vector<std::vector<int>>;
  const Matrix a = space.matrix();
  const std::size_t n = a.size();
  auto positive = [](const Matrix& m) {
    for (const auto& row : m) {
      for (int v : row) {
        if (!v) return false;
      }
    }
    return true;
  };
  Matrix power = a;
  const int limit = static_cast<int>(n * n);
  for (int k = 1; k <= limit; ++k) {
    if (positive(power)) return k;
    Matrix next(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (!power[i][l]) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] |= a[l][j];
      }
    }
    power = std::move(next);
  }
  return std::nullopt;
}

CylinderSet cylinder_image(const ShiftSpace& space, const Word& w, int k) {
  if (k < 0) throw InvalidArgument("cylinder_image needs k >= 0");
  if (!is_allowed(space, w)) throw WordNotAllowed("word " + to_string(w) + " is not allowed");
  CylinderSet c(space, {w});
  for (int i = 0; i < k; ++i) c = shift_image(space, c);
  return c;
}

int dyadic_exponent(const Rational& eps) {
  if (eps <= 0 || eps > 1) throw InvalidArgument("eps must be a power of 1/2 in (0,1]");
  const BigInt& num = eps.get_num();
  const BigInt& den = eps.get_den();
  if (num != 1 || mpz_popcount(den.get_mpz_t()) != 1) {
    throw InvalidArgument("eps " + format_rational(eps) + " is not a power of 1/2");
  }
  return static_cast<int>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
}

namespace {

template <class Visit>
void enumerate(const ShiftSpace& space, std::size_t length, std::uint64_t cap, Visit&& visit) {
  if (length == 0) {
    visit(Word{});
    return;
  }
  std::uint64_t count = 0;
  Word w;
  w.reserve(length);
  auto recurse = [&](auto&& self) -> void {
    if (w.size() == length) {
      if (++count > cap) throw TooLarge("word enumeration exceeded the cap of " + std::to_string(cap));
      visit(w);
      return;
    }
    const std::vector<Symbol>* options = nullptr;
    std::vector<Symbol> all;
    if (w.empty()) {
      for (Symbol s = 0; s < space.alphabet_size(); ++s) all.push_back(s);
      options = &all;
    } else {
      options = &space.successors(w.back());
    }
    for (Symbol s : *options) {
      w.push_back(s);
      self(self);
      w.pop_back();
    }
  };
  recurse(recurse);
}

}  // namespace

std::uint64_t count_words(const ShiftSpace& space, std::size_t length, std::uint64_t cap) {
  std::uint64_t total = 0;
  enumerate(space, length, cap, [&](const Word&) { ++total; });
  return total;
}

std::vector<Word> allowed_words(const ShiftSpace& space, std::size_t length, std::uint64_t cap) {
  std::vector<Word> out;
  enumerate(space, length, cap, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::uint64_t separated_count(const ShiftSpace& space, int n, const Rational& eps, std::uint64_t cap) {
  if (n < 1) throw InvalidArgument("separated_count needs n >= 1");
  const int m = dyadic_exponent(eps);
  return count_words(space, static_cast<std::size_t>(n + m), cap);
}

double entropy_estimate(const ShiftSpace& space, int n, const Rational& eps, std::uint64_t cap) {
  return std::log(static_cast<double>(separated_count(space, n, eps, cap))) / n;
}

EntropyBoundReport leo_entropy_bound_check(const ShiftSpace& space, int n_cover, const Rational& eps, int k_max,
                                           std::uint64_t cap) {
  if (n_cover < 1 || k_max < 1) throw InvalidArgument("leo_entropy_bound_check needs N >= 1 and k_max >= 1");
  EntropyBoundReport report;
  const int m = dyadic_exponent(eps);
  report.leo_precondition = true;
  for (const Word& w : allowed_words(space, static_cast<std::size_t>(m), cap)) {
    if (!cylinder_image(space, w, n_cover).is_whole()) {
      report.leo_precondition = false;
      break;
    }
  }
  bool all_hold = true;
  for (int k = 1; k <= k_max; ++k) {
    EntropyBoundRow row;
    row.k = k;
    row.separated = separated_count(space, k * n_cover, eps, cap);
    row.bound = std::uint64_t{1} << k;
    row.holds = row.separated >= row.bound;
    all_hold = all_hold && row.holds;
    report.rows.push_back(row);
  }
  report.pass = report.leo_precondition && all_hold;
  return report;
}

}  // namespace leodyn::symbolic
