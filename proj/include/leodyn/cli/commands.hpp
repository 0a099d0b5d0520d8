#pragma once
// The leodyn command line: leo, shadow, beta-atlas and example.
//
// Exit codes: 0 every check passed, 1 a check failed, 2 usage or parse
// error.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "leodyn/cli/report.hpp"
#include "leodyn/interval/beta_expansion.hpp"
#include "leodyn/interval/interval_set.hpp"

namespace leodyn::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "p/q:r/s" → [p/q, r/s).
interval::IntervalSet parse_cli_interval(const std::string& text);

// doubling | beta:<rational or golden> | example1[:levels] | example2 | a
// JSON file holding a map.
interval::PiecewiseAffineMap parse_map_name(const std::string& name);

// The map names above, or shift:full:<n> | shift:golden | shift:fixed |
// shift:countdown:<M> | a JSON file holding a map or a shift space.
using SystemChoice = std::variant<interval::PiecewiseAffineMap, symbolic::ShiftSpace>;
SystemChoice parse_system_name(const std::string& name);

// golden | a rational.
interval::BetaValue parse_beta(const std::string& text);

struct AtlasRow {
  std::string label;
  interval::BetaValue beta;
  std::vector<int> digits;
  interval::SpecificationVerdict verdict;
  interval::SpecificationVerdict verdict_doubled;
  std::optional<int> leo_n;
  std::string error;  // nonempty when the row could not be computed

  bool stable() const { return error.empty() && verdict.spec_consistent == verdict_doubled.spec_consistent; }
};

// Rows for beta_min + i·(beta_max − beta_min)/(steps − 1), then the extra
// values; computed on `threads` workers, returned in input order.
std::vector<AtlasRow> beta_atlas(const Rational& beta_min, const Rational& beta_max, int steps, int digits,
                                 const std::vector<std::string>& extra, unsigned threads);
std::string atlas_csv(const std::vector<AtlasRow>& rows);

}  // namespace leodyn::cli
