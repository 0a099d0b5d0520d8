#include "leodyn/cli/commands.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "leodyn/constructions/examples.hpp"
#include "leodyn/constructions/feliks.hpp"
#include "leodyn/constructions/lindenstrauss.hpp"
#include "leodyn/constructions/rome.hpp"
#include "leodyn/core/errors.hpp"
#include "leodyn/interval/dynamics.hpp"
#include "leodyn/specification/systems.hpp"
#include "leodyn/specification/witness.hpp"
#include "leodyn/symbolic/dynamics.hpp"

namespace leodyn::cli {

using interval::IntervalSet;
using symbolic::ShiftSpace;

namespace {

// Thrown for bad command-line input; maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Inline JSON when the argument starts with '{', otherwise a file path.
json read_json_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("inline JSON: ") + e.what());
    }
  }
  return read_json_file(arg);
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

std::string join_digits(const std::vector<int>& digits) {
  const bool compact = std::all_of(digits.begin(), digits.end(), [](int d) { return d >= 0 && d <= 9; });
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!compact && i) out += ':';
    out += std::to_string(digits[i]);
  }
  return out;
}

std::string describe_symbols(const std::vector<int>& symbols) {
  std::string out = "{";
  for (std::size_t i = 0; i < symbols.size(); ++i) out += (i ? "," : "") + std::to_string(symbols[i]);
  return out + "}";
}

void emit(const Report& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.human();
  }
}

// ---------------------------------------------------------------- leo

struct LeoArgs {
  std::string map = "doubling";
  std::string interval;
  int max_n = 64;
  bool json = false;
};

Report cmd_leo(const LeoArgs& a) {
  Report report("leo", {{"map", a.map}, {"interval", a.interval}, {"max_n", a.max_n}});
  const auto f = parse_map_name(a.map);
  const IntervalSet j = parse_cli_interval(a.interval);
  const auto cert = interval::leo_certify(f, j, a.max_n);
  if (cert.certified()) {
    report.check("leo", true, "N=" + std::to_string(*cert.covering_n));
  } else {
    std::string why = cert.stalled ? "image chain stalled" : "no cover within max-n";
    report.check("leo", false, why + "; terminal " + interval::to_string(cert.terminal));
  }
  report.info("iterations", std::to_string(cert.iterations));
  return report;
}

// ------------------------------------------------------------- shadow

struct ShadowArgs {
  std::string system;
  std::string spec;
  bool periodic = false;
  std::string out;
  int max_covering_time = 64;
  bool json = false;
};

template <class S>
Report run_shadow(Report report, const S& sys, const spec::SpecificationInstance<typename S::Point>& instance,
                  const ShadowArgs& a) {
  spec::ShadowOptions options;
  options.max_covering_time = a.max_covering_time;
  try {
    auto result = a.periodic ? spec::periodic_shadow(sys, instance, options) : spec::shadow(sys, instance, options);
    report.info("covering_time", std::to_string(result.covering_time));
    report.check("shadow", true, "certificate of " + std::to_string(result.certificate.size()) + " nested regions");
    report.info("representative", encode(result.representative).dump());
    const Rational deviation = spec::max_deviation(sys, instance, result.representative);
    report.check("max_deviation", deviation <= instance.eps, format_rational(deviation));
    if (result.period) {
      const int p = *result.period;
      const bool fixed = sys.same_point(spec::iterate(sys, result.representative, p), result.representative);
      report.check("period", fixed, std::to_string(p));
      const int formula = spec::periodic_period(spec::periodic_extend(sys, instance));
      report.check("period_formula", p == formula, "b_{n+1} - a_1 + N = " + std::to_string(formula));
    }
    if (!a.out.empty()) {
      write_json_file(a.out, json{{"spec", encode(instance)}, {"result", encode(result)}});
      report.add_artifact(a.out);
    }
  } catch (const GapBelowCoveringTime& e) {
    report.check("precondition", false, e.what());
  } catch (const SpacingViolation& e) {
    report.check("precondition", false, e.what());
  } catch (const NotCoveringWithinBound& e) {
    report.check("precondition", false, e.what());
  } catch (const EmptyRefinement& e) {
    report.check("shadow", false, e.what());
  } catch (const NoPeriodicPointInRegion& e) {
    report.check("shadow", false, e.what());
  }
  return report;
}

Report cmd_shadow(const ShadowArgs& a) {
  json doc = read_json_argument(a.spec);
  std::string system_name = a.system;
  if (system_name.empty()) system_name = doc.value("system", std::string("doubling"));
  const json instance_json = doc.contains("spec") ? doc.at("spec") : doc;
  Report report("shadow", {{"system", system_name}, {"periodic", a.periodic}, {"spec", instance_json}});
  SystemChoice choice = parse_system_name(system_name);
  if (auto* f = std::get_if<interval::PiecewiseAffineMap>(&choice)) {
    return run_shadow(std::move(report), spec::IntervalSystem(*f), decode_interval_spec(instance_json), a);
  }
  return run_shadow(std::move(report), spec::ShiftSystem(std::get<ShiftSpace>(choice)),
                    decode_shift_spec(instance_json), a);
}

// --------------------------------------------------------- beta-atlas

struct AtlasArgs {
  std::string beta_min = "1.1";
  std::string beta_max = "2.5";
  int steps = 100;
  int digits = 48;
  std::vector<std::string> extra;
  unsigned threads = 0;
  std::string out;
  bool json = false;
};

Report cmd_beta_atlas(const AtlasArgs& a, std::ostream& out) {
  const Rational lo = parse_rational(a.beta_min);
  const Rational hi = parse_rational(a.beta_max);
  if (!(lo > 1) || !(lo < hi)) throw UsageError("need 1 < beta-min < beta-max");
  if (a.steps < 1) throw UsageError("steps must be positive");
  if (a.digits < 1) throw UsageError("digits must be positive");
  const unsigned threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  auto rows = beta_atlas(lo, hi, a.steps, a.digits, a.extra, threads);
  Report report("beta-atlas", {{"beta_min", format_rational(lo)},
                               {"beta_max", format_rational(hi)},
                               {"steps", a.steps},
                               {"digits", a.digits},
                               {"extra", a.extra}});
  const std::string csv = atlas_csv(rows);
  if (a.out.empty()) {
    out << csv;
  } else {
    std::ofstream file(a.out);
    if (!file) throw UsageError("cannot write " + a.out);
    file << csv;
    report.add_artifact(a.out);
  }
  std::size_t stable = 0;
  std::size_t errors = 0;
  std::size_t consistent = 0;
  for (const auto& r : rows) {
    stable += r.stable() ? 1 : 0;
    errors += r.error.empty() ? 0 : 1;
    consistent += r.error.empty() && r.verdict.spec_consistent ? 1 : 0;
  }
  report.info("rows", std::to_string(rows.size()));
  report.info("spec_consistent_rows", std::to_string(consistent));
  const double fraction = rows.empty() ? 1.0 : static_cast<double>(stable) / static_cast<double>(rows.size());
  std::ostringstream frac;
  frac << stable << "/" << rows.size();
  report.check("verdict_stable_under_doubled_depth", fraction >= 0.95, frac.str());
  report.check("rows_computed", errors == 0, std::to_string(errors) + " errors");
  return report;
}

// ------------------------------------------------------------ example

struct ExampleArgs {
  std::string name;
  int level = 3;
  int depth = 6;
  int period = 6;
  int covering_n = 4;
  int samples = 20;
  std::uint64_t seed = 1;
  int gap = 3;
  int truncation = 0;
  int n = 12;
  int max_code = 10000;
  std::string out_dir;
  bool json = false;
};

std::optional<std::filesystem::path> artifact(const ExampleArgs& a, const std::string& file) {
  if (a.out_dir.empty()) return std::nullopt;
  return std::filesystem::path(a.out_dir) / file;
}

Report example_feliks(const ExampleArgs& a) {
  Report report("example feliks", {{"level", a.level},
                                   {"depth", a.depth},
                                   {"period", a.period},
                                   {"covering_n", a.covering_n},
                                   {"samples", a.samples},
                                   {"seed", a.seed}});
  const auto approx = constructions::feliks_cantor(a.level, a.depth);
  const auto r = constructions::feliks_verify(approx, a.period, a.covering_n, a.samples, a.seed);
  std::string ledger;
  for (const auto& e : approx.ledger) ledger += (ledger.empty() ? "" : ", ") + format_rational(e.point);
  report.info("ledger", ledger);
  report.info("remaining_measure", format_rational(approx.remaining.measure()));
  report.check("ledger_scope_excluded", r.scope_survivors.empty(),
               std::to_string(r.scope_survivors.size()) + " enumerated points in scope survive");
  report.info("surviving_periodic", std::to_string(r.surviving_periodic.size()) + " points of period <= " +
                                        std::to_string(a.period) + " outside the ledger scope");
  bool nested = true;
  if (a.level > 0) nested = nested && constructions::feliks_cantor(a.level - 1, a.depth).remaining.includes(approx.remaining);
  if (a.depth > 0) nested = nested && constructions::feliks_cantor(a.level, a.depth - 1).remaining.includes(approx.remaining);
  report.check("nested_in_level_and_depth", nested);
  const Rational bound = 2 * approx.zeta0 * pow2(-approx.depth);
  report.check("invariance_defect", r.invariance_defect && *r.invariance_defect <= bound,
               (r.invariance_defect ? format_rational(*r.invariance_defect) : std::string("undefined")) +
                   " <= " + format_rational(bound));
  report.check("slack_within_deepest_generation", r.slack_measure <= r.deepest_generation_measure,
               format_rational(r.slack_measure) + " <= " + format_rational(r.deepest_generation_measure));
  std::size_t within = 0;
  std::size_t contains = 0;
  for (const auto& s : r.covering) {
    within += s.within_shallower ? 1 : 0;
    contains += s.contains_remaining ? 1 : 0;
  }
  const std::string n = std::to_string(r.covering.size());
  report.check("covering_image_within_shallower", within == r.covering.size(), std::to_string(within) + "/" + n);
  report.check("covering_image_contains_remaining", contains == r.covering.size(), std::to_string(contains) + "/" + n);
  if (auto path = artifact(a, "feliks.json")) {
    write_json_file(*path, encode(approx));
    report.add_artifact(path->string());
  }
  return report;
}

Report example_rome(const ExampleArgs& a) {
  Report report("example rome", {{"max_code", a.max_code}});
  bool round_trip = true;
  for (int n = 0; n <= a.max_code && round_trip; ++n) {
    round_trip = constructions::rome_decode(constructions::rome_encode(n).bits()) == n;
  }
  report.check("encode_decode_round_trip", round_trip, "0.." + std::to_string(a.max_code));
  const std::vector<int> sample{1, 0, 2, 5, 0, 0, 3};
  const auto bits = constructions::rome_embed(sample);
  report.check("embed_parse_round_trip", constructions::rome_parse(bits) == sample, join_digits(bits));
  report.check("return_time", constructions::rome_return_time({0, 1, 1, 0}) == 3, "tau(0110) = 3");
  if (auto path = artifact(a, "rome.json")) {
    write_json_file(*path, json{{"symbols", sample}, {"bits", bits}});
    report.add_artifact(path->string());
  }
  return report;
}

Report example_sigma_graph(const ExampleArgs& a) {
  const int m = a.truncation > 0 ? a.truncation : a.gap + 2;
  Report report("example sigma-graph", {{"gap", a.gap}, {"truncation", m}});
  const auto space = ShiftSpace::countdown_graph(m);
  const auto w = spec::spec_failure_witness(space, a.gap);
  report.info("witness_start_symbol", "n=" + std::to_string(w.start_symbol));
  report.info("reachable_at_gap", describe_symbols(w.reachable.back()));
  report.check("symbol_1_unreachable", w.target_unreachable);
  bool refused = false;
  try {
    spec::shadow(spec::ShiftSystem(space), w.spec, {a.gap, 64});
  } catch (const EmptyRefinement&) {
    refused = true;
  }
  report.check("solver_finds_no_shadow", refused);
  if (auto path = artifact(a, "sigma_graph_witness.json")) {
    write_json_file(*path, json{{"space", encode(space)},
                                {"start_symbol", w.start_symbol},
                                {"reachable", w.reachable},
                                {"spec", encode(w.spec)}});
    report.add_artifact(path->string());
  }
  return report;
}

Report example_lindenstrauss(const ExampleArgs& a) {
  using constructions::Letters;
  using constructions::Membership;
  Report report("example lindenstrauss", {{"depth", 1024}});
  Letters interleaved;
  for (int t : constructions::thue_morse(64)) {
    interleaved.push_back(0);
    interleaved.push_back(t);
  }
  report.check("thue_morse_word_consistent",
               constructions::lindenstrauss_membership(interleaved).verdict == Membership::consistent);
  report.check("consecutive_zeros_rejected",
               constructions::lindenstrauss_membership({1, 0, 0, 2}).verdict == Membership::rejected);
  const auto cube = constructions::lindenstrauss_membership({1, 0, 1, 0, 1});
  report.check("cube_111_rejected", cube.verdict == Membership::rejected, cube.reason);
  if (auto path = artifact(a, "lindenstrauss.json")) {
    write_json_file(*path, json{{"word", interleaved}, {"suppressed", constructions::pi_suppress(interleaved)}});
    report.add_artifact(path->string());
  }
  return report;
}

Report example_petersen(const ExampleArgs& a) {
  Report report("example petersen", {{"n", a.n}});
  const auto full = ShiftSpace::full_shift(2);
  const double h = symbolic::entropy_estimate(full, a.n, Rational(1));
  const double rel = std::abs(h - std::log(2.0)) / std::log(2.0);
  std::ostringstream value;
  value << h << " (log 2 = " << std::log(2.0) << ")";
  report.check("entropy_estimate_near_log2", rel <= 0.06, value.str());
  const auto bound = symbolic::leo_entropy_bound_check(full, 1, ratio(1, 2), 8);
  report.check("separated_sets_grow_like_2^k", bound.pass,
               "s(kN, 1/2) >= 2^k for k <= 8, covering precondition " +
                   std::string(bound.leo_precondition ? "holds" : "fails"));
  if (auto path = artifact(a, "petersen.json")) {
    json rows = json::array();
    for (const auto& r : bound.rows) rows.push_back({{"k", r.k}, {"separated", r.separated}, {"bound", r.bound}});
    write_json_file(*path, json{{"entropy_estimate", h}, {"rows", rows}});
    report.add_artifact(path->string());
  }
  return report;
}

Report cmd_example(const ExampleArgs& a) {
  if (a.name == "feliks") return example_feliks(a);
  if (a.name == "rome") return example_rome(a);
  if (a.name == "sigma-graph") return example_sigma_graph(a);
  if (a.name == "lindenstrauss") return example_lindenstrauss(a);
  if (a.name == "petersen") return example_petersen(a);
  throw UsageError("unknown example \"" + a.name + "\"");
}

}  // namespace

// ------------------------------------------------------------ parsing

IntervalSet parse_cli_interval(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 2) throw ParseError("interval must be written lo:hi, got \"" + text + "\"");
  const Rational lo = parse_rational(parts[0]);
  const Rational hi = parse_rational(parts[1]);
  if (lo < 0 || hi > 1 || !(lo < hi)) throw ParseError("interval " + text + " must satisfy 0 <= lo < hi <= 1");
  return IntervalSet::half_open(lo, hi);
}

interval::BetaValue parse_beta(const std::string& text) {
  if (text == "golden") return interval::BetaValue::golden_ratio(128);
  const Rational beta = parse_rational(text);
  if (!(beta > 1)) throw ParseError("beta must exceed 1");
  return interval::BetaValue::exact(beta);
}

interval::PiecewiseAffineMap parse_map_name(const std::string& name) {
  auto choice = parse_system_name(name);
  if (auto* f = std::get_if<interval::PiecewiseAffineMap>(&choice)) return *f;
  throw ParseError("\"" + name + "\" names a shift space, not an interval map");
}

SystemChoice parse_system_name(const std::string& name) {
  const auto parts = split(name, ':');
  const std::string& head = parts.front();
  if (head == "doubling" && parts.size() == 1) return interval::doubling_map();
  if (head == "beta" && parts.size() == 2) return interval::beta_map(parse_beta(parts[1]).approximation());
  if (head == "example1" && parts.size() <= 2) {
    const int levels = parts.size() == 2 ? std::stoi(parts[1]) : 3;
    return constructions::replicated_fold_map(levels).map;
  }
  if (head == "example2" && parts.size() == 1) return constructions::invariant_interval_map();
  if (head == "shift") {
    if (parts.size() == 3 && parts[1] == "full") return ShiftSpace::full_shift(std::stoi(parts[2]));
    if (parts.size() == 2 && parts[1] == "golden") return ShiftSpace::golden_mean();
    if (parts.size() == 2 && parts[1] == "fixed") return ShiftSpace::fixed_point();
    if (parts.size() == 3 && parts[1] == "countdown") return ShiftSpace::countdown_graph(std::stoi(parts[2]));
  }
  if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
    const json j = read_json_file(name);
    if (j.contains("kind")) return decode_shift_space(j);
    return decode_map(j);
  }
  throw ParseError("unknown system \"" + name + "\"");
}

// --------------------------------------------------------------- atlas

std::vector<AtlasRow> beta_atlas(const Rational& beta_min, const Rational& beta_max, int steps, int digits,
                                 const std::vector<std::string>& extra, unsigned threads) {
  std::vector<std::string> labels;
  std::vector<interval::BetaValue> values;
  for (int i = 0; i < steps; ++i) {
    Rational beta = steps == 1 ? beta_min : Rational(beta_min + (beta_max - beta_min) * i / (steps - 1));
    labels.push_back(format_rational(beta));
    values.push_back(interval::BetaValue::exact(beta));
  }
  for (const std::string& e : extra) {
    labels.push_back(e);
    values.push_back(parse_beta(e));
  }
  std::vector<AtlasRow> rows(values.size(), AtlasRow{"", interval::BetaValue::exact(2), {}, {}, {}, {}, {}});
  const IntervalSet reference = IntervalSet::half_open(0, ratio(1, 16));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < values.size(); i = next++) {
      AtlasRow row{labels[i], values[i], {}, {}, {}, {}, {}};
      try {
        row.digits = interval::beta_expansion_of_one(values[i], digits).digits;
        row.verdict = interval::classify_specification(values[i], digits);
        row.verdict_doubled = interval::classify_specification(values[i], 2 * digits);
        const auto cert = interval::leo_certify(interval::beta_map(values[i].approximation()), reference, 64);
        row.leo_n = cert.covering_n;
      } catch (const Error& e) {
        row.error = e.what();
      }
      rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(values.size())));
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string atlas_csv(const std::vector<AtlasRow>& rows) {
  std::ostringstream out;
  out << "beta,beta_approx,quasi_greedy_digits,max_zero_run,verdict,verdict_doubled_depth,stable,leo_n,error\n";
  out.precision(17);
  for (const auto& r : rows) {
    out << r.label << "," << r.beta.to_double() << "," << join_digits(r.digits) << ",";
    if (r.error.empty()) {
      out << r.verdict.max_zero_run << "," << r.verdict.label() << "," << r.verdict_doubled.label() << ","
          << (r.stable() ? "yes" : "no") << "," << (r.leo_n ? std::to_string(*r.leo_n) : std::string("none")) << ",";
    } else {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      out << ",,,no,," << msg;
    }
    out << "\n";
  }
  return out.str();
}

// ----------------------------------------------------------------- cli

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dynamics toolkit: covering, shadowing, beta expansions and worked examples", "leodyn"};
  app.require_subcommand(1);

  LeoArgs leo;
  auto* leo_cmd = app.add_subcommand("leo", "Certify that a map's iterates carry an interval onto [0,1)");
  leo_cmd->add_option("--map", leo.map, "doubling | beta:<b> | example1[:levels] | example2 | file.json");
  leo_cmd->add_option("--interval", leo.interval, "half-open interval lo:hi, e.g. 0/1:1/2")->required();
  leo_cmd->add_option("--max-n", leo.max_n, "largest iterate tried")->check(CLI::NonNegativeNumber);
  leo_cmd->add_flag("--json", leo.json, "print the report as JSON");

  ShadowArgs sh;
  auto* sh_cmd = app.add_subcommand("shadow", "Find a point shadowing an N-spaced specification");
  sh_cmd->add_option("--system", sh.system, "map name, shift:<...>, or JSON file (default: the input's \"system\" key)");
  sh_cmd->add_option("--spec", sh.spec, "specification JSON file or inline JSON")->required();
  sh_cmd->add_flag("--periodic", sh.periodic, "require an exactly periodic shadowing point");
  sh_cmd->add_option("--out", sh.out, "write the certificate JSON here");
  sh_cmd->add_option("--max-covering-time", sh.max_covering_time, "search bound for the covering time");
  sh_cmd->add_flag("--json", sh.json, "print the report as JSON");

  AtlasArgs at;
  auto* at_cmd = app.add_subcommand("beta-atlas", "Sweep beta: expansion of 1, zero runs, verdicts, covering times");
  at_cmd->add_option("--beta-min", at.beta_min, "smallest beta (rational or decimal)");
  at_cmd->add_option("--beta-max", at.beta_max, "largest beta");
  at_cmd->add_option("--steps", at.steps, "number of evenly spaced values");
  at_cmd->add_option("--digits", at.digits, "digits of the expansion of 1");
  at_cmd->add_option("--beta", at.extra, "extra values (rational or golden), repeatable");
  at_cmd->add_option("--threads", at.threads, "worker threads (default: hardware)");
  at_cmd->add_option("--out", at.out, "write the CSV here instead of stdout");
  at_cmd->add_flag("--json", at.json, "print the report as JSON");

  ExampleArgs ex;
  auto* ex_cmd = app.add_subcommand("example", "Generate and verify a worked example");
  ex_cmd->add_option("name", ex.name, "feliks | rome | sigma-graph | lindenstrauss | petersen")->required();
  ex_cmd->add_option("--level", ex.level, "feliks: number of removal levels");
  ex_cmd->add_option("--depth", ex.depth, "feliks: preimage depth");
  ex_cmd->add_option("--period", ex.period, "feliks: periodic points checked up to this period");
  ex_cmd->add_option("--covering-n", ex.covering_n, "feliks: iterate used in the covering check");
  ex_cmd->add_option("--samples", ex.samples, "feliks: sampled centres");
  ex_cmd->add_option("--seed", ex.seed, "feliks: sampling seed");
  ex_cmd->add_option("--gap", ex.gap, "sigma-graph: gap N");
  ex_cmd->add_option("--truncation", ex.truncation, "sigma-graph: largest symbol (default N+2)");
  ex_cmd->add_option("--n", ex.n, "petersen: word length");
  ex_cmd->add_option("--max-code", ex.max_code, "rome: round-trip range");
  ex_cmd->add_option("--out-dir", ex.out_dir, "write JSON artifacts here");
  ex_cmd->add_flag("--json", ex.json, "print the report as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (leo_cmd->parsed()) {
      Report r = cmd_leo(leo);
      emit(r, leo.json, out);
      return r.exit_code();
    }
    if (sh_cmd->parsed()) {
      Report r = cmd_shadow(sh);
      emit(r, sh.json, out);
      return r.exit_code();
    }
    if (at_cmd->parsed()) {
      Report r = cmd_beta_atlas(at, out);
      // With the CSV on stdout the report goes to stderr.
      emit(r, at.json, at.out.empty() ? err : out);
      return r.exit_code();
    }
    Report r = cmd_example(ex);
    emit(r, ex.json, out);
    return r.exit_code();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidMap& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace leodyn::cli
