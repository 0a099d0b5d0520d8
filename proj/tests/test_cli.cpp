#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "leodyn/cli/commands.hpp"
#include "leodyn/constructions/examples.hpp"
#include "leodyn/core/errors.hpp"
#include "leodyn/specification/witness.hpp"
#include "support.hpp"

using namespace leodyn;
using namespace leodyn::cli;
using leodyn::interval::Interval;
using leodyn::interval::IntervalSet;
using leodyn::symbolic::SequencePoint;
using leodyn::symbolic::ShiftSpace;
using testsupport::q;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
  args.push_back("--json");
  Run r = run(args);
  REQUIRE(r.code == expected_code);
  return json::parse(r.out);
}

std::string verdict(const json& report, const std::string& name) {
  for (const json& v : report.at("verdicts")) {
    if (v.at("name") == name) return v.at("status").get<std::string>() + " " + v.at("value").get<std::string>();
  }
  return "missing";
}

template <class T, class Decode>
void round_trip(const T& value, Decode decode) {
  const json encoded = encode(value);
  const json reparsed = json::parse(encoded.dump());
  CHECK(decode(reparsed) == value);
}

}  // namespace

TEST_SUITE("cli-commands") {
  TEST_CASE("leo") {
    CHECK(verdict(run_json({"leo", "--map", "doubling", "--interval", "0/1:1/2"}, 0), "leo") == "pass N=1");
    json beta = run_json({"leo", "--map", "beta:3/2", "--interval", "1/4:1/3", "--max-n", "64"}, 0);
    // Oracle: the exact image chain reaches [0,1) at the reported N.
    auto f = interval::beta_map(q(3, 2));
    IntervalSet img = IntervalSet::half_open(q(1, 4), q(1, 3));
    int n = 0;
    while (img != IntervalSet::unit()) {
      img = f.image(img);
      ++n;
    }
    CHECK(verdict(beta, "leo") == "pass N=" + std::to_string(n));
    CHECK(n <= 64);
    json stuck = run_json({"leo", "--map", "example2", "--interval", "1/2:3/4"}, 1);
    CHECK(verdict(stuck, "leo").find("terminal [1/3,1/1)") != std::string::npos);
  }

  TEST_CASE("shadow") {
    const std::string two = R"({"gap":8,"eps":"1/8","segments":[[0,2,"0"],[10,12,"1/3"]]})";
    json periodic = run_json({"shadow", "--spec", two, "--periodic"}, 0);
    CHECK(verdict(periodic, "period") == "pass 30");
    CHECK(verdict(periodic, "max_deviation").rfind("pass", 0) == 0);

    json single = run_json({"shadow", "--spec", R"({"gap":3,"eps":"1/8","segments":[[0,3,"0"]]})"}, 0);
    CHECK(verdict(single, "representative") == "info \"0/1\"");

    Run gated = run({"shadow", "--spec", R"({"gap":2,"eps":"1/8","segments":[[0,2,"0"],[5,7,"1/3"]]})"});
    CHECK(gated.code == 1);
    CHECK(gated.out.find("covering_time = 3") != std::string::npos);

    json shift = run_json({"shadow", "--system", "shift:full:2", "--spec",
                           R"({"gap":1,"eps":"1/2","segments":[[0,2,{"prefix":[1,1,0],"cycle":[1]}],[4,5,{"prefix":[1,1,1,1,0,1],"cycle":[0]}]]})"},
                          0);
    CHECK(verdict(shift, "shadow").rfind("pass", 0) == 0);

    const auto dir = std::filesystem::temp_directory_path() / "leodyn_cli_test";
    std::filesystem::create_directories(dir);
    const auto cert = (dir / "cert.json").string();
    json written = run_json({"shadow", "--spec", two, "--out", cert}, 0);
    REQUIRE(written.at("artifacts").size() == 1);
    std::ifstream in(cert);
    json doc = json::parse(in);
    auto result = decode_interval_shadow(doc.at("result"));
    auto spec = decode_interval_spec(doc.at("spec"));
    CHECK(spec::max_deviation(spec::IntervalSystem(interval::doubling_map()), spec, result.representative) <= spec.eps);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"nope"}).code == 2);
    CHECK(run({"leo"}).code == 2);
    CHECK(run({"leo", "--interval", "1/2"}).code == 2);
    CHECK(run({"leo", "--interval", "a:b"}).code == 2);
    CHECK(run({"leo", "--map", "beta:1/2", "--interval", "0:1/2"}).code == 2);
    CHECK(run({"shadow", "--spec", "{not json"}).code == 2);
    CHECK(run({"shadow", "--spec", "/nonexistent/spec.json"}).code == 2);
    CHECK(run({"shadow", "--spec", R"({"gap":1,"segments":[]})"}).code == 2);
    CHECK(run({"example", "unknown"}).code == 2);
    CHECK(run({"beta-atlas", "--beta-min", "2", "--beta-max", "1.5"}).code == 2);
    CHECK(run({"beta-atlas", "--beta-min", "1", "--beta-max", "1.5"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("examples") {
    json sigma = run_json({"example", "sigma-graph", "--gap", "3"}, 0);
    CHECK(verdict(sigma, "witness_start_symbol") == "info n=5");
    CHECK(verdict(sigma, "reachable_at_gap") == "info {2,3,4,5}");
    json petersen = run_json({"example", "petersen", "--n", "12"}, 0);
    CHECK(verdict(petersen, "entropy_estimate_near_log2").rfind("pass", 0) == 0);
    CHECK(verdict(run_json({"example", "rome"}, 0), "encode_decode_round_trip") == "pass 0..10000");
    run_json({"example", "lindenstrauss"}, 0);
    // The covering containment is a genuine failure at every sampled centre.
    json feliks = run_json({"example", "feliks"}, 1);
    CHECK(verdict(feliks, "ledger_scope_excluded").rfind("pass", 0) == 0);
    CHECK(verdict(feliks, "covering_image_within_shallower") == "pass 20/20");
    CHECK(verdict(feliks, "covering_image_contains_remaining").rfind("fail", 0) == 0);
    // Deterministic given flags.
    CHECK(run({"example", "feliks", "--seed", "5"}).out == run({"example", "feliks", "--seed", "5"}).out);
  }

  TEST_CASE("artifacts round-trip") {
    const auto dir = std::filesystem::temp_directory_path() / "leodyn_cli_artifacts";
    std::filesystem::remove_all(dir);
    json feliks = run_json({"example", "feliks", "--out-dir", dir.string()}, 1);
    REQUIRE(feliks.at("artifacts").size() == 1);
    std::ifstream in(feliks.at("artifacts")[0].get<std::string>());
    CHECK(decode_cantor(json::parse(in)) == constructions::feliks_cantor(3, 6));
  }
}

TEST_SUITE("beta-atlas") {
  TEST_CASE("rows") {
    auto rows = beta_atlas(q(11, 10), q(5, 2), 100, 48, {"golden", "2"}, 3);
    REQUIRE(rows.size() == 102);
    for (std::size_t i = 1; i < 100; ++i) CHECK(rows[i - 1].beta.lower() < rows[i].beta.lower());
    CHECK(rows.front().beta.lower() == q(11, 10));
    CHECK(rows[99].beta.lower() == q(5, 2));
    CHECK(rows[100].verdict.max_zero_run == 1);
    CHECK(rows[100].verdict.spec_consistent);
    CHECK(rows[101].verdict.max_zero_run == 0);
    std::size_t stable = 0;
    for (const auto& r : rows) stable += r.stable() ? 1 : 0;
    CHECK(stable * 100 >= 95 * rows.size());
    // Identical output regardless of the worker count.
    CHECK(atlas_csv(beta_atlas(q(11, 10), q(5, 2), 20, 32, {"golden"}, 1)) ==
          atlas_csv(beta_atlas(q(11, 10), q(5, 2), 20, 32, {"golden"}, 4)));
  }

  TEST_CASE("csv format") {
    Run r = run({"beta-atlas", "--beta-min", "1.5", "--beta-max", "2", "--steps", "3", "--digits", "8"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> all;
    while (std::getline(lines, line)) all.push_back(line);
    REQUIRE(all.size() == 4);
    CHECK(all[0].rfind("beta,", 0) == 0);
    CHECK(all[3].rfind("2/1,2,11111111,0,spec-consistent", 0) == 0);
    CHECK(r.out.find('\r') == std::string::npos);
  }
}

TEST_SUITE("serialization") {
  TEST_CASE("rationals and intervals") {
    CHECK(encode(q(-3, 6)) == "-1/2");
    CHECK(decode_rational(json(3)) == 3);
    CHECK_THROWS_AS(decode_rational(json(1.5)), ParseError);
    CHECK(encode(Interval::half_open(0, q(1, 2))) == json::array({"0/1", "1/2"}));
    CHECK(encode(Interval::open(0, q(1, 2))) == json::array({"0/1", "1/2", "()"}));
    CHECK_THROWS_AS(decode_interval(json::array({"0", "1", "<>"})), ParseError);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      round_trip(IntervalSet(testsupport::random_intervals(rng, 3, 40)), decode_interval_set);
    }
  }

  TEST_CASE("maps and shift spaces") {
    round_trip(interval::doubling_map(), decode_map);
    round_trip(interval::beta_map(q(5, 2)), decode_map);
    round_trip(constructions::replicated_fold_map(3).map, decode_map);
    round_trip(constructions::invariant_interval_map(), decode_map);
    round_trip(ShiftSpace::golden_mean(), decode_shift_space);
    round_trip(ShiftSpace::countdown_graph(6), decode_shift_space);
    round_trip(SequencePoint{{0, 2}, {1, 0}}, decode_sequence_point);
    CHECK_THROWS_AS(decode_map(json{{"topology", "circle"}}), ParseError);
    CHECK_THROWS_AS(decode_shift_space(json{{"kind", "other"}}), ParseError);
    auto g = ShiftSpace::golden_mean();
    symbolic::CylinderSet c(g, {{0, 1}, {1, 0, 0}});
    CHECK(decode_cylinder_set(g, json::parse(encode(c).dump())) == c);
    CHECK(decode_cylinder_set(g, encode(symbolic::CylinderSet::whole())).is_whole());
  }

  TEST_CASE("specifications and shadow results") {
    std::mt19937_64 rng(5);
    spec::IntervalSystem sys(interval::doubling_map());
    for (int trial = 0; trial < 20; ++trial) {
      auto s = testsupport::random_spec(rng, 3, 5, 4, q(1, 16));
      round_trip(s, decode_interval_spec);
      auto r = spec::periodic_shadow(sys, s, {4, 64});
      round_trip(r, decode_interval_shadow);
      round_trip(spec::periodic_extend(sys, s), decode_interval_spec);
    }
    auto w = spec::spec_failure_witness(ShiftSpace::countdown_graph(6), 3);
    round_trip(w.spec, decode_shift_spec);
    spec::ShiftSystem shift(ShiftSpace::full_shift(2));
    spec::SpecificationInstance<SequencePoint> s;
    s.gap = 1;
    s.eps = q(1, 2);
    s.segments = {{0, 2, {{1, 1, 0}, {1}}}, {4, 5, {{1, 1, 1, 1, 0, 1}, {0}}}};
    auto r = spec::periodic_shadow(shift, s);
    CHECK(decode_shift_shadow(shift.space(), json::parse(encode(r).dump())) == r);
  }

  TEST_CASE("constructions and expansions") {
    round_trip(constructions::feliks_cantor(2, 4), decode_cantor);
    round_trip(interval::BetaValue::golden_ratio(), decode_beta_value);
    round_trip(interval::BetaValue::exact(q(5, 2)), decode_beta_value);
    round_trip(interval::beta_expansion_of_one(interval::BetaValue::golden_ratio(), 12), decode_beta_expansion);
    round_trip(interval::beta_expansion_of_one(interval::BetaValue::exact(q(3, 2)), 12,
                                               interval::ExpansionConvention::greedy),
               decode_beta_expansion);
  }

  TEST_CASE("reports") {
    Report r("leo", {{"map", "doubling"}});
    r.check("covering", true, "N=1");
    r.info("iterations", "1");
    CHECK_THROWS_AS(r.check("covering", false), InvalidArgument);
    r.add_artifact("out.json");
    CHECK(r.passed());
    CHECK(Report::from_json(json::parse(r.to_json().dump())) == r);
    r.check("other", false);
    CHECK(!r.passed());
    CHECK(r.exit_code() == 1);
    CHECK(r.human().find("[FAIL] other") != std::string::npos);
    CHECK_THROWS_AS(Report::from_json(json{{"command", "x"}}), ParseError);
  }
}
