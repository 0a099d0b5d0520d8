#include <doctest.h>

#include <random>

#include "leodyn/constructions/examples.hpp"
#include "leodyn/core/errors.hpp"
#include "leodyn/interval/dynamics.hpp"
#include "support.hpp"

using namespace leodyn;
using namespace leodyn::interval;
using testsupport::q;

TEST_SUITE("rational") {
  TEST_CASE("parse and format round-trip") {
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-2/4") == q(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("1.25") == q(5, 4));
    CHECK(parse_rational("-0.5") == q(-1, 2));
    CHECK(format_rational(q(2, 4)) == "1/2");
    CHECK(format_rational(Rational(3)) == "3/1");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
  }

  TEST_CASE("floor, ceil and powers of two") {
    CHECK(floor_of(q(-1, 2)) == -1);
    CHECK(ceil_of(q(-1, 2)) == 0);
    CHECK(frac_of(q(7, 3)) == q(1, 3));
    CHECK(pow2(-3) == q(1, 8));
    CHECK(pow2(4) == 16);
  }

  TEST_CASE("simplest_between matches a denominator scan") {
    CHECK(simplest_between(0, 1, false, false) == q(1, 2));
    CHECK(simplest_between(q(1, 3), q(2, 3), true, true) == q(1, 2));
    CHECK(simplest_between(0, q(1, 4), false, false) == q(1, 5));
    CHECK(simplest_between(0, 1, true, false) == 0);
    // Oracle: scan denominators upward, numerators upward.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      auto ivs = testsupport::random_intervals(rng, 1, 97);
      Interval iv = ivs.front();
      if (iv.empty()) continue;
      Rational expected;
      bool found = false;
      for (long den = 1; den <= 400 && !found; ++den) {
        for (long num = 0; num <= den && !found; ++num) {
          if (iv.contains(q(num, den))) {
            expected = q(num, den);
            found = true;
          }
        }
      }
      REQUIRE(found);
      CHECK(simplest_between(iv.lo, iv.hi, iv.lo_closed, iv.hi_closed) == expected);
    }
  }
}

TEST_SUITE("interval-set") {
  TEST_CASE("canonical form merges touching parts") {
    IntervalSet s{Interval::half_open(q(1, 4), q(1, 2)), Interval::half_open(0, q(1, 4)),
                  Interval::open(q(3, 4), 1), Interval::point(q(3, 4))};
    CHECK(s == IntervalSet{Interval::half_open(0, q(1, 2)), Interval::half_open(q(3, 4), 1)});
    IntervalSet gap{Interval::open(0, q(1, 2)), Interval::open(q(1, 2), 1)};
    CHECK(gap.size() == 2);
    CHECK(!gap.contains(q(1, 2)));
    CHECK(gap.same_up_to_endpoints(IntervalSet{Interval::half_open(0, 1)}) == false);
    CHECK(IntervalSet{Interval::open(0, 1)}.same_up_to_endpoints(IntervalSet::unit()));
  }

  TEST_CASE("boolean operations agree with pointwise membership") {
    std::mt19937_64 rng(11);
    const long den = 24;
    const auto pts = testsupport::probes(den);
    for (int trial = 0; trial < 200; ++trial) {
      auto ra = testsupport::random_intervals(rng, 3, den);
      auto rb = testsupport::random_intervals(rng, 3, den);
      IntervalSet a(ra);
      IntervalSet b(rb);
      IntervalSet u = a.unite(b);
      IntervalSet i = a.intersect(b);
      IntervalSet d = a.subtract(b);
      IntervalSet c = a.complement();
      for (const Rational& x : pts) {
        bool in_a = testsupport::raw_contains(ra, x);
        bool in_b = testsupport::raw_contains(rb, x);
        REQUIRE(a.contains(x) == in_a);
        CHECK(u.contains(x) == (in_a || in_b));
        CHECK(i.contains(x) == (in_a && in_b));
        CHECK(d.contains(x) == (in_a && !in_b));
        CHECK(c.contains(x) == !in_a);
      }
      CHECK(u.includes(a));
      CHECK(a.includes(i));
      CHECK(a.unite(b) == b.unite(a));
      CHECK(a.intersect(b) == b.intersect(a));
      CHECK(d.unite(i) == a);
    }
  }

  TEST_CASE("measure of disjoint pieces adds") {
    IntervalSet s{Interval::half_open(0, q(1, 4)), Interval::open(q(1, 2), q(5, 8)), Interval::point(q(7, 8))};
    CHECK(s.measure() == q(3, 8));
  }

  TEST_CASE("interval string syntax round-trips") {
    Interval iv{q(1, 3), q(3, 4), false, true};
    CHECK(to_string(iv) == "(1/3,3/4]");
    CHECK(parse_interval(to_string(iv)) == iv);
    CHECK_THROWS_AS(parse_interval("1/3,3/4"), ParseError);
  }
}

TEST_SUITE("affine-map") {
  TEST_CASE("evaluation") {
    CHECK(beta_map(2)(q(1, 3)) == q(2, 3));
    CHECK(beta_map(3)(q(1, 2)) == q(1, 2));
    auto f0 = constructions::replicated_fold_map(0).map;
    CHECK(f0(q(1, 6)) == q(1, 2));
    CHECK(constructions::invariant_interval_map()(q(2, 3)) == q(1, 3));
    CHECK_THROWS_AS(beta_map(2)(1), PointOutsideDomain);
    CHECK_THROWS_AS(beta_map(2)(q(-1, 2)), PointOutsideDomain);
    CHECK_THROWS_AS(constructions::invariant_interval_map()(q(1, 3)), ValueOutsideDomain);
    CHECK(doubling_map()(q(3, 4)) == q(1, 2));
  }

  TEST_CASE("invalid branch tables are rejected") {
    CHECK_THROWS_AS(PiecewiseAffineMap({{0, q(1, 2), 2, 0}}, Topology::circle), InvalidMap);
    CHECK_THROWS_AS(PiecewiseAffineMap({{0, 1, 0, q(1, 2)}}, Topology::interval), InvalidMap);
    CHECK_THROWS_AS(PiecewiseAffineMap({{0, 1, 2, 0}}, Topology::interval), InvalidMap);
    CHECK_THROWS_AS(PiecewiseAffineMap({{0, q(1, 2), 2, 0}, {q(2, 3), 1, 1, 0}}, Topology::interval), InvalidMap);
    CHECK_THROWS_AS(PiecewiseAffineMap({{0, 1, -2, 2}}, Topology::interval, true), InvalidMap);
  }

  TEST_CASE("mod-one branches split at integer crossings") {
    auto f = beta_map(q(5, 2));
    REQUIRE(f.pieces().size() == 3);
    CHECK(f.pieces()[1].lo == q(2, 5));
    CHECK(f.pieces()[2].intercept == -2);
  }

  // Oracle: images of a dense sample of S, compared on a grid fine enough
  // that sample images land exactly on grid points.
  void check_image_by_sampling(const PiecewiseAffineMap& f, const IntervalSet& s, long sample_den, long grid_den) {
    std::vector<bool> hit(static_cast<std::size_t>(grid_den), false);
    for (long k = 0; k < sample_den; ++k) {
      Rational x = q(k, sample_den);
      if (!s.contains(x)) continue;
      Rational y = f(x);
      Rational scaled = y * grid_den;
      REQUIRE(is_integer(scaled));
      hit[static_cast<std::size_t>(scaled.get_num().get_si())] = true;
    }
    IntervalSet img = f.image(s);
    for (long j = 0; j < grid_den; ++j) {
      Rational y = q(j, grid_den);
      // Interior grid points of the image must be hit; hit points must lie in the closure.
      if (hit[static_cast<std::size_t>(j)]) CHECK(img.closure().contains(y));
      if (img.interior().contains(y)) CHECK(hit[static_cast<std::size_t>(j)]);
    }
  }

  TEST_CASE("image examples") {
    CHECK(beta_map(2).image(IntervalSet::half_open(0, q(1, 4))) == IntervalSet::half_open(0, q(1, 2)));
    IntervalSet expected{Interval::half_open(0, q(1, 2)), Interval::half_open(q(3, 4), 1)};
    IntervalSet img = beta_map(3).image(IntervalSet::half_open(q(1, 4), q(1, 2)));
    CHECK(img == expected);
    check_image_by_sampling(beta_map(3), IntervalSet::half_open(q(1, 4), q(1, 2)), 3072, 1024);
    CHECK(beta_map(2).image(IntervalSet::unit()) == IntervalSet::unit());
    CHECK(beta_map(3).image(IntervalSet{}).empty());
  }

  TEST_CASE("preimage examples against forward checks") {
    IntervalSet pre = beta_map(2).preimage(IntervalSet::half_open(0, q(1, 2)));
    CHECK(pre == IntervalSet{Interval::half_open(0, q(1, 4)), Interval::half_open(q(1, 2), q(3, 4))});
    const IntervalSet target = IntervalSet::half_open(0, q(1, 2));
    for (long k = 0; k < 1024; ++k) {
      Rational x = q(k, 1024);
      CHECK(pre.contains(x) == target.contains(beta_map(2)(x)));
    }
    CHECK(beta_map(2).preimage(IntervalSet::unit()) == IntervalSet::unit());
    CHECK(beta_map(3).preimage(IntervalSet{}).empty());
  }

  IntervalSet exit_points(const PiecewiseAffineMap& f) {
    IntervalSet out;
    if (f.topology() == Topology::circle) return out;
    for (const auto& p : f.pieces()) {
      Rational x = (1 - p.intercept) / p.slope;
      if (x >= p.lo && x < p.hi) out = out.unite(IntervalSet{Interval::point(x)});
    }
    return out;
  }

  TEST_CASE("image is additive and adjoint to preimage") {
    std::vector<PiecewiseAffineMap> maps{doubling_map(), beta_map(q(3, 2)), beta_map(q(5, 2)),
                                         constructions::invariant_interval_map(),
                                         constructions::replicated_fold_map(2).map};
    std::mt19937_64 rng(5);
    for (const auto& f : maps) {
      for (int trial = 0; trial < 60; ++trial) {
        IntervalSet a(testsupport::random_intervals(rng, 2, 32));
        IntervalSet b(testsupport::random_intervals(rng, 2, 32));
        IntervalSet b_only = b.subtract(a);
        CHECK(f.image(a.unite(b_only)) == f.image(a).unite(f.image(b_only)));
        // Points sent to 1 on the interval topology leave the domain.
        IntervalSet a_in = a.subtract(exit_points(f));
        CHECK(f.preimage(f.image(a_in)).includes(a_in));
        CHECK(a.includes(f.image(f.preimage(a))));
        // Preimage membership is exact at probe points.
        IntervalSet pre = f.preimage(a);
        for (long k = 0; k < 128; ++k) {
          Rational x = q(k, 128);
          Rational y;
          try {
            y = f(x);
          } catch (const ValueOutsideDomain&) {
            continue;
          }
          CHECK(pre.contains(x) == a.contains(y));
        }
      }
    }
  }

  TEST_CASE("beta-map growth is exact on a single branch") {
    for (Rational beta : {q(3, 2), q(5, 2), Rational(3)}) {
      auto f = beta_map(beta);
      std::mt19937_64 rng(3);
      for (int trial = 0; trial < 50; ++trial) {
        auto parts = testsupport::random_intervals(rng, 1, 64);
        Interval iv = parts.front();
        IntervalSet j{iv};
        if (j.empty()) continue;
        // Stay inside one branch with a non-wrapping image.
        bool one_branch = false;
        for (const auto& p : f.pieces()) one_branch = one_branch || (iv.lo >= p.lo && iv.hi <= p.hi);
        if (!one_branch) continue;
        CHECK(f.image(j).measure() == beta * j.measure());
        CHECK(f.image(j).measure() >= f.min_abs_slope() * j.measure());
      }
    }
  }
}

TEST_SUITE("balls-and-bowen") {
  TEST_CASE("balls") {
    CHECK(ball(0, q(1, 4), Topology::circle) ==
          IntervalSet{Interval::half_open(0, q(1, 4)), Interval::open(q(3, 4), 1)});
    CHECK(ball(q(1, 2), q(1, 4), Topology::interval) == IntervalSet{Interval::open(q(1, 4), q(3, 4))});
    CHECK(ball(0, q(1, 4), Topology::interval) == IntervalSet::half_open(0, q(1, 4)));
    CHECK(ball(q(7, 8), q(1, 4), Topology::circle) ==
          IntervalSet{Interval::half_open(0, q(1, 8)), Interval::open(q(5, 8), 1)});
    CHECK(ball(q(1, 3), q(1, 2), Topology::circle) == IntervalSet::unit());
    CHECK_THROWS_AS(ball(0, 0, Topology::circle), BadRadius);
    CHECK_THROWS_AS(ball(0, q(3, 5), Topology::circle), BadRadius);
  }

  // Grid oracle: y ∈ B_n(x,ε) iff every iterate distance is below ε.
  bool bowen_member(const PiecewiseAffineMap& f, Rational x, Rational y, int n, const Rational& eps) {
    for (int i = 0; i < n; ++i) {
      if (distance(x, y, f.topology()) >= eps) return false;
      x = f(x);
      y = f(y);
    }
    return true;
  }

  TEST_CASE("Bowen ball examples") {
    auto f = doubling_map();
    CHECK(bowen_ball(f, 0, 1, q(1, 4)) == IntervalSet{Interval::half_open(0, q(1, 4)), Interval::open(q(3, 4), 1)});
    IntervalSet b2 = bowen_ball(f, 0, 2, q(1, 4));
    IntervalSet b3 = bowen_ball(f, 0, 3, q(1, 4));
    CHECK(b2 == IntervalSet{Interval::half_open(0, q(1, 8)), Interval::open(q(7, 8), 1)});
    CHECK(b3 == IntervalSet{Interval::half_open(0, q(1, 16)), Interval::open(q(15, 16), 1)});
    CHECK(b2.same_up_to_endpoints(IntervalSet{Interval::half_open(0, q(1, 8)), Interval::half_open(q(7, 8), 1)}));
    for (long k = 0; k < 4096; ++k) {
      Rational y = q(k, 4096);
      CHECK(b2.contains(y) == bowen_member(f, 0, y, 2, q(1, 4)));
      CHECK(b3.contains(y) == bowen_member(f, 0, y, 3, q(1, 4)));
    }
  }

  TEST_CASE("Bowen recursion, monotonicity and the shifted ball identity") {
    std::vector<PiecewiseAffineMap> maps{doubling_map(), beta_map(q(5, 2))};
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(0, 255);
    for (const auto& f : maps) {
      for (int trial = 0; trial < 25; ++trial) {
        Rational x = q(num(rng), 256);
        for (Rational eps : {q(1, 4), q(1, 8)}) {
          IntervalSet prev = bowen_ball(f, x, 1, eps);
          for (int n = 1; n <= 6; ++n) {
            IntervalSet next = bowen_ball(f, x, n + 1, eps);
            IntervalSet naive = prev.intersect(preimage_n(f, ball(iterate(f, x, n), eps, f.topology()), n));
            CHECK(next == naive);
            CHECK(prev.includes(next));
            prev = next;
          }
        }
      }
    }
  }

  TEST_CASE("doubling map: Bowen images are balls") {
    auto f = doubling_map();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(0, 1023);
    for (int trial = 0; trial < 40; ++trial) {
      Rational x = q(num(rng), 1024);
      for (int m = 2; m <= 4; ++m) {
        Rational eps = pow2(-m);
        for (int n = 1; n <= 10; ++n) {
          Rational fnx = iterate(f, x, n);
          // With the constraint at time n included the image is B(fⁿx, ε) ...
          CHECK(image_n(f, bowen_ball(f, x, n + 1, eps), n) == ball(fnx, eps, Topology::circle));
          // ... while Bₙ (times 0..n−1) expands once more, to radius 2ε.
          if (2 * eps < q(1, 2)) {
            CHECK(image_n(f, bowen_ball(f, x, n, eps), n) == ball(fnx, 2 * eps, Topology::circle));
          }
          CHECK(bowen_image_diam(f, x, n, eps) == std::min(Rational(4 * eps), q(1, 2)));
        }
      }
    }
  }

  TEST_CASE("Bowen image diameters") {
    auto f = doubling_map();
    // Independent oracle: B_1(0,1/8) is the open arc of length 1/4; one
    // doubling makes it an arc of length 1/2, whose circle diameter is 1/2.
    CHECK(bowen_image_diam(f, 0, 1, q(1, 8)) == q(1, 2));
    CHECK(bowen_image_diam(f, q(1, 3), 8, q(1, 8)) == q(1, 2));
    CHECK(bowen_image_diam(f, 0, 1, q(1, 2)) == q(1, 2));
    CHECK(bowen_image_diam(f, q(1, 3), 8, q(1, 16)) == q(1, 4));
  }

  TEST_CASE("diameter and Hausdorff distance") {
    CHECK(diameter(IntervalSet::half_open(q(1, 8), q(3, 8)), Topology::circle) == q(1, 4));
    CHECK(diameter(IntervalSet{Interval::half_open(0, q(1, 8)), Interval::half_open(q(7, 8), 1)}, Topology::circle) ==
          q(1, 4));
    CHECK(diameter(IntervalSet{Interval::half_open(0, q(1, 8)), Interval::half_open(q(7, 8), 1)}, Topology::interval) ==
          1);
    CHECK(diameter(IntervalSet{Interval::point(0), Interval::point(q(2, 5))}, Topology::circle) == q(2, 5));
    IntervalSet a = IntervalSet::half_open(0, q(1, 4));
    IntervalSet b = IntervalSet::half_open(q(1, 2), q(3, 4));
    CHECK(*hausdorff_distance(a, b, Topology::interval) == q(1, 2));
    // On the circle 1/8 ∈ a is 3/8 away from both ends of b.
    CHECK(*hausdorff_distance(a, b, Topology::circle) == q(3, 8));
    CHECK(*hausdorff_distance(a, a.unite(IntervalSet{Interval::point(q(3, 4))}), Topology::interval) == q(1, 2));
    CHECK(!hausdorff_distance(a, IntervalSet{}, Topology::circle).has_value());
  }
}

TEST_SUITE("predicates") {
  TEST_CASE("LEO certification") {
    auto f = doubling_map();
    CHECK(leo_certify(f, IntervalSet::half_open(0, q(1, 2)), 64).covering_n == 1);
    CHECK(leo_certify(f, IntervalSet::half_open(q(3, 8), q(1, 2)), 64).covering_n == 3);
    for (int k = 1; k <= 12; ++k) {
      for (long j : {0L, 1L, (1L << k) - 1}) {
        if (j >= (1L << k)) continue;
        IntervalSet dyadic = IntervalSet::half_open(q(j, 1L << k), q(j + 1, 1L << k));
        CHECK(leo_certify(f, dyadic, 64).covering_n == k);
      }
    }
    auto g = constructions::invariant_interval_map();
    auto cert = leo_certify(g, IntervalSet::half_open(q(1, 2), q(3, 4)), 64);
    CHECK(!cert.certified());
    CHECK(cert.stalled);
    CHECK(IntervalSet::half_open(q(1, 3), 1).includes(cert.terminal));
    CHECK(cert.terminal == IntervalSet::half_open(q(1, 3), 1));
    auto capped = leo_certify(f, IntervalSet::half_open(0, q(1, 1024)), 4);
    CHECK(!capped.certified());
    CHECK(capped.terminal == IntervalSet::half_open(0, q(1, 64)));
  }

  TEST_CASE("expanding check") {
    auto f = doubling_map();
    // At δ₀ = 1/2 the circle metric folds: d(0,3/8) = 3/8 but the images
    // 0 and 3/4 are only 1/4 apart.
    auto bad = expanding_check(f, {2, q(1, 2)});
    REQUIRE(bad.has_value());
    CHECK(distance(f(bad->first), f(bad->second), Topology::circle) <
          2 * distance(bad->first, bad->second, Topology::circle));
    CHECK(distance(bad->first, bad->second, Topology::circle) < q(1, 2));
    CHECK(!expanding_check(f, {2, q(1, 4)}).has_value());
    CHECK(!expanding_check(beta_map(q(3, 2)), {q(3, 2), q(1, 4)}).has_value());

    auto g = constructions::replicated_fold_map(3).map;
    auto fold = expanding_check(g, {3, q(1, 2)});
    REQUIRE(fold.has_value());
    const Rational x = fold->first;
    const Rational y = fold->second;
    CHECK(distance(g(x), g(y), Topology::interval) < 3 * distance(x, y, Topology::interval));
    // A turning point of the fold (slope sign change) lies between the pair.
    bool straddles_fold = false;
    const auto& pieces = g.pieces();
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      bool turn = (pieces[i].slope > 0) != (pieces[i + 1].slope > 0);
      if (turn && x < pieces[i].hi && pieces[i].hi <= y) straddles_fold = true;
    }
    CHECK(straddles_fold);
  }

  TEST_CASE("expansivity first separation") {
    auto f = doubling_map();
    CHECK(expansivity_first_separation(f, 0, q(1, 2), {q(1, 4), 64}) == 0);
    // d(fⁿ0, fⁿ2^{-10}) = 2^{n-10}: equal to 1/4 at n = 8, above it at n = 9.
    CHECK(expansivity_first_separation(f, 0, pow2(-10), {q(1, 4), 64}) == 9);
    CHECK(distance(iterate(f, 0, 8), iterate(f, pow2(-10), 8), Topology::circle) == q(1, 4));
    CHECK(!expansivity_first_separation(identity_map(Topology::interval), 0, q(1, 8), {q(1, 4), 100}).has_value());
  }
}
