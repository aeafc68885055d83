#include <doctest.h>

#include "linepat/verify.hpp"

using namespace linepat;

TEST_CASE("the lattice claims pass on the small grids with known censuses") {
  VerificationReport g1 = check_no_5gon(grid_spec(1));
  CHECK(g1.passed);
  CHECK(g1.histogram == std::map<int, int>{{3, 12}, {4, 1}});
  CHECK(g1.witness.empty());

  VerificationReport g2 = check_no_5gon(grid_spec(2));
  CHECK(g2.passed);
  CHECK(g2.histogram == std::map<int, int>{{3, 92}, {4, 61}});

  CHECK(check_rrl(grid_spec(1)).passed);
  CHECK(check_rrl(grid_spec(2)).passed);
}

TEST_CASE("degenerate lattices pass trivially") {
  LatticeSpec row{Rational(1), Rational(2), Rational(1), Rational(1), 4, 0};
  CHECK(check_no_5gon(row).passed);
  CHECK(check_no_5gon(row).histogram.empty());
  CHECK(check_rrl(row).passed);

  LatticeSpec point{Rational(1), Rational(1), Rational(1), Rational(1), 0, 0};
  CHECK(check_no_5gon(point).passed);
}

TEST_CASE("the unequal grid and the triangle family break the lattice bounds") {
  VerificationReport pentagon =
      check_no_5gon(pentagon_counterexample(), "pentagon");
  CHECK_FALSE(pentagon.passed);
  CHECK(pentagon.histogram == std::map<int, int>{{3, 12}, {4, 5}, {5, 1}});
  CHECK(pentagon.witness.find("5-sided") != std::string::npos);

  // The five sided cell must carry three consecutive equal labels.
  CHECK_FALSE(check_rrl(fibonacci_triangle(3), "fib3").passed);

  CHECK(check_counterexamples().passed);
}

TEST_CASE("coprime and transform claims hold") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(check_coprime(n).passed);
  }
  CHECK_THROWS_AS(check_coprime(0), std::invalid_argument);

  LatticeSpec spec{Rational(1), Rational(1), Rational(1), Rational(1), 2, 2};
  Transform2 rot{Rational(0), Rational(-1), Rational(1), Rational(0)};
  CHECK(check_transform_invariance(spec, rot).passed);
  Transform2 shear{Rational(1), Rational(1, 2), Rational(0), Rational(1)};
  CHECK(check_transform_invariance(spec, shear).passed);
}

TEST_CASE("compare_engines agrees on crafted sets") {
  CHECK(compare_engines(generate(grid_spec(1)), "grid1").passed);
  CHECK(compare_engines(pentagon_counterexample(), "pentagon").passed);
  // Concurrence plus parallels in one set.
  PointSet tricky = PointSet::from_points({{Rational(1), Rational(0)},
                                           {Rational(0), Rational(1)},
                                           {Rational(1), Rational(1)},
                                           {Rational(1, 2), Rational(1, 2)},
                                           {Rational(2), Rational(0)}});
  CHECK(compare_engines(tricky, "tricky").passed);
}

TEST_CASE("run_claims is deterministic and reports every claim") {
  VerifyOptions options;
  options.grid_max = 1;
  options.random_lattices = 3;
  options.engine_trials = 5;
  options.transform_trials = 3;
  auto reports = run_claims(options);
  CHECK(all_passed(reports));
  // 4 lattice instances x 2 claims + 1 coprime (bounded by grid_max) +
  // counterexamples + transform + engines.
  CHECK(reports.size() == (1 + 3) * 2 + 1 + 1 + 1 + 1);
  for (size_t k = 1; k < reports.size(); ++k) {
    CHECK(reports[k - 1].claim_id < reports[k].claim_id);
  }

  std::string text = reports_to_text(reports, options);
  std::string again = reports_to_text(run_claims(options), options);
  CHECK(text == again);
  CHECK(text.find("overall: PASS") != std::string::npos);
  CHECK(text.find("seed: 1729") != std::string::npos);
  CHECK(text.find("elapsed_ms") == std::string::npos);

  std::string json = reports_to_json(reports, options);
  CHECK(json.find("\"all_passed\": true") != std::string::npos);
}

TEST_CASE("claim filtering and unknown claims") {
  VerifyOptions options;
  options.claims = {"coprime"};
  options.grid_max = 2;
  auto reports = run_claims(options);
  CHECK(reports.size() == 2);
  CHECK(reports[0].claim_id == "coprime/n-1");

  options.claims = {"bogus"};
  CHECK_THROWS_AS(run_claims(options), std::invalid_argument);
}

TEST_CASE("seeded helpers are deterministic across engines") {
  std::mt19937_64 a(42), b(42);
  for (int k = 0; k < 10; ++k) {
    CHECK(bounded_random(a, 1000) == bounded_random(b, 1000));
  }
  CHECK(random_rational(a, 3, 2) == random_rational(b, 3, 2));
  PointSet sa = random_point_set(a, 6, 3, 3);
  PointSet sb = random_point_set(b, 6, 3, 3);
  CHECK(sa.points == sb.points);
  CHECK(sa.size() >= 2);
  LatticeSpec la = random_lattice_spec(a);
  CHECK(la == random_lattice_spec(b));
  CHECK(det(random_invertible_transform(a)) != 0);
}

TEST_CASE("random_rational respects its bounds") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    Rational r = random_rational(rng, 3, 2);
    CHECK(r >= -3);
    CHECK(r <= 3);
    CHECK(denominator(r) <= 2);
  }
}
