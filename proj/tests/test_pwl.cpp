#include "cgf/compendium.hpp"
#include "cgf/json_io.hpp"
#include "cgf/minimality.hpp"
#include "cgf/pwl.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace cgf;
using oracle::R;

TEST_CASE("rational parsing accepts p/q and integers, rejects decimals") {
  CHECK(Rational::parse("3/6") == R(1, 2));
  CHECK(Rational::parse("-4/5") == R(-4, 5));
  CHECK(Rational::parse("7") == R(7));
  CHECK(Rational::parse("+2/3") == R(2, 3));
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK(R(6, -4).str() == "-3/2");
  CHECK(R(-7, 3).floor() == R(-3));
  CHECK(R(-7, 3).frac() == R(2, 3));
  CHECK(R(9, 5).frac() == R(4, 5));
  CHECK_THROWS(R(1) / R(0));
}

TEST_CASE("construction from breakpoints and values") {
  auto g = PiecewiseFunction::from_breakpoints_and_values({0, R(4, 5), 1}, {0, 1, 0});
  CHECK(g.end_points() == std::vector<Rational>{0, R(4, 5), 1});
  CHECK(g == gmic(R(4, 5)));
  auto z = PiecewiseFunction::from_breakpoints_and_values({0, 1}, {0, 0});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) CHECK(z(oracle::random_rational(rng)).is_zero());
  auto h = PiecewiseFunction::from_breakpoints_and_values({0, R(1, 2), 1}, {0, 1, 0});
  CHECK(h(R(1, 4)) == R(1, 2));
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_values({0, R(1, 2)}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_values({0, R(1, 2), 1}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_values({0, R(2, 3), R(1, 2), 1}, {0, 1, 1, 0}),
                  std::invalid_argument);
}

TEST_CASE("construction from limits: the discontinuous five-piece function") {
  auto pi = equiv5_random_discont_1();
  std::vector<LimitTriple> expected = {{0, 0, 0},
                                       {1, 1, 1},
                                       {R(2, 5), R(2, 5), 0},
                                       {R(1, 2), R(3, 5), R(2, 5)},
                                       {R(3, 5), 1, R(3, 5)},
                                       {0, 0, 0}};
  CHECK(pi.end_points() == std::vector<Rational>{0, R(1, 5), R(2, 5), R(3, 5), R(4, 5), 1});
  CHECK(pi.limits_list() == expected);
  CHECK(pi.limits_at(R(2, 5)) == LimitTriple{R(2, 5), R(2, 5), 0});
  CHECK(pi.limits_at(R(3, 5)) == LimitTriple{R(1, 2), R(3, 5), R(2, 5)});
  CHECK(pi.limits_at(R(7, 5)) == LimitTriple{R(2, 5), R(2, 5), 0});
  CHECK_FALSE(pi.is_continuous());
  // Oracle: affine interpolation of pi(2/5+) = 2/5 and pi(3/5-) = 2/5.
  CHECK(pi(R(1, 2)) == oracle::eval_from_data(pi, R(1, 2)));
  CHECK(pi(R(1, 2)) == R(2, 5));
  CHECK(pi.number_of_slopes() == 3);
  auto c = PiecewiseFunction::from_breakpoints_and_limits({0, R(1, 2), 1}, {{0, 0, 0}, {1, 1, 1}, {0, 0, 0}});
  CHECK(c.is_continuous());
}

TEST_CASE("evaluation, one-sided limits and affine pieces of gmic") {
  auto g = gmic(R(4, 5));
  CHECK(g(R(4, 5)) == 1);
  CHECK(g(R(9, 5)) == 1);
  CHECK(g(R(1, 2)) == R(5, 8));
  CHECK(g.limits_at(R(2, 5)) == LimitTriple{R(1, 2), R(1, 2), R(1, 2)});
  auto p = g.which_function(R(1, 2));
  CHECK(p.slope == R(5, 4));
  CHECK(p.intercept == 0);
  auto q = g.which_function(R(9, 10));
  CHECK(q.slope == -5);
  CHECK(q.intercept == 5);
  auto at_bkpt = g.which_function(R(4, 5));
  CHECK(at_bkpt.slope == 0);
  CHECK(at_bkpt.intercept == 1);
  CHECK(g.number_of_slopes() == 2);
  CHECK(PiecewiseFunction::from_breakpoints_and_values({0, 1}, {0, 0}).number_of_slopes() == 1);
}

TEST_CASE("periodicity, limit consistency, interpolation and round trip on random functions") {
  std::mt19937_64 rng(7);
  auto fns = oracle::random_functions(30, 9, R(1, 2), 100);
  fns.push_back(equiv5_random_discont_1());
  fns.push_back(hildebrand_discont_3_slope_1());
  for (const auto& pi : fns) {
    for (int i = 0; i < 40; ++i) {
      Rational x = oracle::random_rational(rng);
      long t = std::uniform_int_distribution<long>(-3, 3)(rng);
      CHECK(pi(x + Rational(t)) == pi(x));
      CHECK(pi(x) == oracle::eval_from_data(pi, x));
      if (!pi.is_breakpoint(x)) {
        auto l = pi.limits_at(x);
        CHECK(l.is_continuous());
        auto piece = pi.which_function(x.frac());
        CHECK(piece(x.frac()) == pi(x));
      }
    }
    for (size_t i = 0; i < pi.end_points().size(); ++i) {
      if (i == 0 || i + 1 == pi.end_points().size()) continue;
      const auto& l = pi.limits_list()[i];
      bool slope_change = pi.slope(i - 1) != pi.slope(i);
      CHECK((slope_change || !l.is_continuous()));
    }
    auto again = PiecewiseFunction::from_breakpoints_and_limits(pi.end_points(), pi.limits_list(), pi.f());
    CHECK(again == pi);
  }
}

TEST_CASE("arithmetic on functions") {
  auto g = gmic(R(4, 5));
  auto h = equiv5_random_discont_1();
  auto s = g + h;
  auto d = s - h;
  CHECK(d == g);
  auto t = R(3) * g;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Rational x = oracle::random_rational(rng);
    CHECK(s(x) == g(x) + h(x));
    CHECK(t(x) == 3 * g(x));
  }
}

TEST_CASE("random generation") {
  RandomOptions o;
  o.xgrid = 5;
  o.ygrid = 5;
  o.continuous_proba = 1;
  o.symmetry = false;
  o.seed = 11;
  auto a = random_piecewise_function(o);
  CHECK(a.is_continuous());
  for (const auto& b : a.end_points()) CHECK((b * 5).is_integer());
  CHECK(random_piecewise_function(o) == a);
  o.continuous_proba = R(1, 3);
  o.symmetry = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    o.seed = seed;
    auto pi = random_piecewise_function(o);
    REQUIRE(pi.f());
    Rational f = *pi.f();
    for (long i = 0; i <= 5; ++i) {
      Rational x(i, 5);
      CHECK(pi(x) + pi(f - x) == 1);
      CHECK(pi.limit(x, 1) + pi.limit(f - x, -1) == 1);
      CHECK(pi.limit(x, -1) + pi.limit(f - x, 1) == 1);
    }
  }
  o.xgrid = 1;
  CHECK_THROWS_AS(random_piecewise_function(o), std::invalid_argument);
}

TEST_CASE("discrete functions") {
  auto d = DiscreteFunction::from_points_and_values({0, R(1, 5), R(2, 5), R(3, 5), R(4, 5), 1},
                                                    {0, R(1, 4), R(1, 2), R(3, 4), 1, 0});
  CHECK(d.order() == 5);
  CHECK(d(R(3, 5)) == R(3, 4));
  CHECK(d(R(8, 5)) == R(3, 4));
  CHECK(d.at(-1) == 1);
  auto z = DiscreteFunction::from_points_and_values({0, 1}, {0, 0});
  CHECK(z.order() == 1);
  CHECK(z(R(0)) == 0);
  CHECK_THROWS_AS(DiscreteFunction::from_points_and_values({0, R(1, 2), 1}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(d(R(1, 3)), std::invalid_argument);
}

TEST_CASE("JSON round trip of function files") {
  for (const auto& pi : {gmic(R(4, 5)), equiv5_random_discont_1(), hildebrand_discont_3_slope_1()}) {
    auto j = to_json(pi);
    auto back = function_from_json(json::parse(j.dump()));
    REQUIRE(std::holds_alternative<PiecewiseFunction>(back));
    CHECK(std::get<PiecewiseFunction>(back) == pi);
    CHECK(std::get<PiecewiseFunction>(back).f() == pi.f());
  }
  auto d = DiscreteFunction::from_points_and_values({0, R(1, 2), 1}, {0, 1, 0}, R(1, 2));
  auto back = function_from_json(json::parse(to_json(d).dump()));
  REQUIRE(std::holds_alternative<DiscreteFunction>(back));
  CHECK(std::get<DiscreteFunction>(back) == d);
  CHECK(rational_from_json(json("2/4")) == R(1, 2));
  CHECK(rational_from_json(json(3)) == R(3));
  CHECK_THROWS_AS(rational_from_json(json(0.5)), std::invalid_argument);
}
