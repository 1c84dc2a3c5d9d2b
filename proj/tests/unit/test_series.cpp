#include <doctest.h>

#include <random>

#include "mapenum/error.hpp"
#include "mapenum/exact/radical.hpp"
#include "mapenum/series/gauge_series.hpp"
#include "mapenum/series/power_series.hpp"

using namespace mapenum;

namespace {

GaugeSeries<Rational> poly(int nu, int order, std::initializer_list<std::pair<int, Rational>> terms) {
  GaugeSeries<Rational> s(nu, order);
  for (const auto& [e, c] : terms) s.set(e, c);
  return s;
}

GaugeSeries<Rational> random_series(std::mt19937& rng, int nu, int val, int order) {
  std::uniform_int_distribution<int> d(-5, 5);
  GaugeSeries<Rational> s(nu, order);
  s.set(val, Rational(1 + std::abs(d(rng))));
  for (int e = val + 1; e <= order; ++e) s.set(e, Rational(d(rng), 1 + std::abs(d(rng))));
  return s;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("gauge multiplication") {
    auto a = poly(2, 5, {{0, 1}, {1, 1}});
    auto b = poly(2, 5, {{0, 1}, {1, -1}});
    auto p = a * b;
    CHECK(p.order() == 5);
    CHECK(p == poly(2, 5, {{0, 1}, {2, -1}}));
    auto inv_u = poly(2, 4, {{-1, 1}});
    auto u = poly(2, 6, {{1, 1}});
    auto one = inv_u * u;
    CHECK(one.coeff(0) == Rational(1));
    CHECK(one.order() == 5);  // min(4 + 1, 6 - 1)
  }

  TEST_CASE("gauge reciprocal") {
    auto a = poly(2, 6, {{0, 1}, {1, -1}});
    auto r = a.reciprocal();
    for (int e = 0; e <= 6; ++e) CHECK(r.coeff(e) == Rational(1));
    auto inv = poly(2, 3, {{-1, 1}}).reciprocal();
    CHECK(inv.coeff(1) == Rational(1));
    CHECK(inv.order() == 5);
    CHECK_THROWS_AS(GaugeSeries<Rational>(2, 4).reciprocal(), DivisionByZero);
  }

  TEST_CASE("property: reciprocal round trip, commutativity, associativity") {
    std::mt19937 rng(99);
    for (int t = 0; t < 20; ++t) {
      auto s = random_series(rng, 2, -1, 6);
      auto back = s.reciprocal().reciprocal();
      CHECK(back == s);
      auto a = random_series(rng, 3, 0, 7), b = random_series(rng, 3, -1, 6), c = random_series(rng, 3, 1, 8);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("shift re-expansion") {
    auto one = poly(2, 6, {{0, 1}});
    CHECK(shift_reexpand(one, 1) == one);
    auto u = poly(2, 6, {{1, 1}});
    auto s = shift_reexpand(u, 1);
    // (1 + 1/n)^{-1/2} = 1 - 1/(2n) + 3/(8n^2) - 5/(16 n^3) ...
    CHECK(s.coeff(1) == Rational(1));
    CHECK(s.coeff(3) == Rational(-1, 2));
    CHECK(s.coeff(5) == Rational(3, 8));
    CHECK(s.coeff(2) == Rational(0));
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
      auto a = random_series(rng, 3, -1, 9);
      CHECK(shift_reexpand(shift_reexpand(a, 2), -2) == a);
      CHECK(shift_reexpand(a, 0) == a);
    }
    CHECK_THROWS_AS(shift_reexpand(u, 2), std::invalid_argument);
    CHECK_THROWS_AS(shift_reexpand(poly(2, 1, {{0, 1}}), 1), ShortfallError);
  }

  TEST_CASE("exponent floor and truncation") {
    GaugeSeries<Rational> s(2, 3);
    CHECK_THROWS_AS(s.set(-3, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(s.coeff(4), ShortfallError);
  }

  TEST_CASE("power series basics") {
    CouplingSeries g(4, {Rational(1), Rational(-1)});
    auto r = g.reciprocal();
    for (int i = 0; i <= 4; ++i) CHECK(r[i] == Rational(1));
    CouplingSeries z0(3, {Rational(1), Rational(-3), Rational(18), Rational(-135)});
    CHECK(z0.log()[0] == Rational(0));
    // ln(1 - x) = -x - x^2/2 - x^3/3
    auto l = g.truncated(3).log();
    CHECK(l[3] == Rational(-1, 3));
    CHECK_THROWS_AS(CouplingSeries(2, {Rational(2)}).log(), DivisionByZero);
  }

  TEST_CASE("newton solve for a quadratic") {
    // 3 r w^2 + w - 1 = 0 around w = 1
    const int J = 6;
    std::vector<CouplingSeries> a = {CouplingSeries::constant(J, Rational(-1)),
                                     CouplingSeries::constant(J, Rational(1)),
                                     CouplingSeries::variable(J) * Rational(3)};
    auto w = newton_solve(a, Rational(1));
    CHECK(w[1] == Rational(-3));
    CHECK(w[2] == Rational(18));
    CHECK(w[3] == Rational(-135));
  }
}
