#include <doctest.h>

#include "mapenum/error.hpp"
#include "mapenum/matching/matching.hpp"
#include "mapenum/stringeq/stringeq.hpp"

using namespace mapenum;

namespace {

UPoly Z() { return UPoly::linear(0, 1); }

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("expansion order bookkeeping") {
    CHECK(k_nu(2, 1) == 4);
    CHECK(k_nu(2, 7) == 46);
    CHECK(k_nu(3, 2) == 19);
    CHECK(k_reduced(7) == 33);
  }

  TEST_CASE("g = 1 slots") {
    auto e = cm_expand(2, k_nu(2, 1));
    auto a = extract_a(e, 1);
    auto f = theta_field(2);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == RadicalElem::theta(f, -1) * Rational(48, 1152));
    CHECK(a[1] == RadicalElem(Rational(-1, 144)));
    CHECK_THROWS_AS(extract_a(cm_expand(2, 3), 1), ShortfallError);
  }

  TEST_CASE("genus-zero slots equal the Puiseux coefficients of z_0") {
    for (int nu : {2, 3}) {
      const int mmax = 12;
      auto e = cm_expand(nu, (nu - 1) * mmax - nu);
      auto slots = extract_slots(e);
      auto z = z0_puiseux_v(nu, mmax);
      for (int m = 1; m <= mmax; ++m) {
        auto it = slots.find({m, 0});
        RadicalElem got = it == slots.end() ? RadicalElem() : it->second;
        CHECK(got == z[m]);
      }
    }
  }

  TEST_CASE("g = 1 rows and solve") {
    auto rows = ansatz_rows(2, 1, 2);
    auto f = theta_field(2);
    CHECK(rows[0][0] == RadicalElem::theta(f, -1) * Rational(-1, 16));
    CHECK(rows[0][1].is_zero());
    CHECK(rows[1][0] == RadicalElem(Rational(-1, 96)));
    CHECK(rows[1][1] == RadicalElem(Rational(-2, 96)));
    CHECK(check_triangular(rows, 2, 1, false).empty());
    auto d = derive_zg(2, 1);
    CHECK(d.solution.beta == std::vector<Rational>{Rational(-2, 3), Rational(2, 3)});
    CHECK(d.slots_checked == 4);
    CHECK(q_factor(d.solution) == UPoly(Rational(2, 3)));
  }

  TEST_CASE("g = 2, 3 factorizations") {
    auto d2 = derive_zg(2, 2);
    CHECK(q_factor(d2.solution) == (Z() * Rational(9) - UPoly(4)) * Rational(14, 9));
    auto r2 = derive_zg(2, 2, {.reduced = true});
    CHECK(r2.solution.beta == d2.solution.beta);
    auto d3 = derive_zg(2, 3, {.reduced = true});
    UPoly q3({Rational(444), Rational(-6616), Rational(8097)});
    CHECK(q_factor(d3.solution) == q3 * Rational(4, 27));
  }

  TEST_CASE("nu = 3, g = 2") {
    auto d = derive_zg(3, 2, {.extra_slots = 1});
    std::vector<Rational> expected = {Rational(2673, 5), Rational(-62451, 20), Rational(25407, 4),
                                      Rational(-27386, 5), Rational(8567, 5)};
    CHECK(d.solution.beta == expected);
    CHECK(z_minus_one_multiplicity(d.solution.numerator()) >= required_z_multiplicity(3, 2));
  }

  TEST_CASE("partial fractions and recursion seed") {
    auto d = derive_zg(2, 1);
    auto pf = partial_fraction(d.solution);
    // 2/3 (w^-4 - 2 w^-3 + w^-2)
    CHECK(pf.a == std::vector<Rational>{Rational(2, 3), Rational(-4, 3), Rational(2, 3)});
    auto d2 = derive_zg(2, 2, {.reduced = true});
    auto rows = recursion_check(2, {{1, pf.top()}, {2, partial_fraction(d2.solution).top()}});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].ok);
    CHECK(rows[1].ok);
    CHECK(rows[1].actual == Rational(196, 9));
  }

  TEST_CASE("Sturm root isolation") {
    auto r1 = real_roots(Z() * Rational(9) - UPoly(4));
    REQUIRE(r1.all_real());
    CHECK(r1.lo[0] <= Rational(4, 9));
    CHECK(r1.hi[0] >= Rational(4, 9));
    auto r2 = real_roots(UPoly({Rational(444), Rational(-6616), Rational(8097)}));
    REQUIRE(r2.all_real());
    auto x = r2.approx();
    CHECK(x[0] == doctest::Approx(0.07384).epsilon(1e-3));
    CHECK(x[1] == doctest::Approx(0.74325).epsilon(1e-3));
    CHECK(interlaced(r1, r2));
    auto complex_pair = real_roots(Z() * Z() + UPoly(1));
    CHECK_FALSE(complex_pair.all_real());
  }

  TEST_CASE("bareiss solve") {
    RadMatrix M = {{RadicalElem(2), RadicalElem(1)}, {RadicalElem(1), RadicalElem(3)}};
    auto x = bareiss_solve(M, {RadicalElem(3), RadicalElem(5)});
    CHECK(x[0] == RadicalElem(Rational(4, 5)));
    CHECK(x[1] == RadicalElem(Rational(7, 5)));
    RadMatrix S = {{RadicalElem(1), RadicalElem(2)}, {RadicalElem(2), RadicalElem(4)}};
    CHECK_THROWS_AS(bareiss_solve(S, {RadicalElem(1), RadicalElem(1)}), ConsistencyError);
  }
}
