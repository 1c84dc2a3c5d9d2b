#include <doctest.h>

#include "mapenum/error.hpp"
#include "mapenum/freud/freud.hpp"

using namespace mapenum;

TEST_SUITE("freud") {
  TEST_CASE("M_2 is x0 (x-1 + x0 + x1)") {
    auto M = build_freud(2);
    std::map<std::vector<int>, long> expected = {{{-1, 0}, 1}, {{0, 0}, 1}, {{0, 1}, 1}};
    CHECK(M.terms == expected);
    CHECK(M.all_ones() == 3);
    CHECK(M.str() == "x[n-1]*x[n] + x[n]^2 + x[n]*x[n+1]");
  }

  TEST_CASE("M_3 structure") {
    auto M = build_freud(3);
    CHECK(M.all_ones() == 10);
    std::map<std::vector<int>, long> expected = {
        {{-2, -1, 0}, 1}, {{-1, -1, 0}, 1}, {{-1, 0, 0}, 2}, {{-1, 0, 1}, 1}, {{0, 0, 0}, 1},
        {{0, 0, 1}, 2},   {{0, 1, 1}, 1},   {{0, 1, 2}, 1}};
    CHECK(M.terms == expected);
    CHECK(build_freud(4).all_ones() == 35);
    CHECK(build_freud(5).all_ones() == 126);
  }

  TEST_CASE("reflection symmetry j -> -j") {
    for (int nu = 2; nu <= 5; ++nu) {
      auto M = build_freud(nu);
      CHECK(M.reflected() == M);
    }
  }

  TEST_CASE("nu = 2 expansion coefficients") {
    auto e = cm_expand(2, 8);
    auto f = e.field;
    auto th = [&](int p) { return RadicalElem::theta(f, p); };
    CHECK(e.coeff(-1) == ParamPoly::monomial(-1, -1, th(-1)));
    CHECK(e.coeff(0) == ParamPoly::monomial(0, -2, Rational(-1, 6)));
    CHECK(e.coeff(1) == ParamPoly::monomial(1, -3, th(1) * Rational(1, 72)));
    CHECK(e.coeff(2).is_zero());
    CHECK(e.coeff(3) == ParamPoly::monomial(-1, -1, th(1) * Rational(48, 3456)) +
                            ParamPoly::monomial(3, -5, th(1) * Rational(-1, 3456)));
    CHECK(e.coeff(4) == ParamPoly::monomial(0, -2, Rational(-1, 144)));
    CHECK(e.coeff(6) == ParamPoly::monomial(2, -4, Rational(1, 864)));
    CHECK(e.coeff(8) == ParamPoly::monomial(0, -2, Rational(63, 6912)) +
                            ParamPoly::monomial(4, -6, Rational(-1, 6912)));
  }

  TEST_CASE("homogeneity and residual for nu = 3, 4") {
    for (int nu : {3, 4}) {
      auto e = cm_expand(nu, 3 * nu);
      for (int k = -1; k <= e.kmax; ++k) CHECK(e.coeff(k).homogeneous(1, nu - 1, -nu));
      auto r = cm_residual(e);
      CHECK(r.is_zero());
      CHECK(r.order() == e.kmax + 1 - nu);
    }
  }

  TEST_CASE("rescaled expansion at alpha = 1") {
    auto e = cm_expand(2, 4);
    auto s = rescale_cm(e, RadicalElem(1));
    CHECK(s.coeff(1) == ParamPoly::monomial(0, -1, RadicalElem::theta(e.field, -1)));
    // n^{-5/2}: (48 B^{-1} - B^{-5}) / (1152 sqrt 3)
    auto c = s.coeff(5);
    auto inv = RadicalElem::theta(e.field, -1) * Rational(1, 1152);
    CHECK(c == ParamPoly::monomial(0, -1, inv * Rational(48)) + ParamPoly::monomial(0, -5, -inv));
  }
}
