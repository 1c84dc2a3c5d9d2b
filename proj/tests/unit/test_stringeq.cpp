#include <doctest.h>

#include <cmath>

#include "mapenum/error.hpp"
#include "mapenum/stringeq/stringeq.hpp"

using namespace mapenum;

TEST_SUITE("stringeq") {
  TEST_CASE("coupling series nu = 2") {
    auto z = z0_coupling_series(StringEquationSpec::even(2), 3);
    CHECK(z[0] == Rational(1));
    CHECK(z[1] == Rational(-3));
    CHECK(z[2] == Rational(18));
    CHECK(z[3] == Rational(-135));
    CHECK(z0_coupling_series(StringEquationSpec::even(2), 0).coeffs() == std::vector<Rational>{Rational(1)});
  }

  TEST_CASE("trivalent series has only even powers") {
    auto z = z0_coupling_series(StringEquationSpec::trivalent(), 12);
    CHECK(z[0] == Rational(1));
    CHECK(z[2] == Rational(36));
    for (int j = 1; j <= 12; j += 2) CHECK(z[j].is_zero());
  }

  TEST_CASE("coupling series agrees with the closed form to 10 terms") {
    // (-1 + sqrt(1 + 12 r)) / (6 r) = sum_j (-3)^j C(2j+1, j) / (2j+1) ... via the quadratic's Catalan form
    auto z = z0_coupling_series(StringEquationSpec::even(2), 10);
    for (int j = 0; j <= 10; ++j) {
      Rational catalan = Rational(binomial(2 * j, j)) / Rational(j + 1);
      CHECK(z[j] == catalan * Rational(-3).pow(j));
    }
  }

  TEST_CASE("implicit derivative identity dz/dr = -C z^{nu+1} / (nu - (nu-1) z)") {
    for (int nu : {2, 3, 4}) {
      const int J = 9;
      auto z = z0_coupling_series(StringEquationSpec::even(nu), J);
      auto dz = z.derivative().truncated(J - 1);
      auto zt = z.truncated(J - 1);
      auto den = CouplingSeries::constant(J - 1, Rational(nu)) - zt * Rational(nu - 1);
      auto rhs = zt.pow(static_cast<unsigned>(nu + 1)) * den.reciprocal() *
                 Rational(-StringEquationSpec::even(nu).constant());
      CHECK(dz == rhs);
    }
  }

  TEST_CASE("Puiseux expansion") {
    auto s = z0_puiseux(2, 8);
    auto f = theta_field(2);
    CHECK(s.coeff(1) == RadicalElem::theta(f) * Rational(1, 3));
    // 1 = z + 3 v^{-2} z^2, i.e. v^2 z + 3 z^2 - v^2 = 0 through v^10
    auto z = z0_puiseux_v(2, 10);
    auto res = z * z * RadicalElem(3);
    for (int m = 2; m <= 10; ++m) res[m] += z[m - 2];
    res[2] -= RadicalElem(1);
    CHECK(res.is_zero());
    auto s3 = z0_puiseux(3, 12);
    for (int e = 0; e <= 12; ++e)
      if (e % 2 != 0) CHECK(s3.coeff(e).is_zero());
    CHECK(s3.coeff(2) == RadicalElem::theta(theta_field(3), -1));
    CHECK_THROWS_AS(z0_puiseux(3, 1), ShortfallError);
  }

  TEST_CASE("nu = 2 closed form") {
    CHECK(z0_closed_nu2(0.0, 1.0) == 1.0);
    CHECK(std::abs(z0_closed_nu2(1.0, 1.0) - (-1.0 + std::sqrt(13.0)) / 6.0) < 1e-15);
    CHECK(std::abs(z0_closed_nu2(1e-9, 1.0) - 1.0) < 1e-8);
    CHECK_THROWS_AS(z0_closed_nu2(-1.0, 1.0), std::domain_error);
    for (auto [r, a] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(2, 7), Rational(5, 3)},
                        std::pair{Rational(-1, 20), Rational(1)}}) {
      RadicalElem z = z0_closed_nu2_exact(r, a);
      CHECK((z * z * (Rational(3) * a * r) + z - RadicalElem(1)).is_zero());
    }
  }

  TEST_CASE("s-series conversion") {
    auto s = z0_s_series(3);
    CHECK(s[1] == Rational(12));
    CHECK(s[2] == Rational(288));
  }
}
