#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "mapenum/error.hpp"
#include "mapenum/orbitnum/orbitnum.hpp"
#include "mapenum/stringeq/stringeq.hpp"

using namespace mapenum;
namespace mp = boost::multiprecision;

namespace {

PrecisionConfig cfg256() {
  PrecisionConfig c;
  c.bits = 256;
  return c;
}

}  // namespace

TEST_SUITE("orbitnum") {
  TEST_CASE("precision config") {
    PrecisionConfig c;
    CHECK_NOTHROW(c.validate());
    c.bits = 64;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.bits = 256;
    c.tolerance_bits = 300;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  }

  TEST_CASE("exact values convert") {
    PrecisionScope ps(256);
    CHECK(to_real(Rational(1, 3)) * 3 == 1);
    auto s = RadicalElem::theta(theta_field(2));
    CHECK(mp::abs(to_real(s) - mp::sqrt(Real(3))) < Real("1e-70"));
    CHECK(mp::abs(to_real(s.inverse()) * to_real(s) - 1) < Real("1e-70"));
  }

  TEST_CASE("moments") {
    PrecisionScope ps(256);
    auto mu = moments(2, Real(1), Real(1), 10, cfg256());
    for (int k = 1; k <= 20; k += 2) CHECK(mu[k] == 0);
    for (int k = 0; k <= 20; k += 2) CHECK(mu[k] > 0);
    // Gaussian limit
    auto g = moments(2, Real(2), Real("1e-40"), 2, cfg256());
    CHECK(mp::abs(g[0] - mp::sqrt(boost::math::constants::pi<Real>())) < Real("1e-35"));
    CHECK(moment_rescaling_error(2, Real(1), Real(1), Real(2), 10, cfg256()) < Real("1e-60"));
    CHECK_THROWS_AS(moments(2, Real(-1), Real(1), 2, cfg256()), std::invalid_argument);
  }

  TEST_CASE("Hankel route") {
    PrecisionScope ps(256);
    auto mu = moments(2, Real(1), Real(1), 2, cfg256());
    auto h = hankel_x(2, Real(1), Real(1), 12, cfg256());
    CHECK(mp::abs(h.at(1) - mu[2] / mu[0]) < Real("1e-70"));
    CHECK(h.at(0) == 0);
    CHECK_THROWS_AS(h.at(13), ShortfallError);
    auto s = stieltjes_x(2, Real(1), Real(1), 12, cfg256());
    for (int n = 1; n <= 12; ++n) CHECK(mp::abs(h.at(n) - s.at(n)) < Real("1e-60"));
  }

  TEST_CASE("Freud residual and positivity") {
    PrecisionScope ps(256);
    for (int nu : {2, 3}) {
      auto s = stieltjes_x(nu, Real(1), Real(1), 80, cfg256());
      auto m = build_freud(nu);
      for (int n = 1; n <= 80; ++n) CHECK(s.at(n) > 0);
      Real worst = 0;
      for (int n = nu - 1; n <= 80 - nu + 1; ++n) worst = mp::max(worst, mp::abs(freud_residual(s, m, n)));
      CHECK(worst < Real("1e-60"));
    }
  }

  TEST_CASE("orbit rescaling") {
    PrecisionScope ps(256);
    CHECK(orbit_rescaling_error(2, Real(1), Real(1), Real(2), 10, 60, cfg256()) < Real("1e-60"));
    CHECK(orbit_rescaling_error(3, Real(1), Real(1), Real(10), 10, 40, cfg256()) < Real("1e-60"));
  }

  TEST_CASE("truncated expansions approach the orbit") {
    PrecisionScope ps(256);
    auto s = stieltjes_x(2, Real(1), Real(1), 200, cfg256());
    auto e = cm_expand(2, 7);
    std::vector<int> ns = {50, 100, 150, 200};
    auto r3 = cm_compare(s, e, 3, ns, cfg256());
    CHECK(r3.within(0.15));
    CHECK_FALSE(r3.saturated);
    auto r7 = cm_compare(s, e, 7, ns, cfg256());
    CHECK(r7.slope < r3.slope);
    auto u = un_compare(s, ns, cfg256());
    CHECK(u.within(0.15));
    CHECK_THROWS_AS(cm_compare(s, e, 8, ns, cfg256()), ShortfallError);
    // leading term: x_n ~ sqrt(n / 3)
    CHECK(mp::abs(cm_value(e, -1, Real(1), Real(1), 27) - 3) < Real("1e-70"));
  }

  TEST_CASE("slope fit") {
    PrecisionScope ps(128);
    std::vector<int> ns = {10, 20, 40};
    std::vector<Real> errs;
    for (int n : ns) errs.push_back(mp::pow(Real(n), -3));
    CHECK(loglog_slope(ns, errs) == doctest::Approx(-3.0));
    CHECK_THROWS(loglog_slope({1}, {Real(1)}));
  }
}
