#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <json.hpp>

#include "mapenum/exact/rational.hpp"
#include "mapenum/freud/freud.hpp"

namespace mapenum {

using Real = boost::multiprecision::mpfr_float;

struct PrecisionConfig {
  unsigned bits = 512;
  /// Absolute tolerance is 2^-tolerance_bits; defaults to bits / 3.
  unsigned tolerance_bits = 0;
  /// Trapezoid step and truncation radius; 0 selects them from bits and nmax.
  double step = 0.0;
  double radius = 0.0;

  void validate() const;
  unsigned effective_tolerance_bits() const { return tolerance_bits ? tolerance_bits : bits / 3; }
  Real tolerance() const;
};

/// Sets the default mpfr precision for the lifetime of the object.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rational& q);
/// theta is the positive real root of theta^nu = C(2nu-1, nu-1).
Real to_real(const RadicalElem& e);

/// Even moments mu_0..mu_{2 count} of exp(-N (l^2/2 + r l^{2nu}/(2nu))) on the
/// real line; odd moments are returned as exact zeros.
std::vector<Real> moments(int nu, const Real& N, const Real& r, int count, const PrecisionConfig& cfg);

/// Recurrence coefficients x_n = b_n^2, n = 1..nmax.
struct OrbitSample {
  int nu = 2;
  Real N, r;
  std::string method;
  std::vector<Real> x;  // x[n - 1]

  int nmax() const { return static_cast<int>(x.size()); }
  /// x_0 = 0; throws for n outside 0..nmax.
  Real at(int n) const;
};

/// Hankel determinant ratios D_{n-2} D_n / D_{n-1}^2 from the moments.
OrbitSample hankel_x(int nu, const Real& N, const Real& r, int nmax, const PrecisionConfig& cfg);
/// Discretized Stieltjes procedure on the same trapezoid nodes; stable for
/// nmax in the hundreds.
OrbitSample stieltjes_x(int nu, const Real& N, const Real& r, int nmax, const PrecisionConfig& cfg);

/// n/N - x_n - r M_nu(x) at index n (needs nu - 1 <= n <= nmax - nu + 1).
Real freud_residual(const OrbitSample& s, const FreudPolynomial& m, int n);

/// max over n in [nlo, nhi] of |sigma x_n(sigma N, sigma^{nu-1} r) - x_n(N, r)|.
Real orbit_rescaling_error(int nu, const Real& N, const Real& r, const Real& sigma, int nlo, int nhi,
                           const PrecisionConfig& cfg);
/// max over k <= 2 count of |sigma^{(k+1)/2} mu_k(sigma N, sigma^{nu-1} r) / mu_k(N, r) - 1|.
Real moment_rescaling_error(int nu, const Real& N, const Real& r, const Real& sigma, int count,
                            const PrecisionConfig& cfg);

/// sum_{k=-1}^{m} c_k(N, r) n^{-k/nu} with A = N^{1/nu}, B = r^{1/nu}.
Real cm_value(const CmExpansion& e, int m, const Real& N, const Real& r, int n);

/// -sqrt(3/(g n)) - 1/(2 g n) - 1/(8 sqrt(3) (g n)^{3/2}), g = r/N (nu = 2).
Real u_three_term(const Real& N, const Real& r, int n);

struct SlopeRow {
  int n;
  Real x, approx, abs_err;
};

struct SlopeReport {
  std::string label;
  int m = 0;
  double slope = 0.0;
  double expected = 0.0;
  bool saturated = false;  // some error fell under the precision floor
  std::vector<SlopeRow> rows;

  bool within(double tol) const;
  nlohmann::json to_json() const;
};

/// Least-squares slope of log|err| against log n.
double loglog_slope(const std::vector<int>& ns, const std::vector<Real>& errs);

/// Error of the m-term truncation at each n in ns; expected slope -(m+1)/nu.
SlopeReport cm_compare(const OrbitSample& s, const CmExpansion& e, int m, const std::vector<int>& ns,
                       const PrecisionConfig& cfg);
/// u_n = -1/(r x_n) against the three-term formula; expected slope -5/2.
SlopeReport un_compare(const OrbitSample& s, const std::vector<int>& ns, const PrecisionConfig& cfg);

std::string to_string(const Real& v, int digits = 30);

}  // namespace mapenum
