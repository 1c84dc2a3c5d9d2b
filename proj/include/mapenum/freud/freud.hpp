#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapenum/exact/param_poly.hpp"
#include "mapenum/series/gauge_series.hpp"

namespace mapenum {

/// M_nu as a polynomial in x_{n+j}, |j| < nu. A monomial is the sorted list of
/// its nu offsets j; the value is its positive integer multiplicity.
struct FreudPolynomial {
  int nu = 0;
  std::map<std::vector<int>, long> terms;

  /// Value at x_{n+j} = 1 for all j.
  long all_ones() const;
  /// The offset reversal j -> -j (the transpose of every lattice walk).
  FreudPolynomial reflected() const;
  /// e.g. "x[n-1]*x[n] + x[n]^2 + x[n]*x[n+1]"
  std::string str() const;

  friend bool operator==(const FreudPolynomial& a, const FreudPolynomial& b) {
    return a.nu == b.nu && a.terms == b.terms;
  }
};

/// Builds M_nu from the (n, n-1) entry of J^{2 nu - 1} for the symmetric
/// tridiagonal J with off-diagonal entries b_k, times b_n, with b_k^2 -> x_k.
FreudPolynomial build_freud(int nu);

/// Binomial constant C(2nu-1, nu-1) = M_nu(1,...,1).
long freud_constant(int nu);

/// Coefficients c_k(N, r), k = -1..kmax, of x_n ~ sum c_k n^{-k/nu} solving
/// n/N = x_n + r M_nu, as Laurent polynomials in A = N^{1/nu}, B = r^{1/nu}
/// over Q(theta), theta^nu = C(2nu-1, nu-1).
struct CmExpansion {
  int nu = 0;
  int kmax = -1;
  FieldPtr field;
  std::vector<ParamPoly> c;  // c[k + 1]

  const ParamPoly& coeff(int k) const;
  /// x_n as a gauge series in u = n^{-1/nu}, order kmax.
  GaugeSeries<ParamPoly> series() const;
  nlohmann::json to_json() const;
};

struct CmOptions {
  // Recompute the full residual with gauge-series arithmetic after the solve.
  bool self_check = true;
};

CmExpansion cm_expand(int nu, int kmax, const CmOptions& opts = {});

/// Residual x + B^nu M_nu(shifted x) - A^{-nu} u^{-nu} computed with
/// gauge-series arithmetic; vanishes through order kmax + 1 - nu for a solved
/// expansion.
GaugeSeries<ParamPoly> cm_residual(const CmExpansion& e);

/// sum_k c_k(1/alpha, 1/xi) n^{-1-k/nu}: A is replaced by the supplied value of
/// alpha^{-1/nu}; B stays formal and stands for xi^{-1/nu}.
GaugeSeries<ParamPoly> rescale_cm(const CmExpansion& e, const RadicalElem& a_value);

}  // namespace mapenum
