#pragma once

#include "mapenum/exact/radical.hpp"
#include "mapenum/series/gauge_series.hpp"
#include "mapenum/series/power_series.hpp"

namespace mapenum {

enum class StringKind { Even, Trivalent };

/// Even valence 2nu: 1 = z + C(2nu-1, nu-1) r z^nu (coupling r).
/// Trivalent: 1 = z^2 - 72 t^2 z^3 (coupling t).
struct StringEquationSpec {
  StringKind kind = StringKind::Even;
  int nu = 2;

  static StringEquationSpec even(int nu);
  static StringEquationSpec trivalent();
  long constant() const;
};

/// The field Q(theta), theta^nu = C(2nu-1, nu-1), shared by all nu-indexed
/// exact computations.
FieldPtr theta_field(int nu);

/// z_0 at gamma = 1 as a power series in v = n^{-(nu-1)/nu}, through v^mmax.
/// Obtained as z = v w with C w^nu + v w - 1 = 0, w(0) = theta^{-1}.
PowerSeries<RadicalElem> z0_puiseux_v(int nu, int mmax);

/// Same expansion on the u = n^{-1/nu} grid: nonzero only at multiples of nu-1.
GaugeSeries<RadicalElem> z0_puiseux(int nu, int order);

/// Taylor series of z_0 in the natural coupling (r, or t for trivalent).
CouplingSeries z0_coupling_series(const StringEquationSpec& spec, int J);

/// c_j -> c_j * factor^j, i.e. substitution coupling -> factor * coupling.
CouplingSeries rescale_coupling(const CouplingSeries& s, const Rational& factor);

/// nu = 2 series in s = -r/4, solving 1 = z - 12 s z^2.
CouplingSeries z0_s_series(int J);

/// (-1 + sqrt(1 + 12 alpha r)) / (6 alpha r); 1 at alpha r = 0.
double z0_closed_nu2(double r, double alpha);

/// Exact value in Q(sqrt(1 + 12 alpha r)); the caller may check
/// 3 alpha r z^2 + z - 1 = 0 in that field.
RadicalElem z0_closed_nu2_exact(const Rational& r, const Rational& alpha);

}  // namespace mapenum
