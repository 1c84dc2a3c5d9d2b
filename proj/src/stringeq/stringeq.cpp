#include "mapenum/stringeq/stringeq.hpp"

#include <cmath>
#include <stdexcept>

#include "mapenum/error.hpp"

namespace mapenum {

StringEquationSpec StringEquationSpec::even(int nu) {
  if (nu < 2) throw std::invalid_argument("even valence requires nu >= 2");
  return {StringKind::Even, nu};
}

StringEquationSpec StringEquationSpec::trivalent() { return {StringKind::Trivalent, 0}; }

long StringEquationSpec::constant() const {
  if (kind == StringKind::Trivalent) return 72;
  return binomial(static_cast<unsigned long>(2 * nu - 1), static_cast<unsigned long>(nu - 1)).get_si();
}

FieldPtr theta_field(int nu) {
  return make_field(nu, Rational(StringEquationSpec::even(nu).constant()));
}

PowerSeries<RadicalElem> z0_puiseux_v(int nu, int mmax) {
  if (mmax < 1) throw ShortfallError("Puiseux order too small");
  const auto f = theta_field(nu);
  const int n = mmax - 1;  // w through v^{mmax-1}
  using PS = PowerSeries<RadicalElem>;
  std::vector<PS> a(static_cast<std::size_t>(nu) + 1, PS(n));
  a[0] = PS::constant(n, RadicalElem(-1));
  a[1] = PS::variable(n);
  a[static_cast<std::size_t>(nu)] = PS::constant(n, RadicalElem(StringEquationSpec::even(nu).constant()));
  const PS w = newton_solve(a, RadicalElem::theta(f, -1));
  PS z(mmax);
  for (int m = 1; m <= mmax; ++m) z[m] = w[m - 1];
  return z;
}

GaugeSeries<RadicalElem> z0_puiseux(int nu, int order) {
  if (order < nu - 1) throw ShortfallError("Puiseux order must be at least nu - 1");
  const int mmax = order / (nu - 1);
  const auto z = z0_puiseux_v(nu, mmax);
  GaugeSeries<RadicalElem> out(nu, order);
  for (int m = 1; m <= mmax; ++m) out.set((nu - 1) * m, z[m]);
  return out;
}

CouplingSeries z0_coupling_series(const StringEquationSpec& spec, int J) {
  if (J < 0) throw std::invalid_argument("series order must be >= 0");
  std::vector<CouplingSeries> a;
  if (spec.kind == StringKind::Even) {
    a.assign(static_cast<std::size_t>(spec.nu) + 1, CouplingSeries(J));
    a[0] = CouplingSeries::constant(J, Rational(-1));
    a[1] = CouplingSeries::constant(J, Rational(1));
    a[static_cast<std::size_t>(spec.nu)] += CouplingSeries::variable(J) * Rational(spec.constant());
  } else {
    a.assign(4, CouplingSeries(J));
    a[0] = CouplingSeries::constant(J, Rational(-1));
    a[2] = CouplingSeries::constant(J, Rational(1));
    if (J >= 2) a[3][2] = Rational(-72);
  }
  return newton_solve(a, Rational(1));
}

CouplingSeries rescale_coupling(const CouplingSeries& s, const Rational& factor) {
  CouplingSeries out = s;
  Rational p(1);
  for (int j = 0; j <= s.order(); ++j) {
    out[j] = s[j] * p;
    p *= factor;
  }
  return out;
}

CouplingSeries z0_s_series(int J) {
  return rescale_coupling(z0_coupling_series(StringEquationSpec::even(2), J), Rational(-4));
}

double z0_closed_nu2(double r, double alpha) {
  const double ar = alpha * r;
  if (ar <= -1.0 / 12.0) throw std::domain_error("alpha r lies on the branch cut (<= -1/12)");
  if (ar == 0.0) return 1.0;
  return 2.0 / (1.0 + std::sqrt(1.0 + 12.0 * ar));  // rationalized, stable near 0
}

RadicalElem z0_closed_nu2_exact(const Rational& r, const Rational& alpha) {
  const Rational ar = alpha * r;
  if (ar <= Rational(-1, 12)) throw std::domain_error("alpha r lies on the branch cut (<= -1/12)");
  if (ar.is_zero()) return RadicalElem(1);
  const auto f = make_field(2, Rational(1) + Rational(12) * ar);
  return (RadicalElem::theta(f) - RadicalElem(1)) * (Rational(6) * ar).inverse();
}

}  // namespace mapenum
