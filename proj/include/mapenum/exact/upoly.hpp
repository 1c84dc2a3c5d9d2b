#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mapenum/exact/rational.hpp"

namespace mapenum {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending degree order with no trailing zeros. The zero polynomial has no
/// coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> ascending);
  UPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  UPoly(long constant) : UPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static UPoly monomial(const Rational& c, int degree);
  /// The polynomial a + b*x.
  static UPoly linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  /// this(inner(x)).
  UPoly compose(const UPoly& inner) const;
  UPoly pow(unsigned e) const;
  UPoly monic() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (q, r) with this = q*d + r, deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

  /// Renders with the given variable name, highest degree first, e.g.
  /// "9*z^2 - 4*z + 1/3".
  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct GcdexResult {
  UPoly gcd;  // monic
  UPoly s;    // s*a + t*b = gcd
  UPoly t;
};

GcdexResult gcdex(const UPoly& a, const UPoly& b);

}  // namespace mapenum
