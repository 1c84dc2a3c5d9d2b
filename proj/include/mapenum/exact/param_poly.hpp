#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "mapenum/exact/radical.hpp"

namespace mapenum {

/// Laurent polynomial in the scaling symbols A = N^{1/nu}, B = r^{1/nu} with
/// coefficients in Q(theta). Zero coefficients are never stored.
class ParamPoly {
 public:
  using Key = std::pair<int, int>;  // (eA, eB)
  using Terms = std::map<Key, RadicalElem>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);     // NOLINT(google-explicit-constructor)
  ParamPoly(const RadicalElem& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static ParamPoly monomial(int eA, int eB, const RadicalElem& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RadicalElem coeff(int eA, int eB) const;

  /// Sets A = 1 and collects by powers of B.
  std::map<int, RadicalElem> at_unit_A() const;

  /// Monomials only: inverse of c*A^a*B^b.
  ParamPoly inverse() const;
  ParamPoly mul_monomial(int eA, int eB, const RadicalElem& c) const;

  /// True when every term satisfies wA*eA + wB*eB == weight.
  bool homogeneous(int wA, int wB, int weight) const;

  std::string str() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

 private:
  void add_term(const Key& k, const RadicalElem& c);
  Terms terms_;
};

}  // namespace mapenum
