#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "mapenum/exact/rational.hpp"

namespace mapenum {

/// The field Q(theta) with theta^m = k, theta the positive real root.
class RadicalField {
 public:
  RadicalField(int degree, Rational radicand);

  int degree() const { return m_; }
  const Rational& radicand() const { return k_; }
  std::string str() const;

  friend bool operator==(const RadicalField& a, const RadicalField& b) {
    return a.m_ == b.m_ && a.k_ == b.k_;
  }

 private:
  int m_;
  Rational k_;
};

using FieldPtr = std::shared_ptr<const RadicalField>;

FieldPtr make_field(int degree, const Rational& radicand);

/// True when both pointers denote the same field; two null pointers (plain Q)
/// compare equal.
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of Q(theta), stored as coefficients of theta^0..theta^{m-1}.
///
/// A null field means the element is a plain rational. Mixed operations promote
/// such elements into the other operand's field; combining two elements with
/// irrational parts from different fields throws FieldMismatch.
class RadicalElem {
 public:
  RadicalElem() : c_(1) {}
  RadicalElem(const Rational& q) : c_{q} {}  // NOLINT(google-explicit-constructor)
  RadicalElem(long q) : c_{Rational(q)} {}   // NOLINT(google-explicit-constructor)
  RadicalElem(int q) : c_{Rational(q)} {}    // NOLINT(google-explicit-constructor)
  RadicalElem(FieldPtr field, std::vector<Rational> coeffs);

  /// theta^e for any integer e (negative powers use theta^{-1} = theta^{m-1}/k).
  static RadicalElem theta(const FieldPtr& field, int e = 1);

  const FieldPtr& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;

  bool is_zero() const;
  /// All theta-components vanish.
  bool is_rational() const;
  /// The theta^0 component; throws ConsistencyError unless is_rational().
  Rational to_rational() const;

  RadicalElem inverse() const;
  RadicalElem pow(long e) const;

  double to_double() const;
  std::string str() const;

  RadicalElem operator-() const;
  RadicalElem& operator+=(const RadicalElem& o);
  RadicalElem& operator-=(const RadicalElem& o);
  RadicalElem& operator*=(const RadicalElem& o);
  RadicalElem& operator*=(const Rational& s);
  RadicalElem& operator/=(const RadicalElem& o) { return *this *= o.inverse(); }

  friend RadicalElem operator+(RadicalElem a, const RadicalElem& b) { return a += b; }
  friend RadicalElem operator-(RadicalElem a, const RadicalElem& b) { return a -= b; }
  friend RadicalElem operator*(RadicalElem a, const RadicalElem& b) { return a *= b; }
  friend RadicalElem operator*(RadicalElem a, const Rational& s) { return a *= s; }
  friend RadicalElem operator/(RadicalElem a, const RadicalElem& b) { return a /= b; }
  friend bool operator==(const RadicalElem& a, const RadicalElem& b);

  friend std::ostream& operator<<(std::ostream& os, const RadicalElem& e);

 private:
  // Returns the field both operands live in after promotion.
  static FieldPtr unify(const RadicalElem& a, const RadicalElem& b);
  void promote(const FieldPtr& f);

  FieldPtr f_;
  std::vector<Rational> c_;
};

}  // namespace mapenum
