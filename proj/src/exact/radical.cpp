#include "mapenum/exact/radical.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "mapenum/error.hpp"
#include "mapenum/exact/upoly.hpp"

namespace mapenum {

RadicalField::RadicalField(int degree, Rational radicand) : m_(degree), k_(std::move(radicand)) {
  if (m_ < 1) throw std::invalid_argument("radical field degree must be >= 1");
  if (k_.sign() <= 0) throw std::invalid_argument("radicand must be positive");
}

std::string RadicalField::str() const {
  return "Q(theta), theta^" + std::to_string(m_) + " = " + k_.str();
}

FieldPtr make_field(int degree, const Rational& radicand) {
  return std::make_shared<const RadicalField>(degree, radicand);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

RadicalElem::RadicalElem(FieldPtr field, std::vector<Rational> coeffs) : f_(std::move(field)) {
  const std::size_t m = f_ ? static_cast<std::size_t>(f_->degree()) : 1;
  if (coeffs.size() > m) throw std::invalid_argument("too many coefficients for radical field");
  coeffs.resize(m);
  c_ = std::move(coeffs);
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string theta_power_str(const RadicalField& f, int i) {
  if (f.degree() == 2) return "sqrt(" + f.radicand().str() + ")";
  return f.radicand().str() + "^(" + Rational(i, f.degree()).str() + ")";
}

}  // namespace

RadicalElem RadicalElem::theta(const FieldPtr& field, int e) {
  if (!field) throw std::invalid_argument("theta requires a radical field");
  const long m = field->degree();
  const long q = floor_div(e, m);
  const long rem = e - q * m;
  std::vector<Rational> c(static_cast<std::size_t>(m));
  c[static_cast<std::size_t>(rem)] = field->radicand().pow(q);
  return RadicalElem(field, std::move(c));
}

Rational RadicalElem::coeff(int i) const {
  if (i < 0 || i >= degree()) return {};
  return c_[static_cast<std::size_t>(i)];
}

bool RadicalElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool RadicalElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational RadicalElem::to_rational() const {
  if (!is_rational()) throw ConsistencyError("expected a rational value, got " + str());
  return c_[0];
}

FieldPtr RadicalElem::unify(const RadicalElem& a, const RadicalElem& b) {
  if (same_field(a.f_, b.f_)) return a.f_;
  if (!a.f_) return b.f_;
  if (!b.f_) return a.f_;
  if (a.is_rational()) return b.f_;
  if (b.is_rational()) return a.f_;
  throw FieldMismatch("operands live in different radical fields: " + a.f_->str() + " vs " +
                      b.f_->str());
}

void RadicalElem::promote(const FieldPtr& f) {
  if (same_field(f_, f)) {
    f_ = f;
    return;
  }
  if (!is_rational()) throw FieldMismatch("cannot move an irrational element between fields");
  Rational q = c_[0];
  c_.assign(f ? static_cast<std::size_t>(f->degree()) : 1, Rational());
  c_[0] = std::move(q);
  f_ = f;
}

RadicalElem RadicalElem::operator-() const {
  RadicalElem out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

RadicalElem& RadicalElem::operator+=(const RadicalElem& o) {
  const FieldPtr f = unify(*this, o);
  promote(f);
  RadicalElem rhs = o;
  rhs.promote(f);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

RadicalElem& RadicalElem::operator-=(const RadicalElem& o) {
  const FieldPtr f = unify(*this, o);
  promote(f);
  RadicalElem rhs = o;
  rhs.promote(f);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

RadicalElem& RadicalElem::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

RadicalElem& RadicalElem::operator*=(const RadicalElem& o) {
  if (o.is_rational()) {
    if (!f_ && o.f_) promote(o.f_);
    return *this *= o.c_[0];
  }
  if (is_rational()) {
    const Rational s = c_[0];
    *this = o;
    return *this *= s;
  }
  const FieldPtr f = unify(*this, o);
  const std::size_t m = c_.size();
  const Rational& k = f->radicand();
  std::vector<Rational> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (o.c_[j].is_zero()) continue;
      Rational p = c_[i] * o.c_[j];
      if (i + j >= m) {
        out[i + j - m] += p * k;
      } else {
        out[i + j] += p;
      }
    }
  }
  c_ = std::move(out);
  f_ = f;
  return *this;
}

RadicalElem RadicalElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero radical element");
  if (is_rational()) {
    RadicalElem out = *this;
    for (auto& c : out.c_) c = Rational();
    out.c_[0] = c_[0].inverse();
    return out;
  }
  const int m = f_->degree();
  UPoly modulus = UPoly::monomial(Rational(1), m) - UPoly(f_->radicand());
  auto res = gcdex(UPoly(c_), modulus);
  if (res.gcd.degree() != 0) {
    throw DivisionByZero("element is a zero divisor: theta^" + std::to_string(m) + " - " +
                         f_->radicand().str() + " is reducible");
  }
  UPoly s = res.s.divmod(modulus).second;
  std::vector<Rational> c(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = s.coeff(i);
  return RadicalElem(f_, std::move(c));
}

RadicalElem RadicalElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RadicalElem result = Rational(1);
  RadicalElem base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

double RadicalElem::to_double() const {
  if (!f_) return c_[0].to_double();
  const double th = std::pow(f_->radicand().to_double(), 1.0 / f_->degree());
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * th + it->to_double();
  return acc;
}

std::string RadicalElem::str() const {
  if (is_rational()) return c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << theta_power_str(*f_, static_cast<int>(i));
    if (f_->degree() == 2 && i > 1) os << "^" << i;
  }
  return os.str();
}

bool operator==(const RadicalElem& a, const RadicalElem& b) {
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  if (a.is_rational() != b.is_rational()) return false;
  if (!same_field(a.f_, b.f_)) return false;
  return a.c_ == b.c_;
}

std::ostream& operator<<(std::ostream& os, const RadicalElem& e) { return os << e.str(); }

}  // namespace mapenum
