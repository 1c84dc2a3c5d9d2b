#include "mapenum/exact/param_poly.hpp"

#include <ostream>
#include <sstream>

#include "mapenum/error.hpp"

namespace mapenum {

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, RadicalElem(c));
}

ParamPoly::ParamPoly(const RadicalElem& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

ParamPoly ParamPoly::monomial(int eA, int eB, const RadicalElem& c) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_.emplace(Key{eA, eB}, c);
  return p;
}

RadicalElem ParamPoly::coeff(int eA, int eB) const {
  auto it = terms_.find({eA, eB});
  return it == terms_.end() ? RadicalElem() : it->second;
}

void ParamPoly::add_term(const Key& k, const RadicalElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::map<int, RadicalElem> ParamPoly::at_unit_A() const {
  std::map<int, RadicalElem> out;
  for (const auto& [k, c] : terms_) {
    auto [it, inserted] = out.try_emplace(k.second, c);
    if (!inserted) it->second += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

ParamPoly ParamPoly::inverse() const {
  if (terms_.size() != 1) {
    throw DivisionByZero("only monomial parameter polynomials are invertible (got " +
                         std::to_string(terms_.size()) + " terms)");
  }
  const auto& [k, c] = *terms_.begin();
  return monomial(-k.first, -k.second, c.inverse());
}

ParamPoly ParamPoly::mul_monomial(int eA, int eB, const RadicalElem& c) const {
  ParamPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.add_term({k.first + eA, k.second + eB}, v * c);
  return out;
}

bool ParamPoly::homogeneous(int wA, int wB, int weight) const {
  for (const auto& [k, c] : terms_)
    if (wA * k.first + wB * k.second != weight) return false;
  return true;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (k.first != 0) os << "*A^" << k.first;
    if (k.second != 0) os << "*B^" << k.second;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

}  // namespace mapenum
