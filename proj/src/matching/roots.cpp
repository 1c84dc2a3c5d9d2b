#include <stdexcept>

#include "mapenum/matching/matching.hpp"

namespace mapenum {

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_changes(const std::vector<UPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    const int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void isolate(const UPoly& p, const std::vector<UPoly>& chain, Rational a, Rational b, const Rational& width,
             RealRoots& out) {
  // Roots in (a, b].
  const int count = sign_changes(chain, a) - sign_changes(chain, b);
  if (count == 0) return;
  if (count == 1) {
    while (b - a > width) {
      const Rational mid = (a + b) / Rational(2);
      if (p(mid).is_zero()) {
        a = b = mid;
        break;
      }
      if (sign_changes(chain, a) - sign_changes(chain, mid) == 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.lo.push_back(a);
    out.hi.push_back(b);
    return;
  }
  const Rational mid = (a + b) / Rational(2);
  isolate(p, chain, a, mid, width, out);
  isolate(p, chain, mid, b, width, out);
}

}  // namespace

RealRoots real_roots(const UPoly& p, const Rational& width) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no isolated roots");
  RealRoots out;
  out.degree = p.degree();
  if (p.degree() < 1) return out;
  // Square-free part keeps the Sturm count equal to the number of distinct roots.
  const UPoly g = gcdex(p, p.derivative()).gcd;
  const UPoly sf = p.divmod(g).first;
  const auto chain = sturm_chain(sf);
  Rational bound(1);
  const Rational lead = sf.leading().abs();
  for (int i = 0; i < sf.degree(); ++i) {
    const Rational r = sf.coeff(i).abs() / lead;
    if (r + Rational(1) > bound) bound = r + Rational(1);
  }
  isolate(sf, chain, -bound, bound, width, out);
  return out;
}

std::vector<double> RealRoots::approx() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < lo.size(); ++i) out.push_back(((lo[i] + hi[i]) / Rational(2)).to_double());
  return out;
}

bool interlaced(const RealRoots& inner, const RealRoots& outer) {
  if (!inner.all_real() || !outer.all_real()) return false;
  if (outer.lo.size() != inner.lo.size() + 1) return false;
  for (std::size_t i = 0; i < inner.lo.size(); ++i) {
    if (!(outer.hi[i] < inner.lo[i])) return false;
    if (!(inner.hi[i] < outer.lo[i + 1])) return false;
  }
  return true;
}

}  // namespace mapenum
