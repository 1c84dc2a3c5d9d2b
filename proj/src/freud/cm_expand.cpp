#include <map>
#include <stdexcept>

#include "mapenum/error.hpp"
#include "mapenum/exact/json_io.hpp"
#include "mapenum/freud/freud.hpp"

namespace mapenum {

const ParamPoly& CmExpansion::coeff(int k) const {
  if (k < -1 || k > kmax) {
    throw ShortfallError("c_" + std::to_string(k) + " not available (kmax = " + std::to_string(kmax) + ")");
  }
  return c[static_cast<std::size_t>(k + 1)];
}

GaugeSeries<ParamPoly> CmExpansion::series() const {
  GaugeSeries<ParamPoly> s(nu, kmax);
  for (int k = -1; k <= kmax; ++k) s.set(k, coeff(k));
  return s;
}

nlohmann::json CmExpansion::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = -1; k <= kmax; ++k) coeffs.push_back({{"k", k}, {"c", mapenum::to_json(coeff(k))}});
  return {{"nu", nu},
          {"kmax", kmax},
          {"theta", {{"m", field->degree()}, {"k", field->radicand().str()}}},
          {"coefficients", coeffs}};
}

namespace {

// Order-by-order solver. X_j[q] is the coefficient of u^q in x_{n+j}; at step m
// everything with q < m is final and X_j[m] = c_m + rest_j(m).
class CmSolver {
 public:
  CmSolver(int nu, int kmax) : nu_(nu), kmax_(kmax), M_(build_freud(nu)) {
    field_ = make_field(nu, Rational(freud_constant(nu)));
    for (int j = -(nu - 1); j <= nu - 1; ++j) X_[j] = {};
    Bnu_ = ParamPoly::monomial(0, nu, Rational(1));
    Aminus_ = ParamPoly::monomial(-nu, 0, Rational(1));
  }

  CmExpansion run() {
    // Leading balance: B^nu C c_{-1}^nu = A^{-nu}, positive root.
    c_.push_back(ParamPoly::monomial(-1, -1, RadicalElem::theta(field_, -1)));
    m_ = -1;
    finalize_step();
    m_ = 0;
    if (!residual(-nu_).is_zero()) throw ConsistencyError("leading balance of the Freud equation failed");
    // d(residual)/dc_m = nu C B^nu c_{-1}^{nu-1}, a unit monomial.
    ParamPoly expected_slope = Bnu_ * ParamPoly(Rational(nu_ * freud_constant(nu_)));
    for (int i = 0; i < nu_ - 1; ++i) expected_slope = expected_slope * c_[0];

    for (m_ = 0; m_ <= kmax_; ++m_) {
      const int p = m_ + 1 - nu_;
      for (auto& [j, xs] : X_) rest_[j] = shift_tail(j, m_);
      probe_ = ParamPoly();
      const ParamPoly r0 = residual(p);
      probe_ = ParamPoly(Rational(1));
      const ParamPoly r1 = residual(p);
      const ParamPoly slope = r1 - r0;
      if (slope.is_zero()) {
        throw ConsistencyError("vanishing affine slope while solving for c_" + std::to_string(m_));
      }
      if (!(slope == expected_slope)) {
        throw ConsistencyError("affine slope for c_" + std::to_string(m_) + " is " + slope.str() +
                               ", expected " + expected_slope.str());
      }
      c_.push_back(-(r0 * slope.inverse()));
      finalize_step();
    }
    CmExpansion e;
    e.nu = nu_;
    e.kmax = kmax_;
    e.field = field_;
    e.c = c_;
    return e;
  }

 private:
  const ParamPoly& c(int k) const { return c_[static_cast<std::size_t>(k + 1)]; }

  // sum_{k>=1} c_{q - nu k} C(-(q - nu k)/nu, k) j^k
  ParamPoly shift_tail(int j, int q) const {
    ParamPoly acc;
    Rational jk(j);
    for (int k = 1; q - nu_ * k >= -1; ++k) {
      const int i = q - nu_ * k;
      const Rational w = generalized_binomial(Rational(-i, nu_), static_cast<unsigned>(k)) * jk;
      if (!w.is_zero()) acc += c(i) * ParamPoly(w);
      jk *= Rational(j);
    }
    return acc;
  }

  ParamPoly X(int j, int q) const {
    if (q < m_) return X_.at(j)[static_cast<std::size_t>(q + 1)];
    if (q == m_) return probe_ + rest_.at(j);
    throw std::logic_error("coefficient beyond current order requested");
  }

  void finalize_step() {
    for (auto& [j, xs] : X_) xs.push_back(c(m_) + shift_tail(j, m_));
  }

  // Coefficient of u^s in the product of the factors prefix[0..t-1].
  ParamPoly prod_coeff(const std::vector<int>& factors, std::size_t t, int s) {
    if (t == 1) return s >= -1 ? X(factors[0], s) : ParamPoly();
    const std::vector<int> key(factors.begin(), factors.begin() + static_cast<long>(t));
    const bool final_value = s + static_cast<int>(t) - 1 <= m_ - 1;
    if (final_value) {
      auto it = cache_.find(key);
      if (it != cache_.end()) {
        auto jt = it->second.find(s);
        if (jt != it->second.end()) return jt->second;
      }
    }
    ParamPoly acc;
    const int last = factors[t - 1];
    for (int q = -(static_cast<int>(t) - 1); q <= s + 1; ++q) {
      const ParamPoly left = prod_coeff(factors, t - 1, q);
      if (left.is_zero()) continue;
      const ParamPoly right = X(last, s - q);
      if (right.is_zero()) continue;
      acc += left * right;
    }
    if (final_value) cache_[key][s] = acc;
    return acc;
  }

  ParamPoly residual(int p) {
    ParamPoly acc;
    for (const auto& [mono, mult] : M_.terms) {
      acc += prod_coeff(mono, mono.size(), p) * ParamPoly(Rational(mult));
    }
    acc = acc * Bnu_;
    if (p >= -1) acc += c(p);
    if (p == -nu_) acc -= Aminus_;
    return acc;
  }

  int nu_;
  int kmax_;
  FreudPolynomial M_;
  FieldPtr field_;
  ParamPoly Bnu_, Aminus_;
  std::vector<ParamPoly> c_;
  std::map<int, std::vector<ParamPoly>> X_;  // X_[j][q + 1], q < m
  std::map<int, ParamPoly> rest_;
  std::map<std::vector<int>, std::map<int, ParamPoly>> cache_;
  ParamPoly probe_;
  int m_ = -1;
};

}  // namespace

GaugeSeries<ParamPoly> cm_residual(const CmExpansion& e) {
  const int nu = e.nu;
  const GaugeSeries<ParamPoly> x = e.series();
  std::map<int, GaugeSeries<ParamPoly>> shifted;
  for (int j = -(nu - 1); j <= nu - 1; ++j) shifted.emplace(j, shift_reexpand(x, j));
  const FreudPolynomial M = build_freud(nu);
  GaugeSeries<ParamPoly> total(nu, e.kmax + 1 - nu);
  for (const auto& [mono, mult] : M.terms) {
    GaugeSeries<ParamPoly> prod = shifted.at(mono[0]);
    for (std::size_t i = 1; i < mono.size(); ++i) prod = prod * shifted.at(mono[i]);
    total = total + prod.scaled(ParamPoly(Rational(mult)));
  }
  total = total.scaled(ParamPoly::monomial(0, nu, Rational(1)));
  total = total + x;
  total.add(-nu, ParamPoly::monomial(-nu, 0, Rational(-1)));
  return total;
}

CmExpansion cm_expand(int nu, int kmax, const CmOptions& opts) {
  if (nu < 2) throw std::invalid_argument("cm_expand requires nu >= 2");
  if (kmax < -1) throw std::invalid_argument("kmax must be >= -1");
  CmExpansion e = CmSolver(nu, kmax).run();
  for (int k = -1; k <= kmax; ++k) {
    if (!e.coeff(k).homogeneous(1, nu - 1, -nu)) {
      throw ConsistencyError("c_" + std::to_string(k) + " is not homogeneous: " + e.coeff(k).str());
    }
  }
  if (opts.self_check && kmax >= nu - 1) {
    const auto r = cm_residual(e);
    if (r.order() < kmax + 1 - nu || !r.is_zero()) {
      throw ConsistencyError("self-check residual does not vanish through the solved order");
    }
  }
  return e;
}

GaugeSeries<ParamPoly> rescale_cm(const CmExpansion& e, const RadicalElem& a_value) {
  GaugeSeries<ParamPoly> out(e.nu, e.kmax + e.nu);
  for (int k = -1; k <= e.kmax; ++k) {
    ParamPoly sub;
    for (const auto& [key, coef] : e.coeff(k).terms()) {
      sub += ParamPoly::monomial(0, key.second, coef * a_value.pow(key.first));
    }
    out.set(k + e.nu, sub);
  }
  return out;
}

}  // namespace mapenum
