#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mapenum/error.hpp"
#include "mapenum/exact/rational.hpp"

namespace mapenum {

/// Truncated Laurent series in u = n^{-1/nu}. Exponent e stands for n^{-e/nu}.
///
/// Coefficients are known for exponents up to and including order(); anything
/// beyond is undefined, not zero. Exponents below -nu are rejected.
template <class T>
class GaugeSeries {
 public:
  GaugeSeries(int nu, int order) : nu_(nu), order_(order) {
    if (nu < 1) throw std::invalid_argument("grid denominator must be >= 1");
    if (order < -nu) throw std::invalid_argument("truncation order below the grid floor");
  }

  static GaugeSeries monomial(int nu, int order, int e, const T& c) {
    GaugeSeries s(nu, order);
    s.set(e, c);
    return s;
  }

  int nu() const { return nu_; }
  int order() const { return order_; }
  const std::map<int, T>& terms() const { return c_; }

  T coeff(int e) const {
    if (e > order_) {
      throw ShortfallError("coefficient u^" + std::to_string(e) + " beyond truncation order " +
                           std::to_string(order_));
    }
    auto it = c_.find(e);
    return it == c_.end() ? T{} : it->second;
  }

  void set(int e, const T& c) {
    if (e < -nu_) throw std::invalid_argument("exponent below the grid floor -nu");
    if (e > order_) return;  // beyond truncation: dropped
    if (c.is_zero()) {
      c_.erase(e);
    } else {
      c_[e] = c;
    }
  }
  void add(int e, const T& c) {
    if (e > order_ || c.is_zero()) return;
    if (e < -nu_) throw std::invalid_argument("exponent below the grid floor -nu");
    auto [it, inserted] = c_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }

  /// Lowest exponent with a nonzero coefficient, or order()+1 for a series
  /// known to vanish through its order.
  int valuation() const { return c_.empty() ? order_ + 1 : c_.begin()->first; }
  bool is_zero() const { return c_.empty(); }

  GaugeSeries truncated(int order) const {
    GaugeSeries out(nu_, std::min(order, order_));
    for (const auto& [e, c] : c_)
      if (e <= out.order_) out.c_.emplace(e, c);
    return out;
  }

  GaugeSeries operator-() const {
    GaugeSeries out = *this;
    for (auto& [e, c] : out.c_) c = -c;
    return out;
  }
  friend GaugeSeries operator+(const GaugeSeries& a, const GaugeSeries& b) {
    a.same_grid(b);
    GaugeSeries out = a.truncated(std::min(a.order_, b.order_));
    for (const auto& [e, c] : b.c_) out.add(e, c);
    return out;
  }
  friend GaugeSeries operator-(const GaugeSeries& a, const GaugeSeries& b) { return a + (-b); }

  /// Product; the guaranteed order is min(order_a + val_b, order_b + val_a).
  friend GaugeSeries operator*(const GaugeSeries& a, const GaugeSeries& b) {
    a.same_grid(b);
    const int order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
    GaugeSeries out(a.nu_, std::max(order, -a.nu_));
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_)
        if (ea + eb <= out.order_) out.add(ea + eb, ca * cb);
    return out;
  }
  GaugeSeries scaled(const T& s) const {
    GaugeSeries out(nu_, order_);
    for (const auto& [e, c] : c_) out.set(e, c * s);
    return out;
  }

  /// 1/a; valuation -v and order order-2v. The leading coefficient must be a unit.
  GaugeSeries reciprocal() const {
    if (c_.empty()) throw DivisionByZero("reciprocal of a series with no known nonzero term");
    const int v = valuation();
    const T inv0 = c_.begin()->second.inverse();
    GaugeSeries out(nu_, order_ - 2 * v);
    for (int t = 0; -v + t <= out.order_; ++t) {
      T acc{};
      for (const auto& [e, c] : c_) {
        const int s = e - v;
        if (s < 1) continue;
        if (s > t) break;
        auto it = out.c_.find(-v + t - s);
        if (it != out.c_.end()) acc += c * it->second;
      }
      out.set(-v + t, t == 0 ? inv0 : -(acc * inv0));
    }
    return out;
  }

  friend bool operator==(const GaugeSeries& a, const GaugeSeries& b) {
    return a.nu_ == b.nu_ && a.order_ == b.order_ && a.c_ == b.c_;
  }

  /// Debug dump {"exponent": coefficient}.
  nlohmann::json to_json(const std::function<nlohmann::json(const T&)>& enc) const {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [e, c] : c_) out[std::to_string(e)] = enc(c);
    return out;
  }

 private:
  void same_grid(const GaugeSeries& o) const {
    if (o.nu_ != nu_) throw std::invalid_argument("gauge grid mismatch");
  }

  int nu_;
  int order_;
  std::map<int, T> c_;
};

/// Re-expands sum_i c_i (n+j)^{-i/nu} in powers of n^{-1/nu}:
/// c_i u^i -> c_i u^i sum_k C(-i/nu, k) j^k u^{nu k}.
template <class T>
GaugeSeries<T> shift_reexpand(const GaugeSeries<T>& a, int j) {
  const int nu = a.nu();
  if (std::abs(j) >= nu) throw std::invalid_argument("shift must satisfy |j| < nu");
  if (j == 0) return a;
  if (a.order() < a.valuation() + nu) {
    throw ShortfallError("truncation too short to hold any shift correction");
  }
  GaugeSeries<T> out(nu, a.order());
  for (const auto& [i, c] : a.terms()) {
    const Rational expo(-i, nu);
    Rational jk(1);
    for (unsigned k = 0; i + nu * static_cast<int>(k) <= a.order(); ++k) {
      out.add(i + nu * static_cast<int>(k), c * T(generalized_binomial(expo, k) * jk));
      jk *= Rational(j);
    }
  }
  return out;
}

}  // namespace mapenum
