#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapenum/error.hpp"
#include "mapenum/exact/rational.hpp"

namespace mapenum {

/// Truncated power series c_0 + c_1 x + ... + c_J x^J over a field-like
/// coefficient type T (Rational or RadicalElem). T{} must be zero, T must be
/// constructible from Rational and provide is_zero() and inverse().
template <class T>
class PowerSeries {
 public:
  PowerSeries() : c_(1) {}
  explicit PowerSeries(int order) : c_(check_order(order) + 1) {}
  PowerSeries(int order, std::vector<T> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(check_order(order)) + 1);
  }

  static PowerSeries constant(int order, const T& c) {
    PowerSeries s(order);
    s.c_[0] = c;
    return s;
  }
  /// The series x.
  static PowerSeries variable(int order) {
    PowerSeries s(order);
    if (order >= 1) s.c_[1] = T(Rational(1));
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  T& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  PowerSeries truncated(int order) const {
    if (order > this->order()) throw ShortfallError("cannot extend a truncated series");
    return PowerSeries(order, std::vector<T>(c_.begin(), c_.begin() + order + 1));
  }

  PowerSeries operator-() const {
    PowerSeries out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }
  PowerSeries& operator+=(const PowerSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  PowerSeries& operator*=(const T& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const T& s) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.same_order(b);
    const int n = a.order();
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b.c_[static_cast<std::size_t>(j)].is_zero()) continue;
        out.c_[static_cast<std::size_t>(i + j)] +=
            a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
      }
    }
    return out;
  }
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

  /// Multiplicative inverse; the constant term must be a unit.
  PowerSeries reciprocal() const {
    if (c_[0].is_zero()) throw DivisionByZero("power series with zero constant term is not invertible");
    const int n = order();
    PowerSeries out(n);
    const T inv0 = c_[0].inverse();
    out.c_[0] = inv0;
    for (int k = 1; k <= n; ++k) {
      T acc{};
      for (int i = 1; i <= k; ++i) {
        const auto& a = c_[static_cast<std::size_t>(i)];
        if (a.is_zero()) continue;
        acc += a * out.c_[static_cast<std::size_t>(k - i)];
      }
      out.c_[static_cast<std::size_t>(k)] = -(acc * inv0);
    }
    return out;
  }

  PowerSeries pow(unsigned e) const {
    PowerSeries result = constant(order(), T(Rational(1)));
    PowerSeries base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  PowerSeries derivative() const {
    PowerSeries out(order());
    for (int i = 1; i <= order(); ++i)
      out.c_[static_cast<std::size_t>(i - 1)] = c_[static_cast<std::size_t>(i)] * T(Rational(i));
    return out;
  }

  /// ln(f) for f(0) = 1, via ln(1 + h) = sum_{k>=1} (-1)^{k+1} h^k / k.
  PowerSeries log() const {
    if (!(c_[0] == T(Rational(1)))) {
      throw DivisionByZero("logarithm expansion point must have value 1");
    }
    PowerSeries h = *this;
    h.c_[0] = T{};
    PowerSeries out(order());
    PowerSeries hk = h;
    for (int k = 1; k <= order(); ++k) {
      const Rational w((k % 2 == 1) ? 1 : -1, k);
      out += hk * T(w);
      hk *= h;
    }
    return out;
  }

  /// Polynomial p(this) with coefficients in T given ascending.
  PowerSeries eval_poly(const std::vector<T>& p) const {
    PowerSeries acc(order());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      acc *= *this;
      acc.c_[0] += *it;
    }
    return acc;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return order;
  }
  void same_order(const PowerSeries& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("series truncation orders differ");
  }

  std::vector<T> c_;
};

using CouplingSeries = PowerSeries<Rational>;

/// Solves sum_i a_i(x) w^i = 0 for w by Newton iteration in the power-series
/// ring, starting from the constant w0 (a simple root at x = 0).
template <class T>
PowerSeries<T> newton_solve(const std::vector<PowerSeries<T>>& a, const T& w0) {
  if (a.empty()) throw std::invalid_argument("empty polynomial");
  const int n = a[0].order();
  auto eval = [&](const PowerSeries<T>& w, bool deriv) {
    PowerSeries<T> acc(n);
    const int deg = static_cast<int>(a.size()) - 1;
    for (int i = deg; i >= (deriv ? 1 : 0); --i) {
      acc *= w;
      acc += deriv ? a[static_cast<std::size_t>(i)] * T(Rational(i)) : a[static_cast<std::size_t>(i)];
    }
    return acc;
  };
  PowerSeries<T> w = PowerSeries<T>::constant(n, w0);
  int correct = 1;
  for (int it = 0; it < 64 && correct <= 2 * (n + 1); ++it) {
    const PowerSeries<T> f = eval(w, false);
    if (f.is_zero()) return w;
    w -= f * eval(w, true).reciprocal();
    correct *= 2;
  }
  if (!eval(w, false).is_zero()) throw ConsistencyError("power-series Newton iteration did not converge");
  return w;
}

}  // namespace mapenum
