#include "mapenum/orbitnum/orbitnum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mapenum/error.hpp"

namespace mapenum {

namespace {

unsigned digits10_for(unsigned bits) { return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1; }

double potential(int nu, double N, double r, double l) {
  return N * (l * l / 2 + r * std::pow(l, 2 * nu) / (2 * nu));
}

// Largest x_n scale from the genus-zero balance n/N = x + C r x^nu.
double x_scale(int nu, double N, double r, int n) {
  const double C = static_cast<double>(freud_constant(nu));
  double lo = 0, hi = 1;
  while (hi + C * r * std::pow(hi, nu) < n / N) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    (mid + C * r * std::pow(mid, nu) < n / N ? lo : hi) = mid;
  }
  return hi;
}

struct Grid {
  Real h;
  std::vector<Real> nodes, weights;  // nonnegative half line; node 0 carries half weight
};

// Trapezoid rule on the symmetric grid i*h. The integrand p^2 w is entire, so
// the error is governed by aliasing at frequency 2 pi / h and by the tail.
Grid make_grid(int nu, const Real& N, const Real& r, int degree, const PrecisionConfig& cfg) {
  cfg.validate();
  const double Nd = N.convert_to<double>(), rd = r.convert_to<double>();
  const double budget = (cfg.bits + 64) * std::log(2.0);
  const double L = 2.0 * std::sqrt(x_scale(nu, Nd, rd, std::max(degree, 1)));
  double R = cfg.radius;
  if (R <= 0) {
    // tail: (l + L)^{2 degree} exp(-N V) falls below its peak by the budget
    auto g = [&](double l) { return 2.0 * degree * std::log(l + L + 1.0) - potential(nu, Nd, rd, l); };
    double peak = 0, gmax = g(0);
    for (double l = 0; l < 1e4; l += 0.01) {
      const double v = g(l);
      if (v > gmax) gmax = v, peak = l;
      if (l > peak + 1 && v < gmax - budget) break;
    }
    R = peak;
    while (g(R) > gmax - budget - 2.0 * degree * std::log(4.0)) R += 0.01;
  }
  double h = cfg.step;
  if (h <= 0) {
    // oscillation scale of a degree-2n polynomial over [-L, L], plus the
    // band the weight itself needs: its transform decays like
    // exp(-c w^{2nu/(2nu-1)}) on the scale (N r)^{1/(2nu)}
    const double omega = 2.0 * M_PI * degree / L + budget / L;
    const double gauss = 2.0 * std::sqrt(budget * Nd);
    const double top = 2.0 * std::pow(budget, (2.0 * nu - 1) / (2.0 * nu)) * std::pow(Nd * rd, 1.0 / (2 * nu));
    h = 2.0 * M_PI / (omega + std::max(gauss, top));
  }
  const int K = static_cast<int>(std::ceil(R / h));
  Grid g;
  g.h = Real(h);
  g.nodes.reserve(static_cast<std::size_t>(K) + 1);
  g.weights.reserve(static_cast<std::size_t>(K) + 1);
  for (int i = 0; i <= K; ++i) {
    Real l = g.h * i;
    Real l2 = l * l;
    Real v = N * (l2 / 2 + r * boost::multiprecision::pow(l2, nu) / (2 * nu));
    Real w = (i == 0 ? g.h : 2 * g.h) * boost::multiprecision::exp(-v);
    g.nodes.push_back(std::move(l));
    g.weights.push_back(std::move(w));
  }
  return g;
}

}  // namespace

void PrecisionConfig::validate() const {
  if (bits < 128) throw std::invalid_argument("precision must be at least 128 bits");
  if (effective_tolerance_bits() >= bits) throw std::invalid_argument("tolerance exceeds working precision");
  if (step < 0 || radius < 0) throw std::invalid_argument("quadrature step and radius must be nonnegative");
}

Real PrecisionConfig::tolerance() const { return boost::multiprecision::ldexp(Real(1), -static_cast<int>(effective_tolerance_bits())); }

PrecisionScope::PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
  Real::default_precision(digits10_for(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
  Real out;
  mpfr_set_q(out.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

Real to_real(const RadicalElem& e) {
  if (e.is_rational()) return to_real(e.to_rational());
  const auto& f = *e.field();
  const Real theta = boost::multiprecision::pow(to_real(f.radicand()), Real(1) / f.degree());
  Real acc = 0, p = 1;
  for (const auto& c : e.coeffs()) {
    acc += to_real(c) * p;
    p *= theta;
  }
  return acc;
}

std::vector<Real> moments(int nu, const Real& N, const Real& r, int count, const PrecisionConfig& cfg) {
  if (N <= 0 || r <= 0) throw std::invalid_argument("moments need N, r > 0");
  if (count < 0) throw std::invalid_argument("moment count must be nonnegative");
  const Grid g = make_grid(nu, N, r, count, cfg);
  std::vector<Real> mu(static_cast<std::size_t>(2 * count) + 1, Real(0));
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Real l2 = g.nodes[i] * g.nodes[i];
    Real p = g.weights[i];
    for (int k = 0; k <= 2 * count; k += 2) {
      mu[static_cast<std::size_t>(k)] += p;
      p *= l2;
    }
  }
  return mu;
}

Real OrbitSample::at(int n) const {
  if (n == 0) return Real(0);
  if (n < 0 || n > nmax()) throw ShortfallError("orbit index " + std::to_string(n) + " outside sample");
  return x[static_cast<std::size_t>(n - 1)];
}

OrbitSample hankel_x(int nu, const Real& N, const Real& r, int nmax, const PrecisionConfig& cfg) {
  if (nmax < 1) throw std::invalid_argument("nmax must be positive");
  const auto mu = moments(nu, N, r, nmax, cfg);
  // LDL^T of the (nmax+1)-square Hankel matrix H_ij = mu_{i+j}; D_n = d_0 ... d_n.
  const int n1 = nmax + 1;
  std::vector<std::vector<Real>> L(static_cast<std::size_t>(n1), std::vector<Real>(static_cast<std::size_t>(n1), Real(0)));
  std::vector<Real> d(static_cast<std::size_t>(n1));
  const Real floor = boost::multiprecision::ldexp(Real(1), -static_cast<int>(cfg.bits) + 32);
  for (int j = 0; j < n1; ++j) {
    Real dj = mu[static_cast<std::size_t>(2 * j)];
    for (int k = 0; k < j; ++k) dj -= L[j][k] * L[j][k] * d[k];
    if (dj <= floor * mu[static_cast<std::size_t>(2 * j)])
      throw ShortfallError("Hankel determinant lost all precision at n = " + std::to_string(j) +
                           "; increase the precision");
    d[j] = dj;
    L[j][j] = 1;
    for (int i = j + 1; i < n1; ++i) {
      Real s = mu[static_cast<std::size_t>(i + j)];
      for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k] * d[k];
      L[i][j] = s / dj;
    }
  }
  OrbitSample out;
  out.nu = nu;
  out.N = N;
  out.r = r;
  out.method = "hankel";
  for (int n = 1; n <= nmax; ++n) out.x.push_back(d[n] / d[n - 1]);
  return out;
}

OrbitSample stieltjes_x(int nu, const Real& N, const Real& r, int nmax, const PrecisionConfig& cfg) {
  if (nmax < 1) throw std::invalid_argument("nmax must be positive");
  if (N <= 0 || r <= 0) throw std::invalid_argument("orbit needs N, r > 0");
  const Grid g = make_grid(nu, N, r, nmax, cfg);
  const std::size_t K = g.nodes.size();
  // monic p_{k+1} = l p_k - x_k p_{k-1}; the measure is even so a_k = 0
  std::vector<Real> prev(K, Real(0)), cur(K, Real(1)), next(K);
  Real h_prev = 0;
  for (std::size_t i = 0; i < K; ++i) h_prev += g.weights[i];
  OrbitSample out;
  out.nu = nu;
  out.N = N;
  out.r = r;
  out.method = "stieltjes";
  Real xk = 0;
  for (int k = 0; k < nmax; ++k) {
    Real hk = 0;
    for (std::size_t i = 0; i < K; ++i) {
      next[i] = g.nodes[i] * cur[i] - xk * prev[i];
      hk += g.weights[i] * next[i] * next[i];
    }
    xk = hk / h_prev;
    out.x.push_back(xk);
    h_prev = hk;
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return out;
}

Real freud_residual(const OrbitSample& s, const FreudPolynomial& m, int n) {
  Real mv = 0;
  for (const auto& [offs, mult] : m.terms) {
    Real t = mult;
    for (int o : offs) t *= s.at(n + o);
    mv += t;
  }
  return Real(n) / s.N - s.at(n) - s.r * mv;
}

Real orbit_rescaling_error(int nu, const Real& N, const Real& r, const Real& sigma, int nlo, int nhi,
                           const PrecisionConfig& cfg) {
  const auto a = stieltjes_x(nu, N, r, nhi, cfg);
  const auto b = stieltjes_x(nu, sigma * N, boost::multiprecision::pow(sigma, nu - 1) * r, nhi, cfg);
  Real worst = 0;
  for (int n = nlo; n <= nhi; ++n) worst = std::max<Real>(worst, boost::multiprecision::abs(sigma * b.at(n) - a.at(n)));
  return worst;
}

Real moment_rescaling_error(int nu, const Real& N, const Real& r, const Real& sigma, int count,
                            const PrecisionConfig& cfg) {
  const auto a = moments(nu, N, r, count, cfg);
  const auto b = moments(nu, sigma * N, boost::multiprecision::pow(sigma, nu - 1) * r, count, cfg);
  Real worst = 0;
  for (int k = 0; k <= 2 * count; k += 2) {
    const Real scaled = boost::multiprecision::pow(sigma, Real(k + 1) / 2) * b[static_cast<std::size_t>(k)];
    worst = std::max<Real>(worst, boost::multiprecision::abs(scaled / a[static_cast<std::size_t>(k)] - 1));
  }
  return worst;
}

Real cm_value(const CmExpansion& e, int m, const Real& N, const Real& r, int n) {
  if (m > e.kmax) throw ShortfallError("expansion has order " + std::to_string(e.kmax) + " < " + std::to_string(m));
  const Real A = boost::multiprecision::pow(N, Real(1) / e.nu);
  const Real B = boost::multiprecision::pow(r, Real(1) / e.nu);
  const Real u = boost::multiprecision::pow(Real(n), Real(-1) / e.nu);
  Real acc = 0;
  for (int k = -1; k <= m; ++k) {
    Real ck = 0;
    for (const auto& [key, c] : e.coeff(k).terms())
      ck += to_real(c) * boost::multiprecision::pow(A, key.first) * boost::multiprecision::pow(B, key.second);
    acc += ck * boost::multiprecision::pow(u, k);
  }
  return acc;
}

Real u_three_term(const Real& N, const Real& r, int n) {
  const Real gn = r / N * n;
  const Real s3 = boost::multiprecision::sqrt(Real(3));
  return -boost::multiprecision::sqrt(3 / gn) - 1 / (2 * gn) - 1 / (8 * s3 * gn * boost::multiprecision::sqrt(gn));
}

bool SlopeReport::within(double tol) const { return std::abs(slope - expected) <= tol; }

nlohmann::json SlopeReport::to_json() const {
  nlohmann::json rows_j = nlohmann::json::array();
  for (const auto& r : rows)
    rows_j.push_back({{"n", r.n}, {"x_n", to_string(r.x)}, {"cm_value", to_string(r.approx)}, {"abs_err", to_string(r.abs_err, 6)}});
  return {{"label", label}, {"m", m}, {"slope", slope}, {"expected", expected}, {"saturated", saturated}, {"rows", rows_j}};
}

double loglog_slope(const std::vector<int>& ns, const std::vector<Real>& errs) {
  if (ns.size() != errs.size() || ns.size() < 2) throw std::invalid_argument("slope fit needs two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(static_cast<double>(ns[i]));
    const double y = boost::multiprecision::log(errs[i]).convert_to<double>();
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

namespace {

SlopeReport fit(std::string label, int m, double expected, std::vector<SlopeRow> rows, const PrecisionConfig& cfg) {
  SlopeReport rep;
  rep.label = std::move(label);
  rep.m = m;
  rep.expected = expected;
  std::vector<int> ns;
  std::vector<Real> errs;
  const Real floor = cfg.tolerance();
  for (const auto& r : rows) {
    if (r.abs_err <= floor) {
      rep.saturated = true;
      continue;
    }
    ns.push_back(r.n);
    errs.push_back(r.abs_err);
  }
  rep.rows = std::move(rows);
  rep.slope = ns.size() >= 2 ? loglog_slope(ns, errs) : 0.0;
  return rep;
}

}  // namespace

SlopeReport cm_compare(const OrbitSample& s, const CmExpansion& e, int m, const std::vector<int>& ns,
                       const PrecisionConfig& cfg) {
  std::vector<SlopeRow> rows;
  for (int n : ns) {
    const Real x = s.at(n);
    const Real v = cm_value(e, m, s.N, s.r, n);
    rows.push_back({n, x, v, boost::multiprecision::abs(x - v)});
  }
  return fit("x_n, m = " + std::to_string(m), m, -static_cast<double>(m + 1) / e.nu, std::move(rows), cfg);
}

SlopeReport un_compare(const OrbitSample& s, const std::vector<int>& ns, const PrecisionConfig& cfg) {
  if (s.nu != 2) throw std::invalid_argument("the three-term u_n formula is for nu = 2");
  std::vector<SlopeRow> rows;
  for (int n : ns) {
    const Real u = -1 / (s.r * s.at(n));
    const Real v = u_three_term(s.N, s.r, n);
    rows.push_back({n, u, v, boost::multiprecision::abs(u - v)});
  }
  return fit("u_n three-term", 3, -2.5, std::move(rows), cfg);
}

std::string to_string(const Real& v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

}  // namespace mapenum
