#include "mapenum/matching/matching.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "mapenum/error.hpp"
#include "mapenum/exact/json_io.hpp"
#include "mapenum/stringeq/stringeq.hpp"

namespace mapenum {

int k_nu(int nu, int g) { return 5 * g * nu - 2 * nu - 3 * g + 1; }
int k_reduced(int g) { return 5 * g - 2; }

namespace {

int slot_order(int nu, int g, int m) { return 2 * g * nu + (nu - 1) * m - nu; }

using PS = PowerSeries<RadicalElem>;

PS denominator_power_inverse(int nu, int g, const PS& z) {
  PS D = PS::constant(z.order(), RadicalElem(nu)) - z * RadicalElem(nu - 1);
  return D.reciprocal().pow(static_cast<unsigned>(5 * g - 1));
}

RadMatrix columns_to_rows(const std::vector<PS>& cols, int rows) {
  RadMatrix M(static_cast<std::size_t>(rows), std::vector<RadicalElem>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int m = 1; m <= rows; ++m) M[static_cast<std::size_t>(m - 1)][c] = cols[c][m];
  return M;
}

}  // namespace

std::map<std::pair<int, int>, RadicalElem> extract_slots(const CmExpansion& e) {
  const int nu = e.nu;
  std::map<std::pair<int, int>, RadicalElem> out;
  for (int k = -1; k <= e.kmax; ++k) {
    for (const auto& [eB, c] : e.coeff(k).at_unit_A()) {
      const int m = -eB;
      const int num = k + nu - (nu - 1) * m;
      if (m < 1 || num < 0 || num % (2 * nu) != 0) {
        throw ConsistencyError("monomial B^" + std::to_string(eB) + " of c_" + std::to_string(k) +
                               " fits no genus-expansion slot");
      }
      const int g = num / (2 * nu);
      if (!out.emplace(std::pair{m, g}, c).second) throw ConsistencyError("duplicate genus-expansion slot");
    }
  }
  return out;
}

namespace {

std::vector<RadicalElem> extract_count(const CmExpansion& e, int g, int count) {
  const int need = slot_order(e.nu, g, count);
  if (e.kmax < need) {
    throw ShortfallError("expansion order " + std::to_string(e.kmax) + " too small for genus " +
                         std::to_string(g) + " (needs " + std::to_string(need) + ")");
  }
  const auto slots = extract_slots(e);
  std::vector<RadicalElem> a;
  for (int m = 1; m <= count; ++m) {
    auto it = slots.find({m, g});
    a.push_back(it == slots.end() ? RadicalElem() : it->second);
  }
  return a;
}

}  // namespace

std::vector<RadicalElem> extract_a(const CmExpansion& e, int g) {
  if (g < 1) throw std::invalid_argument("extract_a requires g >= 1");
  return extract_count(e, g, 3 * g - 1);
}

RadMatrix ansatz_rows(int nu, int g, int rows) {
  const PS z = z0_puiseux_v(nu, rows);
  PS base = z * (z - PS::constant(rows, RadicalElem(1))) * denominator_power_inverse(nu, g, z);
  std::vector<PS> cols;
  for (int c = 0; c <= 3 * g - 2; ++c) {
    cols.push_back(base);
    base *= z;
  }
  return columns_to_rows(cols, rows);
}

RadMatrix reduced_rows(int g, int rows) {
  const PS z = z0_puiseux_v(2, rows);
  PS base = z * (z - PS::constant(rows, RadicalElem(1))).pow(static_cast<unsigned>(2 * g)) *
            denominator_power_inverse(2, g, z);
  std::vector<PS> cols;
  for (int c = 0; c <= g - 1; ++c) {
    cols.push_back(base);
    base *= z;
  }
  return columns_to_rows(cols, rows);
}

std::vector<RadicalElem> bareiss_solve(RadMatrix M, std::vector<RadicalElem> b) {
  const std::size_t n = M.size();
  if (b.size() != n) throw std::invalid_argument("right-hand side size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (M[i].size() != n) throw std::invalid_argument("system matrix must be square");
    M[i].push_back(b[i]);
  }
  RadicalElem prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && M[p][k].is_zero()) ++p;
      if (p == n) throw ConsistencyError("singular matching system");
      std::swap(M[k], M[p]);
    }
    const RadicalElem prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) * prev_inv;
      }
      M[i][k] = RadicalElem();
    }
    prev = M[k][k];
  }
  std::vector<RadicalElem> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    RadicalElem acc = M[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= M[ii][j] * x[j];
    x[ii] = acc / M[ii][ii];
  }
  return x;
}

UPoly GenusSolution::numerator() const {
  UPoly z = UPoly::linear(0, 1);
  return z * (z - UPoly(1)) * P();
}

UPoly GenusSolution::denominator() const {
  return UPoly::linear(Rational(nu), Rational(1 - nu)).pow(static_cast<unsigned>(denominator_exponent));
}

nlohmann::json GenusSolution::to_json() const {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& c : beta) b.push_back(c.str());
  return {{"nu", nu}, {"g", g}, {"beta", b}, {"denominator_exponent", denominator_exponent},
          {"reduced", reduced}};
}

std::string check_triangular(const RadMatrix& M, int nu, int g, bool reduced) {
  const auto f = theta_field(nu);
  const Rational scale = Rational(nu).pow(-(5 * g - 1)) * Rational(reduced ? 1 : -1);
  std::ostringstream os;
  for (std::size_t r = 0; r < M.size(); ++r) {
    const int m = static_cast<int>(r) + 1;
    for (std::size_t c = 0; c < M[r].size(); ++c) {
      if (static_cast<int>(c) > m - 1 && !M[r][c].is_zero()) {
        os << "entry (" << m << "," << c << ") above the diagonal is " << M[r][c].str() << "; ";
      }
      if (static_cast<int>(c) == m - 1) {
        const RadicalElem expected = RadicalElem::theta(f, -m) * scale;
        if (!(M[r][c] == expected)) {
          os << "diagonal (" << m << "," << c << ") is " << M[r][c].str() << ", expected " << expected.str()
             << "; ";
        }
      }
    }
  }
  return os.str();
}

namespace {

std::vector<Rational> rational_solution(const std::vector<RadicalElem>& x) {
  std::vector<Rational> out;
  for (const auto& v : x) {
    if (!v.is_rational()) throw ConsistencyError("non-rational beta coefficient " + v.str());
    out.push_back(v.to_rational());
  }
  return out;
}

}  // namespace

GenusSolution solve_beta(int nu, int g, const std::vector<RadicalElem>& a, const RadMatrix& rows) {
  const std::size_t n = static_cast<std::size_t>(3 * g - 1);
  if (a.size() < n || rows.size() < n) throw ShortfallError("not enough slots for the matching system");
  RadMatrix M(rows.begin(), rows.begin() + static_cast<long>(n));
  const std::string tri = check_triangular(M, nu, g, false);
  if (!tri.empty()) throw ConsistencyError("matching system not triangular: " + tri);
  GenusSolution sol;
  sol.nu = nu;
  sol.g = g;
  sol.denominator_exponent = 5 * g - 1;
  sol.beta = rational_solution(bareiss_solve(M, std::vector<RadicalElem>(a.begin(), a.begin() + static_cast<long>(n))));
  return sol;
}

GenusSolution solve_reduced(int g, const std::vector<RadicalElem>& a, const RadMatrix& rows) {
  const std::size_t n = static_cast<std::size_t>(g);
  if (a.size() < n || rows.size() < n) throw ShortfallError("not enough slots for the reduced system");
  RadMatrix M(rows.begin(), rows.begin() + static_cast<long>(n));
  const std::string tri = check_triangular(M, 2, g, true);
  if (!tri.empty()) throw ConsistencyError("reduced system not triangular: " + tri);
  const auto q = rational_solution(bareiss_solve(M, std::vector<RadicalElem>(a.begin(), a.begin() + static_cast<long>(n))));
  const UPoly P = (UPoly::linear(-1, 1)).pow(static_cast<unsigned>(2 * g - 1)) * UPoly(q);
  GenusSolution sol;
  sol.nu = 2;
  sol.g = g;
  sol.denominator_exponent = 5 * g - 1;
  sol.reduced = true;
  sol.beta = P.coeffs();
  sol.beta.resize(static_cast<std::size_t>(3 * g - 1));
  return sol;
}

PowerSeries<RadicalElem> zg_puiseux(const GenusSolution& sol, int mmax) {
  const PS z = z0_puiseux_v(sol.nu, mmax);
  std::vector<RadicalElem> num;
  const UPoly numerator = sol.numerator();
  for (const auto& c : numerator.coeffs()) num.emplace_back(c);
  const PS D = PS::constant(mmax, RadicalElem(sol.nu)) - z * RadicalElem(sol.nu - 1);
  return z.eval_poly(num) * D.reciprocal().pow(static_cast<unsigned>(sol.denominator_exponent));
}

UPoly q_factor(const GenusSolution& sol) {
  if (sol.nu != 2) throw std::invalid_argument("q_factor applies to nu = 2");
  const UPoly d = UPoly::linear(-1, 1).pow(static_cast<unsigned>(2 * sol.g - 1));
  auto [q, r] = sol.P().divmod(d);
  if (!r.is_zero()) {
    throw ConsistencyError("P_" + std::to_string(3 * sol.g - 2) + " is not divisible by (z-1)^" +
                           std::to_string(2 * sol.g - 1));
  }
  return q;
}

int z_minus_one_multiplicity(const UPoly& p) {
  if (p.is_zero()) return 0;
  UPoly cur = p;
  int e = 0;
  const UPoly d = UPoly::linear(-1, 1);
  while (cur.degree() >= 1) {
    auto [q, r] = cur.divmod(d);
    if (!r.is_zero()) break;
    cur = q;
    ++e;
  }
  return e;
}

int required_z_multiplicity(int nu, int g) { return (2 * g + nu - 2) / (nu - 1); }

PartialFraction partial_fraction(const GenusSolution& sol) {
  const int nu = sol.nu;
  const UPoly z_of_w = UPoly::linear(Rational(nu, nu - 1), Rational(-1, nu - 1));
  const UPoly N = (UPoly::linear(-1, 1) * sol.P()).compose(z_of_w);
  PartialFraction pf;
  pf.nu = nu;
  pf.g = sol.g;
  const int top = 3 * sol.g - 1;
  if (N.degree() > top) throw ConsistencyError("partial-fraction numerator degree too high");
  for (int k = 0; k <= top; ++k) pf.a.push_back(N.coeff(top - k));
  return pf;
}

std::vector<RecursionRow> recursion_check(int nu, const std::map<int, Rational>& tops) {
  std::vector<RecursionRow> rows;
  const Rational n(nu);
  if (tops.count(1)) {
    const Rational seed = n * n / Rational(6);
    rows.push_back({1, seed, tops.at(1), seed == tops.at(1)});
  }
  for (int g = 1; tops.count(g + 1); ++g) {
    bool have_all = true;
    for (int m = 1; m <= g; ++m) have_all = have_all && tops.count(m);
    if (!have_all) break;
    Rational sum;
    for (int m = 1; m <= g; ++m) sum += tops.at(m) * tops.at(g - m + 1);
    const Rational pred = n * n * n * Rational(25L * g * g - 1) / Rational(6) * tops.at(g) + n / Rational(2) * sum;
    rows.push_back({g + 1, pred, tops.at(g + 1), pred == tops.at(g + 1)});
  }
  return rows;
}

Derivation derive_zg(const CmExpansion& e, int g, const DeriveOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const int nu = e.nu;
  if (g < 1) throw std::invalid_argument("derive_zg requires g >= 1");
  if (opts.reduced && nu != 2) throw std::invalid_argument("reduced mode is available for nu = 2 only");
  const int square = opts.reduced ? g : 3 * g - 1;
  if (e.kmax < slot_order(nu, g, square)) {
    throw ShortfallError("expansion order " + std::to_string(e.kmax) + " too small for genus " + std::to_string(g));
  }
  const int available = (e.kmax - 2 * g * nu + nu) / (nu - 1);
  Derivation d;
  d.kmax = e.kmax;
  const auto a = extract_count(e, g, available);
  if (opts.reduced) {
    const auto rows = reduced_rows(g, square);
    d.triangular_report = check_triangular(rows, nu, g, true);
    d.solution = solve_reduced(g, a, rows);
  } else {
    const auto rows = ansatz_rows(nu, g, square);
    d.triangular_report = check_triangular(rows, nu, g, false);
    d.solution = solve_beta(nu, g, a, rows);
  }
  // Over-determination: the reconstructed z_g must reproduce every slot present.
  const auto re = zg_puiseux(d.solution, available);
  for (int m = 1; m <= available; ++m) {
    if (!(re[m] == a[static_cast<std::size_t>(m - 1)])) {
      throw ConsistencyError("reconstructed z_" + std::to_string(g) + " misses slot m=" + std::to_string(m) +
                             ": " + re[m].str() + " vs " + a[static_cast<std::size_t>(m - 1)].str());
    }
  }
  d.slots_checked = available;
  const int need = required_z_multiplicity(nu, g);
  if (z_minus_one_multiplicity(d.solution.numerator()) < need) {
    throw ConsistencyError("z_" + std::to_string(g) + " lacks the (z-1)^" + std::to_string(need) + " factor");
  }
  d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return d;
}

Derivation derive_zg(int nu, int g, const DeriveOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const int base = opts.reduced ? k_reduced(g) : k_nu(nu, g);
  CmOptions co;
  co.self_check = opts.self_check;
  const CmExpansion e = cm_expand(nu, base + (nu - 1) * opts.extra_slots, co);
  Derivation d = derive_zg(e, g, opts);
  d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return d;
}

}  // namespace mapenum
