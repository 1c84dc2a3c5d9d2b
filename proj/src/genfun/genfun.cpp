#include "mapenum/genfun/genfun.hpp"

#include <sstream>
#include <stdexcept>

#include "mapenum/error.hpp"
#include "mapenum/exact/json_io.hpp"
#include "mapenum/stringeq/stringeq.hpp"

namespace mapenum {

using nlohmann::json;

namespace {

std::vector<PolyPower> factors_from_json(const json& j) {
  std::vector<PolyPower> out;
  for (const auto& f : j) out.push_back({upoly_from_json(f.at("poly")), f.at("pow").get<int>()});
  return out;
}

json factors_to_json(const std::vector<PolyPower>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back({{"poly", to_json(f.poly)}, {"pow", f.pow}});
  return out;
}

UPoly product(const std::vector<PolyPower>& fs) {
  UPoly p(1);
  for (const auto& f : fs) p *= f.poly.pow(static_cast<unsigned>(f.pow));
  return p;
}

std::string factor_str(const PolyPower& f) {
  std::string s = "(" + f.poly.str() + ")";
  if (f.pow != 1) s += "^" + std::to_string(f.pow);
  return s;
}

CouplingSeries eval_factors(const std::vector<PolyPower>& fs, const CouplingSeries& z) {
  CouplingSeries acc = CouplingSeries::constant(z.order(), Rational(1));
  for (const auto& f : fs) acc *= z.eval_poly(f.poly.coeffs()).pow(static_cast<unsigned>(f.pow));
  return acc;
}

}  // namespace

GenFunExpr GenFunExpr::from_json(const json& j) {
  GenFunExpr e;
  for (const auto& t : j.at("terms")) {
    e.terms.push_back({rational_from_json(t.at("coef")), factors_from_json(t.at("num")), factors_from_json(t.at("den"))});
  }
  for (const auto& l : j.at("logs")) {
    e.logs.push_back({rational_from_json(l.at("coef")), upoly_from_json(l.at("arg_num")), upoly_from_json(l.at("arg_den"))});
  }
  return e;
}

GenFunExpr GenFunExpr::rational(const UPoly& num, const UPoly& den) {
  GenFunExpr e;
  e.terms.push_back({Rational(1), {{num, 1}}, {{den, 1}}});
  return e;
}

GenFunExpr GenFunExpr::identity() { return rational(UPoly::linear(0, 1), UPoly(1)); }

GenFunExpr GenFunExpr::from_solution(const GenusSolution& sol) {
  GenFunExpr e;
  const UPoly z = UPoly::linear(0, 1);
  e.terms.push_back({Rational(1),
                     {{z, 1}, {z - UPoly(1), 1}, {sol.P(), 1}},
                     {{UPoly::linear(Rational(sol.nu), Rational(1 - sol.nu)), sol.denominator_exponent}}});
  return e;
}

json GenFunExpr::to_json() const {
  json t = json::array(), l = json::array();
  for (const auto& term : terms) {
    t.push_back({{"coef", term.coef.str()}, {"num", factors_to_json(term.num)}, {"den", factors_to_json(term.den)}});
  }
  for (const auto& lg : logs) {
    l.push_back({{"coef", lg.coef.str()}, {"arg_num", mapenum::to_json(lg.arg_num)}, {"arg_den", mapenum::to_json(lg.arg_den)}});
  }
  return {{"terms", t}, {"logs", l}};
}

std::string GenFunExpr::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << " + ";
    first = false;
    std::string body;
    for (const auto& f : t.num) body += (body.empty() ? "" : "*") + factor_str(f);
    if (body.empty() || !t.coef.is_one()) body = t.coef.str() + (body.empty() ? "" : "*" + body);
    os << body;
    for (const auto& f : t.den) os << "/" << factor_str(f);
  }
  for (const auto& l : logs) {
    if (!first) os << " + ";
    first = false;
    os << l.coef << "*ln((" << l.arg_num.str() << ")/(" << l.arg_den.str() << "))";
  }
  return first ? "0" : os.str();
}

std::pair<UPoly, UPoly> GenFunExpr::rational_part() const {
  UPoly num, den(1);
  for (const auto& t : terms) {
    const UPoly tn = product(t.num) * t.coef;
    const UPoly td = product(t.den);
    if (td == den) {
      num += tn;
    } else {
      num = num * td + tn * den;
      den *= td;
    }
  }
  return {num, den};
}

std::pair<UPoly, UPoly> GenFunExpr::derivative() const {
  auto [n, d] = rational_part();
  UPoly num = n.derivative() * d - n * d.derivative();
  UPoly den = d * d;
  for (const auto& l : logs) {
    // coef * (p'/p - q'/q) = coef (p' q - p q') / (p q)
    const UPoly ln = (l.arg_num.derivative() * l.arg_den - l.arg_num * l.arg_den.derivative()) * l.coef;
    const UPoly ld = l.arg_num * l.arg_den;
    num = num * ld + ln * den;
    den *= ld;
  }
  return {num, den};
}

CouplingSeries GenFunExpr::compose(const CouplingSeries& z) const {
  const int J = z.order();
  CouplingSeries acc(J);
  for (const auto& t : terms) {
    const CouplingSeries den = eval_factors(t.den, z);
    if (den[0].is_zero()) throw DivisionByZero("generating function has a pole at the expansion point");
    acc += eval_factors(t.num, z) * den.reciprocal() * t.coef;
  }
  for (const auto& l : logs) {
    const CouplingSeries d = z.eval_poly(l.arg_den.coeffs());
    if (d[0].is_zero()) throw DivisionByZero("log argument has a pole at the expansion point");
    const CouplingSeries arg = z.eval_poly(l.arg_num.coeffs()) * d.reciprocal();
    acc += arg.log() * l.coef;
  }
  return acc;
}

std::map<int, Rational> GenFunExpr::laurent_in_w(int nu, int max_exp) const {
  auto [n, d] = rational_part();
  const UPoly z_of_w = UPoly::linear(Rational(nu, nu - 1), Rational(-1, nu - 1));
  const UPoly nw = n.compose(z_of_w), dw = d.compose(z_of_w);
  int pole = 0;
  while (dw.coeff(pole).is_zero()) ++pole;
  const int J = pole + max_exp;
  if (J < 0) return {};
  auto series_of = [J](const UPoly& p, int shift) {
    CouplingSeries s(J);
    for (int i = shift; i <= p.degree() && i - shift <= J; ++i) s[i - shift] = p.coeff(i);
    return s;
  };
  const CouplingSeries q = series_of(nw, 0) * series_of(dw, pole).reciprocal();
  std::map<int, Rational> out;
  for (int i = 0; i <= J; ++i)
    if (!q[i].is_zero()) out[i - pole] = q[i];
  return out;
}

bool GenFunExpr::same_function(const GenFunExpr& o) const {
  auto [n1, d1] = derivative();
  auto [n2, d2] = o.derivative();
  if (!(n1 * d2 == n2 * d1)) return false;
  auto [r1, s1] = rational_part();
  auto [r2, s2] = o.rational_part();
  const Rational one(1);
  return r1(one) * s2(one) == r2(one) * s1(one);
}

bool GenFunExpr::same_rational(const GenFunExpr& o) const {
  if (!logs.empty() || !o.logs.empty()) return false;
  auto [n1, d1] = rational_part();
  auto [n2, d2] = o.rational_part();
  return n1 * d2 == n2 * d1;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Z: return "z";
    case Family::E: return "e";
    case Family::E3: return "e";
  }
  return "?";
}

const Rational& CountTable::at(int vertex, int genus) const {
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    if (vertices[r] != vertex) continue;
    for (std::size_t c = 0; c < genera.size(); ++c)
      if (genera[c] == genus) return cells[r][c];
  }
  throw std::out_of_range("no cell for vertices=" + std::to_string(vertex) + ", genus=" + std::to_string(genus));
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "vertices";
  for (int g : genera) os << ",genus" << g;
  os << "\n";
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    os << vertices[r];
    for (const auto& c : cells[r]) os << "," << c.str();
    os << "\n";
  }
  return os.str();
}

json CountTable::to_json() const {
  json rows = json::array();
  for (const auto& r : cells) {
    json row = json::array();
    for (const auto& c : r) row.push_back(c.str());
    rows.push_back(row);
  }
  return {{"family", family_name(family)},
          {"nu", family == Family::E3 ? std::string("3v") : std::to_string(nu)},
          {"genera", genera},
          {"vertices", vertices},
          {"rows", rows}};
}

CountTable CountTable::from_csv(const std::string& text, Family family, int nu) {
  CountTable t;
  t.family = family;
  t.nu = nu;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  {
    std::istringstream hs(line);
    std::string cell;
    std::getline(hs, cell, ',');
    if (cell != "vertices") throw std::invalid_argument("CSV header must start with 'vertices'");
    while (std::getline(hs, cell, ',')) {
      if (cell.rfind("genus", 0) != 0) throw std::invalid_argument("bad CSV header cell '" + cell + "'");
      t.genera.push_back(std::stoi(cell.substr(5)));
    }
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    t.vertices.push_back(std::stoi(cell));
    std::vector<Rational> row;
    while (std::getline(ls, cell, ',')) row.push_back(Rational::parse(cell));
    if (row.size() != t.genera.size()) throw std::invalid_argument("CSV row width mismatch");
    t.cells.push_back(std::move(row));
  }
  return t;
}

CountTable CountTable::from_json(const json& j) {
  CountTable t;
  const auto fam = j.at("family").get<std::string>();
  const auto nu = j.at("nu").get<std::string>();
  if (fam != "z" && fam != "e") throw std::invalid_argument("unknown table family '" + fam + "'");
  if (nu == "3v") {
    t.family = Family::E3;
    t.nu = 0;
  } else {
    t.family = fam == "z" ? Family::Z : Family::E;
    t.nu = std::stoi(nu);
  }
  t.genera = j.at("genera").get<std::vector<int>>();
  t.vertices = j.at("vertices").get<std::vector<int>>();
  for (const auto& r : j.at("rows")) {
    std::vector<Rational> row;
    for (const auto& c : r) row.push_back(rational_from_json(c));
    if (row.size() != t.genera.size()) throw std::invalid_argument("table row width mismatch");
    t.cells.push_back(std::move(row));
  }
  if (t.cells.size() != t.vertices.size()) throw std::invalid_argument("table row count mismatch");
  return t;
}

bool operator==(const CountTable& a, const CountTable& b) {
  return a.family == b.family && a.nu == b.nu && a.genera == b.genera && a.vertices == b.vertices &&
         a.cells == b.cells;
}

std::vector<Rational> z_counts(int nu, const GenFunExpr& zg, int jmax) {
  const auto z0 = z0_coupling_series(StringEquationSpec::even(nu), jmax);
  const auto s = zg.compose(z0);
  std::vector<Rational> out;
  for (int j = 1; j <= jmax; ++j) out.push_back(j % 2 ? -s[j] : s[j]);
  return out;
}

std::vector<Rational> e_counts(const GenFunExpr& eg, int jmax) {
  const auto s = eg.compose(z0_s_series(jmax));
  std::vector<Rational> out;
  Rational scale(1);
  for (int j = 1; j <= jmax; ++j) {
    scale *= Rational(4);
    out.push_back(s[j] / scale);
  }
  return out;
}

std::vector<Rational> e3_counts(const GenFunExpr& eg, int jmax) {
  const auto s = eg.compose(z0_coupling_series(StringEquationSpec::trivalent(), jmax));
  std::vector<Rational> out;
  Rational scale(1);
  for (int j = 1; j <= jmax; ++j) {
    scale *= Rational(3);
    out.push_back(s[j] / scale);
  }
  return out;
}

Rational genus0_closed(int nu, int j, bool labeled) {
  if (j < 1) throw std::invalid_argument("genus0_closed requires j >= 1");
  const auto ul = [](long v) { return static_cast<unsigned long>(v); };
  const long C = binomial(ul(2 * nu - 1), ul(nu - 1)).get_si();
  Rational v = Rational(2L * nu * C).pow(j) * Rational(factorial(ul(static_cast<long>(nu) * j - 1))) /
               Rational(factorial(ul(static_cast<long>(nu - 1) * j + 2)));
  if (labeled) return v;
  return v / (Rational(2L * nu).pow(j) * Rational(factorial(ul(j))));
}

Rational a0_recurrence_value(int g, const std::map<int, Rational>& lower) {
  const auto f = [](long n) { return Rational(factorial(static_cast<unsigned long>(n))); };
  Rational sum;
  for (int k = 2; k <= g - 1; ++k) {
    Rational prod(1);
    for (int j = 0; j <= 2 * g - 2 * k + 1; ++j) prod *= Rational(2 - 2 * k - j);
    sum += prod * lower.at(k) / f(2 * g - 2 * k + 2);
  }
  const Rational bracket = f(2 * g + 2).inverse() - (Rational(12) * f(2 * g)).inverse() + sum / f(2 * g - 1);
  return Rational(-2) * f(2 * g - 3) * bracket;
}

std::vector<A0Row> a0_recurrence_check(const std::map<int, GenFunExpr>& eg) {
  std::map<int, Rational> actual;
  for (const auto& [g, e] : eg) {
    if (g < 2) continue;
    const auto lw = e.laurent_in_w(2, 0);
    auto it = lw.find(0);
    actual[g] = it == lw.end() ? Rational() : it->second;
  }
  std::vector<A0Row> rows;
  for (const auto& [g, a] : actual) {
    const Rational pred = a0_recurrence_value(g, actual);
    rows.push_back({g, pred, a, pred == a});
  }
  return rows;
}

Rational top_laurent(const GenFunExpr& f, int nu) {
  const auto lw = f.laurent_in_w(nu, 0);
  if (lw.empty()) return {};
  return lw.begin()->second;
}

std::vector<TopRelationRow> top_relation_check(const std::map<int, Rational>& z_tops,
                                               const std::map<int, GenFunExpr>& eg) {
  std::vector<TopRelationRow> rows;
  for (const auto& [g, zt] : z_tops) {
    if (g < 2 || !eg.count(g)) continue;
    const Rational et = top_laurent(eg.at(g));
    const Rational factor(4L * (5 * g - 5) * (5 * g - 3));
    rows.push_back({g, zt, et, et.is_zero() ? Rational() : zt / et, zt == factor * et});
  }
  return rows;
}

}  // namespace mapenum
