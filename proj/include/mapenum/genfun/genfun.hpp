#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mapenum/exact/upoly.hpp"
#include "mapenum/matching/matching.hpp"
#include "mapenum/series/power_series.hpp"

namespace mapenum {

struct PolyPower {
  UPoly poly;
  int pow = 1;
};

struct RationalTerm {
  Rational coef;
  std::vector<PolyPower> num, den;
};

struct LogTerm {
  Rational coef;
  UPoly arg_num, arg_den;  // ln(arg_num / arg_den)
};

/// Rational function of z = z_0 plus logarithms of rational functions of z.
class GenFunExpr {
 public:
  std::vector<RationalTerm> terms;
  std::vector<LogTerm> logs;

  static GenFunExpr from_json(const nlohmann::json& j);
  static GenFunExpr rational(const UPoly& num, const UPoly& den);
  /// The identity z (genus-zero z-family entry).
  static GenFunExpr identity();
  static GenFunExpr from_solution(const GenusSolution& sol);

  nlohmann::json to_json() const;
  std::string str() const;

  /// Rational part collected over one denominator.
  std::pair<UPoly, UPoly> rational_part() const;
  /// d/dz of the whole expression as a single fraction.
  std::pair<UPoly, UPoly> derivative() const;

  /// Substitutes a coupling series for z; log arguments must equal 1 there.
  CouplingSeries compose(const CouplingSeries& z) const;

  /// Laurent coefficients of the rational part in w = nu - (nu-1) z, for
  /// exponents from the pole order down to w^max_exp; logs are ignored.
  std::map<int, Rational> laurent_in_w(int nu, int max_exp) const;

  /// Identity test: equal derivatives and equal values at z = 1.
  bool same_function(const GenFunExpr& o) const;
  /// Rational-part identity (no logs allowed on either side).
  bool same_rational(const GenFunExpr& o) const;
};

enum class Family { Z, E, E3 };

std::string family_name(Family f);

/// Exact count table: rows are vertex counts, columns genera.
struct CountTable {
  Family family = Family::Z;
  int nu = 2;  // 0 marks 3-valent
  std::vector<int> genera;
  std::vector<int> vertices;
  std::vector<std::vector<Rational>> cells;  // cells[row][genus index]

  const Rational& at(int vertex, int genus) const;
  std::string to_csv() const;
  nlohmann::json to_json() const;
  static CountTable from_csv(const std::string& text, Family family, int nu);
  static CountTable from_json(const nlohmann::json& j);
  friend bool operator==(const CountTable& a, const CountTable& b);
};

/// count_j = (-1)^j [r^j] z_g(z_0(r)), j = 1..jmax.
std::vector<Rational> z_counts(int nu, const GenFunExpr& zg, int jmax);
/// nu = 2: count_j = [s^j] e_g(z_0(s)) / 4^j with 1 = z - 12 s z^2.
std::vector<Rational> e_counts(const GenFunExpr& eg, int jmax);
/// 3-valent: count_j = [t^j] e_g(z_0(t)) / 3^j with 1 = z^2 - 72 t^2 z^3.
std::vector<Rational> e3_counts(const GenFunExpr& eg, int jmax);

/// (2 nu C(2nu-1, nu-1))^j (nu j - 1)! / ((nu-1) j + 2)!; divided by
/// (2 nu)^j j! when unlabeled.
Rational genus0_closed(int nu, int j, bool labeled = false);

/// Constant terms of e_g in w = 2 - z satisfy the genus recurrence.
struct A0Row {
  int g;
  Rational predicted, actual;
  bool ok;
};
Rational a0_recurrence_value(int g, const std::map<int, Rational>& lower);
std::vector<A0Row> a0_recurrence_check(const std::map<int, GenFunExpr>& eg);

/// Top Laurent coefficient (most negative power of w = 2 - z).
Rational top_laurent(const GenFunExpr& f, int nu = 2);

/// top(z_g / z_0) = 4 (5g - 5)(5g - 3) top(e_g), nu = 2.
struct TopRelationRow {
  int g;
  Rational z_top, e_top, ratio;
  bool ok;
};
std::vector<TopRelationRow> top_relation_check(const std::map<int, Rational>& z_tops,
                                               const std::map<int, GenFunExpr>& eg);

}  // namespace mapenum
