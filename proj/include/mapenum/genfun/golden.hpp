#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapenum/freud/freud.hpp"
#include "mapenum/genfun/genfun.hpp"

namespace mapenum {

/// Published closed forms and count tables, held as exact coefficient data.
struct GoldenCatalog {
  std::map<std::string, CountTable> tables;  // "z_nu2", "e_nu2", "e_3v"
  std::map<int, GenFunExpr> z_nu2, e_nu2, e_3v;
  GenFunExpr z_nu3_expanded, z_nu3_factored;
  GenFunExpr z_nu3half_expanded, z_nu3half_factored;
  // Each pair (a, b) stands for x_n x_{n+a} x_{n+b}, as printed for nu = 3.
  std::vector<std::pair<int, int>> freud_nu3_printed;

  static GoldenCatalog from_json(const nlohmann::json& j);
  static GoldenCatalog load(const std::filesystem::path& file);
  /// The copy compiled into the library.
  static const GoldenCatalog& embedded();
  static const std::string& embedded_text();

  /// The printed nu = 3 terms collected into a FreudPolynomial.
  FreudPolynomial printed_freud_nu3() const;
};

/// Builds an exact count table for the listed genera and vertex counts.
/// Z uses the supplied z_g (genus 0 is z itself); E and E3 use e_g.
CountTable build_table(Family family, int nu, const std::map<int, GenFunExpr>& exprs,
                       const std::vector<int>& vertices);

/// Cells of `got` that differ from `want`, as "(vertices, genus): got vs want".
std::vector<std::string> table_diff(const CountTable& got, const CountTable& want);

}  // namespace mapenum
