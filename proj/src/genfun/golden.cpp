#include "mapenum/genfun/golden.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mapenum/golden_data.hpp"

namespace mapenum {

using nlohmann::json;

namespace {

std::map<int, GenFunExpr> expr_map(const json& j) {
  std::map<int, GenFunExpr> out;
  for (const auto& [k, v] : j.items()) out[std::stoi(k)] = GenFunExpr::from_json(v);
  return out;
}

}  // namespace

GoldenCatalog GoldenCatalog::from_json(const json& j) {
  GoldenCatalog c;
  for (const auto& [name, t] : j.at("tables").items()) c.tables[name] = CountTable::from_json(t);
  const auto& cf = j.at("closed_forms");
  c.z_nu2 = expr_map(cf.at("z_nu2"));
  c.e_nu2 = expr_map(cf.at("e_nu2"));
  c.e_3v = expr_map(cf.at("e_3v"));
  c.z_nu3_expanded = GenFunExpr::from_json(cf.at("z_nu3").at("2").at("expanded"));
  c.z_nu3_factored = GenFunExpr::from_json(cf.at("z_nu3").at("2").at("factored"));
  c.z_nu3half_expanded = GenFunExpr::from_json(cf.at("z_nu3half").at("2").at("expanded"));
  c.z_nu3half_factored = GenFunExpr::from_json(cf.at("z_nu3half").at("2").at("factored"));
  const auto& fp = j.at("freud_nu3_printed");
  if (fp.value("prefactor_offset", 0) != 0) throw std::invalid_argument("unsupported prefactor offset");
  for (const auto& q : fp.at("quadratic_terms")) c.freud_nu3_printed.emplace_back(q.at(0).get<int>(), q.at(1).get<int>());
  return c;
}

GoldenCatalog GoldenCatalog::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  return from_json(json::parse(in));
}

const std::string& GoldenCatalog::embedded_text() {
  static const std::string text(detail::kGoldenJson);
  return text;
}

const GoldenCatalog& GoldenCatalog::embedded() {
  static const GoldenCatalog c = from_json(json::parse(embedded_text()));
  return c;
}

FreudPolynomial GoldenCatalog::printed_freud_nu3() const {
  FreudPolynomial p;
  p.nu = 3;
  for (auto [a, b] : freud_nu3_printed) {
    std::vector<int> key = {0, a, b};
    std::sort(key.begin(), key.end());
    ++p.terms[key];
  }
  return p;
}

CountTable build_table(Family family, int nu, const std::map<int, GenFunExpr>& exprs,
                       const std::vector<int>& vertices) {
  CountTable t;
  t.family = family;
  t.nu = family == Family::E3 ? 0 : nu;
  t.vertices = vertices;
  const int jmax = vertices.empty() ? 0 : *std::max_element(vertices.begin(), vertices.end());
  std::vector<std::vector<Rational>> columns;
  for (const auto& [g, f] : exprs) {
    t.genera.push_back(g);
    switch (family) {
      case Family::Z: columns.push_back(z_counts(nu, f, jmax)); break;
      case Family::E:
        if (nu != 2) throw std::invalid_argument("e-family tables are available for nu = 2 only");
        columns.push_back(e_counts(f, jmax));
        break;
      case Family::E3: columns.push_back(e3_counts(f, jmax)); break;
    }
  }
  for (int v : vertices) {
    if (v < 1) throw std::invalid_argument("vertex counts start at 1");
    std::vector<Rational> row;
    for (const auto& col : columns) row.push_back(col[static_cast<std::size_t>(v - 1)]);
    t.cells.push_back(std::move(row));
  }
  return t;
}

std::vector<std::string> table_diff(const CountTable& got, const CountTable& want) {
  std::vector<std::string> out;
  if (got.genera != want.genera || got.vertices != want.vertices) {
    out.push_back("table shape differs");
    return out;
  }
  for (std::size_t r = 0; r < want.vertices.size(); ++r) {
    for (std::size_t c = 0; c < want.genera.size(); ++c) {
      if (got.cells[r][c] == want.cells[r][c]) continue;
      std::ostringstream os;
      os << "(j=" << want.vertices[r] << ", g=" << want.genera[c] << "): " << got.cells[r][c] << " vs "
         << want.cells[r][c];
      out.push_back(os.str());
    }
  }
  return out;
}

}  // namespace mapenum
