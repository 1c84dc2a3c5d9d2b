#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mapenum/cli/checks.hpp"
#include "mapenum/error.hpp"
#include "mapenum/exact/json_io.hpp"
#include "mapenum/freud/freud.hpp"
#include "mapenum/genfun/golden.hpp"
#include "mapenum/matching/matching.hpp"
#include "mapenum/orbitnum/orbitnum.hpp"
#include "mapenum/stringeq/stringeq.hpp"

namespace py = pybind11;
using namespace mapenum;

namespace {

py::object fraction(const Rational& q) {
  static py::object F = py::module_::import("fractions").attr("Fraction");
  return F(q.str());
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict table_dict(const CountTable& t) {
  py::dict d;
  d["family"] = family_name(t.family);
  d["nu"] = t.family == Family::E3 ? std::string("3v") : std::to_string(t.nu);
  d["genera"] = t.genera;
  d["vertices"] = t.vertices;
  py::list rows;
  for (const auto& r : t.cells) rows.append(fractions(r));
  d["rows"] = rows;
  return d;
}

py::dict derive(int nu, int genus, bool reduced, int extra_slots) {
  DeriveOptions opts;
  opts.reduced = reduced;
  opts.extra_slots = extra_slots;
  const auto d = derive_zg(nu, genus, opts);
  py::dict out;
  out["nu"] = nu;
  out["genus"] = genus;
  out["beta"] = fractions(d.solution.beta);
  out["denominator_exponent"] = d.solution.denominator_exponent;
  out["z_g"] = GenFunExpr::from_solution(d.solution).str();
  out["kmax"] = d.kmax;
  out["seconds"] = d.seconds;
  if (nu == 2) {
    out["Q"] = fractions(q_factor(d.solution).coeffs());
    out["top"] = fraction(partial_fraction(d.solution).top());
  }
  return out;
}

py::dict counts(const std::string& family, const std::string& nu, std::vector<int> genera, int jmax) {
  const auto& G = GoldenCatalog::embedded();
  const bool tri = nu == "3v";
  const int v = tri ? 0 : std::stoi(nu);
  if (family != "z" && family != "e") throw std::invalid_argument("family must be 'z' or 'e'");
  if (genera.empty()) genera = tri ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7};
  std::map<int, GenFunExpr> exprs;
  for (int g : genera) {
    if (family == "e") {
      const auto& src = tri ? G.e_3v : G.e_nu2;
      if (!src.count(g) || (!tri && v != 2)) throw std::invalid_argument("no closed form e_" + std::to_string(g));
      exprs[g] = src.at(g);
    } else if (tri) {
      throw std::invalid_argument("3-valent tables exist for the e family only");
    } else {
      exprs[g] = g == 0 ? GenFunExpr::identity() : GenFunExpr::from_solution(derive_zg(v, g, {.extra_slots = 1}).solution);
    }
  }
  std::vector<int> vertices;
  for (int j = tri ? 2 : 1; j <= jmax; j += tri ? 2 : 1) vertices.push_back(j);
  const Family f = tri ? Family::E3 : (family == "z" ? Family::Z : Family::E);
  return table_dict(build_table(f, v, exprs, vertices));
}

py::list orbit_x(int nu, const std::string& N, const std::string& r, int nmax, unsigned bits, const std::string& method) {
  PrecisionConfig cfg;
  cfg.bits = bits;
  cfg.validate();
  PrecisionScope ps(bits);
  const auto s = method == "hankel" ? hankel_x(nu, Real(N), Real(r), nmax, cfg) : stieltjes_x(nu, Real(N), Real(r), nmax, cfg);
  py::list out;
  for (const auto& x : s.x) out.append(to_string(x, static_cast<int>(bits * 0.30103)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_mapenum, m) {
  m.doc() = "Exact map-enumeration generating functions from recurrence asymptotics";
  m.attr("__version__") = "1.0.0";

  py::register_exception<ShortfallError>(m, "ShortfallError", PyExc_ArithmeticError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("cm_expand", [](int nu, int order) { return from_json(cm_expand(nu, order).to_json()); },
        py::arg("nu") = 2, py::arg("order") = 6, "Coefficients c_k of x_n as JSON-like data.");

  m.def("freud_polynomial", [](int nu) {
    py::dict d;
    for (const auto& [k, v] : build_freud(nu).terms) d[py::tuple(py::cast(k))] = v;
    return d;
  }, py::arg("nu"), "M_nu as {offsets: multiplicity}.");

  m.def("z0_series", [](const std::string& nu, int jmax) {
    const auto spec = nu == "3v" ? StringEquationSpec::trivalent() : StringEquationSpec::even(std::stoi(nu));
    return fractions(z0_coupling_series(spec, jmax).coeffs());
  }, py::arg("nu") = "2", py::arg("jmax") = 8, "Taylor coefficients of z_0 in the coupling.");

  m.def("derive_zg", &derive, py::arg("nu") = 2, py::arg("genus"), py::arg("reduced") = false,
        py::arg("extra_slots") = 2, "Derive z_g by matching.");

  m.def("counts", &counts, py::arg("family") = "z", py::arg("nu") = "2", py::arg("genera") = std::vector<int>{},
        py::arg("jmax") = 15, "Exact count table.");

  m.def("genus0_closed", [](int nu, int j, bool labeled) { return fraction(genus0_closed(nu, j, labeled)); },
        py::arg("nu"), py::arg("j"), py::arg("labeled") = false);

  m.def("q_roots", [](int genus) {
    const auto roots = real_roots(q_factor(derive_zg(2, genus, {.reduced = true}).solution));
    if (!roots.all_real()) throw ConsistencyError("Q has non-real roots");
    return roots.approx();
  }, py::arg("genus"), "Real roots of Q_{g-1} for nu = 2.");

  m.def("orbit_x", &orbit_x, py::arg("nu") = 2, py::arg("N") = "1", py::arg("r") = "1", py::arg("nmax") = 50,
        py::arg("bits") = 256, py::arg("method") = "stieltjes", "x_1..x_nmax as decimal strings.");

  m.def("golden_tables", [] {
    py::dict d;
    for (const auto& [name, t] : GoldenCatalog::embedded().tables) d[py::str(name)] = table_dict(t);
    return d;
  });

  m.def("verify", [](const std::string& scope) {
    CheckContext ctx(GoldenCatalog::embedded());
    return from_json(report_json(run_checks(parse_scope(scope), ctx)));
  }, py::arg("scope") = "counts", "Run verification checks; returns the JSON report.");
}
