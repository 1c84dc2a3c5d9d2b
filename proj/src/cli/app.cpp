#include "mapenum/cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "mapenum/cli/checks.hpp"
#include "mapenum/error.hpp"
#include "mapenum/exact/json_io.hpp"
#include "mapenum/freud/freud.hpp"
#include "mapenum/genfun/golden.hpp"
#include "mapenum/matching/matching.hpp"
#include "mapenum/orbitnum/orbitnum.hpp"
#include "mapenum/stringeq/stringeq.hpp"

namespace mapenum {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format '" + f + "'");
}

// ---- cm-expand ------------------------------------------------------------

struct CmArgs {
  int nu = 2;
  int order = 6;
  std::string format = "text", out;
};

void cmd_cm_expand(const CmArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json"});
  if (a.nu < 2) throw UsageError("--nu must be at least 2");
  const auto e = cm_expand(a.nu, a.order);
  if (a.format == "json") return emit(dump(e.to_json()), a.out, out);
  std::ostringstream os;
  os << "# x_n ~ sum_k c_k n^(-k/" << a.nu << "), A = N^(1/" << a.nu << "), B = r^(1/" << a.nu << "), theta^" << a.nu
     << " = " << freud_constant(a.nu) << "\n";
  for (int k = -1; k <= e.kmax; ++k) os << "c_" << k << " = " << e.coeff(k) << "\n";
  emit(os.str(), a.out, out);
}

// ---- z0 -------------------------------------------------------------------

struct Z0Args {
  int nu = 2;
  int order = 8;
  int jmax = 8;
  std::string r, alpha = "1";
  std::string format = "text", out;
};

void cmd_z0(const Z0Args& a, std::ostream& out) {
  require_format(a.format, {"text", "json"});
  if (a.nu < 2) throw UsageError("--nu must be at least 2");
  json j;
  j["nu"] = a.nu;
  const auto pv = z0_puiseux_v(a.nu, a.order);
  for (int m = 0; m <= a.order; ++m) j["puiseux_v"].push_back(pv[m].str());
  const auto cs = z0_coupling_series(StringEquationSpec::even(a.nu), a.jmax);
  for (int i = 0; i <= a.jmax; ++i) j["coupling"].push_back(cs[i].str());
  if (!a.r.empty()) {
    if (a.nu != 2) throw UsageError("closed-form evaluation is available for nu = 2 only");
    std::optional<Rational> rq, aq;
    try {
      rq = Rational::parse(a.r);
      aq = Rational::parse(a.alpha);
    } catch (const std::invalid_argument&) {
    }
    const double rv = rq ? rq->to_double() : std::stod(a.r), av = aq ? aq->to_double() : std::stod(a.alpha);
    j["value"]["float"] = z0_closed_nu2(rv, av);
    if (rq && aq) {
      const RadicalElem z = z0_closed_nu2_exact(*rq, *aq);
      const bool ok = (z * z * (Rational(3) * *aq * *rq) + z - RadicalElem(1)).is_zero();
      j["value"]["exact"] = z.str();
      j["value"]["quadratic_check"] = ok;
      if (!ok) throw ConsistencyError("exact z_0 fails 3 alpha r z^2 + z - 1 = 0");
    }
  }
  if (a.format == "json") return emit(dump(j), a.out, out);
  std::ostringstream os;
  os << "# z_0 = sum_m w_m v^m, v = n^(-" << a.nu - 1 << "/" << a.nu << ")\n";
  for (int m = 0; m <= a.order; ++m) os << "v^" << m << ": " << j["puiseux_v"][m].get<std::string>() << "\n";
  os << "# z_0 = sum_j z_j r^j\n";
  for (int i = 0; i <= a.jmax; ++i) os << "r^" << i << ": " << j["coupling"][i].get<std::string>() << "\n";
  if (j.contains("value")) {
    os << "z_0(r=" << a.r << ", alpha=" << a.alpha << ") = " << j["value"]["float"].get<double>() << "\n";
    if (j["value"].contains("exact")) os << "exact: " << j["value"]["exact"].get<std::string>() << "\n";
  }
  emit(os.str(), a.out, out);
}

// ---- derive-zg ------------------------------------------------------------

struct DeriveArgs {
  int nu = 2;
  int genus = 1;
  bool reduced = false;
  int extra_slots = 2;
  std::string format = "text", out;
};

void cmd_derive(const DeriveArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json"});
  if (a.genus < 1) throw UsageError("--genus must be at least 1");
  if (a.reduced && a.nu != 2) throw UsageError("--reduced applies to nu = 2 only");
  DeriveOptions opts;
  opts.reduced = a.reduced;
  opts.extra_slots = a.extra_slots;
  const auto d = derive_zg(a.nu, a.genus, opts);
  const auto expr = GenFunExpr::from_solution(d.solution);
  json j = d.solution.to_json();
  j["kmax"] = d.kmax;
  j["slots_checked"] = d.slots_checked;
  j["z_g"] = expr.to_json();
  if (a.nu == 2) {
    j["Q"] = to_json(q_factor(d.solution));
    j["top"] = partial_fraction(d.solution).top().str();
  }
  if (a.format == "json") return emit(dump(j), a.out, out);
  std::ostringstream os;
  os << "z_" << a.genus << " (nu=" << a.nu << (a.reduced ? ", reduced" : "") << ") = " << expr.str() << "\n";
  os << "P = " << d.solution.P().str() << "\n";
  if (a.nu == 2) {
    os << "Q_" << a.genus - 1 << " = " << q_factor(d.solution).str() << "\n";
    os << "top = " << partial_fraction(d.solution).top() << "\n";
  }
  os << "expansion order " << d.kmax << ", " << d.slots_checked << " slots checked, " << d.seconds << " s\n";
  emit(os.str(), a.out, out);
}

// ---- counts / export ------------------------------------------------------

struct CountArgs {
  std::string family = "z";
  std::string nu = "2";
  std::vector<int> genera;
  int jmax = 0;
  std::string source = "derived";
  std::string format = "csv", out;
};

CountTable compute_counts(const CountArgs& a, const GoldenCatalog& G) {
  const bool tri = a.nu == "3v";
  int nu = 0;
  if (!tri) {
    try {
      nu = std::stoi(a.nu);
    } catch (const std::exception&) {
      throw UsageError("--nu must be an integer >= 2 or 3v");
    }
    if (nu < 2) throw UsageError("--nu must be an integer >= 2 or 3v");
  }
  if (a.family != "z" && a.family != "e") throw UsageError("--family must be z or e");
  if (tri && a.family == "z") throw UsageError("3-valent tables exist for the e family only");
  if (a.family == "e" && !tri && nu != 2) throw UsageError("e-family counts need golden e_g, available for nu = 2");
  if (a.source != "derived" && a.source != "golden") throw UsageError("--source must be derived or golden");

  std::vector<int> genera = a.genera;
  if (genera.empty()) {
    if (tri) genera = {0, 1, 2};
    else if (a.family == "e" || nu == 2) genera = {0, 1, 2, 3, 4, 5, 6, 7};
    else genera = {0, 1, 2};
  }
  const int jmax = a.jmax > 0 ? a.jmax : (tri ? 30 : 15);
  std::vector<int> vertices;
  for (int j = tri ? 2 : 1; j <= jmax; j += tri ? 2 : 1) vertices.push_back(j);

  std::map<int, GenFunExpr> exprs;
  for (int g : genera) {
    if (g < 0) throw UsageError("genus must be nonnegative");
    if (a.family == "e") {
      const auto& src = tri ? G.e_3v : G.e_nu2;
      if (!src.count(g)) throw UsageError("no closed form e_" + std::to_string(g) + " in the catalog");
      exprs[g] = src.at(g);
    } else if (g == 0) {
      exprs[g] = GenFunExpr::identity();
    } else if (a.source == "golden") {
      if (nu != 2 || !G.z_nu2.count(g)) throw UsageError("no closed form z_" + std::to_string(g) + " in the catalog");
      exprs[g] = G.z_nu2.at(g);
    } else {
      DeriveOptions opts;
      if (nu != 2) opts.extra_slots = 1;
      exprs[g] = GenFunExpr::from_solution(derive_zg(nu, g, opts).solution);
    }
  }
  return build_table(tri ? Family::E3 : (a.family == "z" ? Family::Z : Family::E), nu, exprs, vertices);
}

void cmd_counts(const CountArgs& a, const GoldenCatalog& G, std::ostream& out) {
  require_format(a.format, {"csv", "json"});
  const auto t = compute_counts(a, G);
  emit(a.format == "csv" ? t.to_csv() : dump(t.to_json()), a.out, out);
}

struct ExportArgs {
  std::string table = "z_nu2";
  std::string source = "computed";
  std::string format = "csv", out;
};

void cmd_export(const ExportArgs& a, const GoldenCatalog& G, std::ostream& out) {
  require_format(a.format, {"csv", "json"});
  if (!G.tables.count(a.table)) throw UsageError("unknown table '" + a.table + "' (z_nu2, e_nu2, e_3v)");
  CountTable t;
  if (a.source == "golden") {
    t = G.tables.at(a.table);
  } else if (a.source == "computed") {
    CountArgs c;
    c.family = a.table[0] == 'z' ? "z" : "e";
    c.nu = a.table == "e_3v" ? "3v" : "2";
    t = compute_counts(c, G);
  } else {
    throw UsageError("--source must be computed or golden");
  }
  emit(a.format == "csv" ? t.to_csv() : dump(t.to_json()), a.out, out);
}

// ---- qroots ---------------------------------------------------------------

struct QArgs {
  int genus = 2;
  std::string format = "text", out;
};

void cmd_qroots(const QArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json"});
  if (a.genus < 2) throw UsageError("--genus must be at least 2 (Q_{g-1} has positive degree)");
  const auto q = q_factor(derive_zg(2, a.genus, {.reduced = true}).solution);
  const auto roots = real_roots(q);
  json j;
  j["genus"] = a.genus;
  j["Q"] = to_json(q);
  j["all_real"] = roots.all_real();
  for (std::size_t i = 0; i < roots.lo.size(); ++i)
    j["roots"].push_back({{"lo", roots.lo[i].str()}, {"hi", roots.hi[i].str()}, {"approx", roots.approx()[i]}});
  if (a.genus >= 3) {
    const auto prev = real_roots(q_factor(derive_zg(2, a.genus - 1, {.reduced = true}).solution));
    j["interlaces_previous"] = interlaced(prev, roots);
  }
  if (a.format == "json") return emit(dump(j), a.out, out);
  std::ostringstream os;
  os.precision(15);
  os << "Q_" << a.genus - 1 << " = " << q.str() << "\n";
  for (double x : roots.approx()) os << "  " << x << "\n";
  os << (roots.all_real() ? "all roots real" : "complex roots present");
  if (j.contains("interlaces_previous"))
    os << "; " << (j["interlaces_previous"].get<bool>() ? "interlaces" : "does not interlace") << " with Q_" << a.genus - 2;
  os << "\n";
  emit(os.str(), a.out, out);
}

// ---- orbit-check ----------------------------------------------------------

struct OrbitArgs {
  int nu = 2;
  std::string N = "1", r = "1";
  int nmin = 50, nmax = 400, stride = 25;
  unsigned precision = 512;
  int terms = 3;
  std::string method = "stieltjes";
  std::string out;
};

int cmd_orbit(const OrbitArgs& a, std::ostream& out) {
  if (a.nmin < a.nu || a.nmin > a.nmax) throw UsageError("need nu <= nmin <= nmax");
  if (a.stride < 1) throw UsageError("--stride must be positive");
  PrecisionConfig cfg;
  cfg.bits = a.precision;
  cfg.validate();
  PrecisionScope ps(a.precision);
  const Real N(a.N), r(a.r);
  if (a.method != "stieltjes" && a.method != "hankel") throw UsageError("--method must be stieltjes or hankel");
  const auto s = a.method == "hankel" ? hankel_x(a.nu, N, r, a.nmax + a.nu - 1, cfg)
                                      : stieltjes_x(a.nu, N, r, a.nmax + a.nu - 1, cfg);
  const auto e = cm_expand(a.nu, a.terms);
  std::vector<int> ns;
  for (int n = a.nmin; n <= a.nmax; n += a.stride) ns.push_back(n);
  const auto rep = cm_compare(s, e, a.terms, ns, cfg);
  const auto M = build_freud(a.nu);
  Real worst = 0;
  for (int n = a.nmin; n <= a.nmax; ++n) worst = std::max<Real>(worst, boost::multiprecision::abs(freud_residual(s, M, n)));
  json j = rep.to_json();
  j["nu"] = a.nu;
  j["N"] = a.N;
  j["r"] = a.r;
  j["precision"] = a.precision;
  j["method"] = a.method;
  j["freud_residual_max"] = to_string(worst, 6);
  emit(dump(j), a.out, out);
  return worst < cfg.tolerance() ? kExitOk : kExitShortfall;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string scope = "all";
  std::string golden;
  std::string format = "text", out;
  unsigned precision = 512;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json"});
  const Scope scope = parse_scope(a.scope);
  std::optional<GoldenCatalog> loaded;
  if (!a.golden.empty()) loaded = GoldenCatalog::load(a.golden);
  CheckContext ctx(loaded ? *loaded : GoldenCatalog::embedded(), a.precision);
  const auto results = run_checks(scope, ctx);
  const json report = report_json(results);
  if (a.format == "json") {
    emit(dump(report), a.out, out);
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "\n";
      if (!r.pass) os << "    " << r.failure << "\n";
    }
    os << report["summary"]["passed"].get<int>() << " of " << results.size() << " checks passed\n";
    out << os.str();
    if (!a.out.empty()) emit(dump(report), a.out, out);
  }
  return report["passed"].get<bool>() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact map-enumeration generating functions from recurrence asymptotics", "mapenum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mapenum 1.0.0");

  CmArgs cm;
  auto* s_cm = app.add_subcommand("cm-expand", "Expansion coefficients c_k of x_n in powers of n^(-1/nu)");
  s_cm->add_option("--nu", cm.nu, "Half the valence")->capture_default_str();
  s_cm->add_option("--order", cm.order, "Largest k")->capture_default_str();
  s_cm->add_option("--format", cm.format, "text | json")->capture_default_str();
  s_cm->add_option("--out", cm.out, "Output file");

  Z0Args z0;
  auto* s_z0 = app.add_subcommand("z0", "Genus-zero generating function z_0");
  s_z0->add_option("--nu", z0.nu)->capture_default_str();
  s_z0->add_option("--order", z0.order, "Puiseux terms in v")->capture_default_str();
  s_z0->add_option("--jmax", z0.jmax, "Coupling-series terms")->capture_default_str();
  s_z0->add_option("--r", z0.r, "Evaluate the closed form at this r (nu = 2)");
  s_z0->add_option("--alpha", z0.alpha, "alpha = n / N for the closed form")->capture_default_str();
  s_z0->add_option("--format", z0.format, "text | json")->capture_default_str();
  s_z0->add_option("--out", z0.out);

  DeriveArgs dz;
  auto* s_dz = app.add_subcommand("derive-zg", "Derive z_g by matching against the recurrence expansion");
  s_dz->add_option("--nu", dz.nu)->capture_default_str();
  s_dz->add_option("--genus", dz.genus)->required();
  s_dz->add_flag("--reduced", dz.reduced, "Use the reduced ansatz (nu = 2)");
  s_dz->add_option("--extra-slots", dz.extra_slots, "Slots beyond the square system to cross-check")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  s_dz->add_option("--format", dz.format, "text | json")->capture_default_str();
  s_dz->add_option("--out", dz.out);

  CountArgs ct;
  auto* s_ct = app.add_subcommand("counts", "Exact map counts by series composition");
  s_ct->add_option("--family", ct.family, "z (2-legged) | e (no legs)")->capture_default_str();
  s_ct->add_option("--nu", ct.nu, "2, 3, ... or 3v for 3-valent")->capture_default_str();
  s_ct->add_option("--genus", ct.genera, "Genera (repeat or comma-separate); default all available")->delimiter(',');
  s_ct->add_option("--jmax", ct.jmax, "Largest vertex count (default 15, or 30 for 3v)");
  s_ct->add_option("--source", ct.source, "derived | golden (z family)")->capture_default_str();
  s_ct->add_option("--format", ct.format, "csv | json")->capture_default_str();
  s_ct->add_option("--out", ct.out);

  QArgs qa;
  auto* s_q = app.add_subcommand("qroots", "Real roots of Q_{g-1} (nu = 2) by Sturm isolation");
  s_q->add_option("--genus", qa.genus)->required();
  s_q->add_option("--format", qa.format, "text | json")->capture_default_str();
  s_q->add_option("--out", qa.out);

  OrbitArgs oa;
  auto* s_o = app.add_subcommand("orbit-check", "Compare numeric recurrence coefficients with the truncated expansion");
  s_o->add_option("--nu", oa.nu)->capture_default_str();
  s_o->add_option("--N", oa.N)->capture_default_str();
  s_o->add_option("--r", oa.r)->capture_default_str();
  s_o->add_option("--nmin", oa.nmin)->capture_default_str();
  s_o->add_option("--nmax", oa.nmax)->capture_default_str();
  s_o->add_option("--stride", oa.stride, "Spacing of the reported n")->capture_default_str();
  s_o->add_option("--precision", oa.precision, "Working precision in bits")->capture_default_str();
  s_o->add_option("--terms", oa.terms, "Truncation index m")->capture_default_str();
  s_o->add_option("--method", oa.method, "stieltjes | hankel (moments; small nmax)")->capture_default_str();
  s_o->add_option("--out", oa.out);

  VerifyArgs va;
  auto* s_v = app.add_subcommand("verify", "Run the verification suite");
  s_v->add_option("scope", va.scope, "all | derivations | counts | numeric")->capture_default_str();
  s_v->add_option("--golden", va.golden, "Catalog JSON to use instead of the embedded one");
  s_v->add_option("--precision", va.precision, "Bits for the numeric checks")->capture_default_str();
  s_v->add_option("--format", va.format, "text | json")->capture_default_str();
  s_v->add_option("--out", va.out, "Also write the JSON report here");

  ExportArgs ea;
  auto* s_e = app.add_subcommand("export", "Write a count table");
  s_e->add_option("--table", ea.table, "z_nu2 | e_nu2 | e_3v")->capture_default_str();
  s_e->add_option("--source", ea.source, "computed | golden")->capture_default_str();
  s_e->add_option("--format", ea.format, "csv | json")->capture_default_str();
  s_e->add_option("--out", ea.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto& G = GoldenCatalog::embedded();
    if (s_cm->parsed()) cmd_cm_expand(cm, out);
    else if (s_z0->parsed()) cmd_z0(z0, out);
    else if (s_dz->parsed()) cmd_derive(dz, out);
    else if (s_ct->parsed()) cmd_counts(ct, G, out);
    else if (s_q->parsed()) cmd_qroots(qa, out);
    else if (s_o->parsed()) return cmd_orbit(oa, out);
    else if (s_v->parsed()) return cmd_verify(va, out);
    else if (s_e->parsed()) cmd_export(ea, G, out);
    return kExitOk;
  } catch (const ShortfallError& e) {
    err << "error: " << e.what() << "\n";
    return kExitShortfall;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace mapenum
