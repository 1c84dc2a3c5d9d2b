#include <doctest.h>

#include "mapenum/genfun/genfun.hpp"
#include "mapenum/genfun/golden.hpp"
#include "mapenum/matching/matching.hpp"

using namespace mapenum;

namespace {

const GoldenCatalog& G() { return GoldenCatalog::embedded(); }

std::vector<int> range(int lo, int hi, int step = 1) {
  std::vector<int> v;
  for (int i = lo; i <= hi; i += step) v.push_back(i);
  return v;
}

std::map<int, GenFunExpr> z_family_nu2() {
  std::map<int, GenFunExpr> m = G().z_nu2;
  m[0] = GenFunExpr::identity();
  return m;
}

}  // namespace

TEST_SUITE("genfun") {
  TEST_CASE("catalog dimensions") {
    const auto& t = G().tables;
    REQUIRE(t.size() == 3);
    CHECK(t.at("z_nu2").cells.size() == 15);
    CHECK(t.at("z_nu2").genera.size() == 8);
    CHECK(t.at("e_nu2").genera.size() == 8);
    CHECK(t.at("e_3v").genera.size() == 3);
    CHECK(t.at("e_3v").vertices == range(2, 30, 2));
    CHECK(G().z_nu2.size() == 7);
    CHECK(G().e_nu2.size() == 8);
    CHECK(G().e_3v.size() == 3);
  }

  TEST_CASE("z counts") {
    auto g0 = z_counts(2, GenFunExpr::identity(), 3);
    CHECK(g0 == std::vector<Rational>{Rational(3), Rational(18), Rational(135)});
    auto g2 = z_counts(2, G().z_nu2.at(2), 4);
    CHECK(g2[2].is_zero());
    CHECK(g2[3] == Rational(630));
    auto g7 = z_counts(2, G().z_nu2.at(7), 14);
    CHECK(g7[13] == Rational(BigInt("732588016195035000")));
  }

  TEST_CASE("z table reproduces the golden table") {
    const auto& want = G().tables.at("z_nu2");
    auto got = build_table(Family::Z, 2, z_family_nu2(), want.vertices);
    CHECK(table_diff(got, want).empty());
    CHECK(got == want);
  }

  TEST_CASE("e counts") {
    auto e0 = e_counts(G().e_nu2.at(0), 2);
    CHECK(e0 == std::vector<Rational>{Rational(1, 2), Rational(9, 8)});
    CHECK(e_counts(G().e_nu2.at(1), 1)[0] == Rational(1, 4));
    auto e3 = e_counts(G().e_nu2.at(3), 5);
    CHECK(e3[3].is_zero());
    CHECK(e3[4] == Rational(945, 2));
    const auto& want = G().tables.at("e_nu2");
    CHECK(table_diff(build_table(Family::E, 2, G().e_nu2, want.vertices), want).empty());
  }

  TEST_CASE("trivalent counts") {
    auto c0 = e3_counts(G().e_3v.at(0), 4);
    CHECK(c0[1] == Rational(2, 3));
    CHECK(c0[3] == Rational(8, 3));
    CHECK(e3_counts(G().e_3v.at(1), 2)[1] == Rational(1, 6));
    auto c2 = e3_counts(G().e_3v.at(2), 30);
    CHECK(c2[5] == Rational(35, 6));
    for (int j = 1; j <= 30; j += 2) CHECK(c2[static_cast<std::size_t>(j - 1)].is_zero());
    const auto& want = G().tables.at("e_3v");
    CHECK(table_diff(build_table(Family::E3, 0, G().e_3v, want.vertices), want).empty());
  }

  TEST_CASE("genus-zero closed form") {
    CHECK(genus0_closed(2, 1, true) == Rational(2));
    CHECK(genus0_closed(2, 1) == Rational(1, 2));
    CHECK(genus0_closed(2, 2) == Rational(9, 8));
    const auto& t = G().tables.at("e_nu2");
    for (int j = 1; j <= 15; ++j) CHECK(genus0_closed(2, j) == t.at(j, 0));
    CHECK_THROWS(genus0_closed(2, 0));
  }

  TEST_CASE("z counts are nonnegative integers vanishing below the vertex bound") {
    for (const auto& [g, f] : z_family_nu2()) {
      auto c = z_counts(2, f, 15);
      for (int j = 1; j <= 15; ++j) {
        const auto& v = c[static_cast<std::size_t>(j - 1)];
        CHECK(v.is_integer());
        CHECK(v.sign() >= 0);
        if (j < 2 * g) CHECK(v.is_zero());
        else CHECK(v.sign() > 0);
      }
    }
  }

  TEST_CASE("labeled e counts are integers and vanish below the vertex bound") {
    for (const auto& [g, f] : G().e_nu2) {
      auto c = e_counts(f, 15);
      Rational scale(1);
      for (int j = 1; j <= 15; ++j) {
        scale *= Rational(4 * j);
        const auto& v = c[static_cast<std::size_t>(j - 1)];
        CHECK((v * scale).is_integer());
        if (j < 2 * g - 1) CHECK(v.is_zero());
      }
    }
  }

  TEST_CASE("Laurent expansion in w") {
    // z_1 = 2/3 z (z-1)^2 / (2-z)^4 with z = 2 - w
    auto lw = G().z_nu2.at(1).laurent_in_w(2, 0);
    CHECK(lw.begin()->first == -4);
    CHECK(lw.at(-4) == Rational(4, 3));
    CHECK(top_laurent(G().e_nu2.at(2)) == Rational(7, 45));
  }

  TEST_CASE("a0 recurrence") {
    CHECK(a0_recurrence_value(2, {}) == Rational(1, 240));
    auto rows = a0_recurrence_check(G().e_nu2);
    REQUIRE(rows.size() == 6);
    std::vector<Rational> expected = {Rational(1, 240), Rational(-1, 1008), Rational(1, 1440),
                                      Rational(-1, 1056), Rational(691, 327600), Rational(-1, 144)};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].ok);
      CHECK(rows[i].actual == expected[i]);
    }
  }

  TEST_CASE("top relation between z_g / z_0 and e_g") {
    std::map<int, Rational> tops;
    for (int g = 2; g <= 4; ++g) tops[g] = partial_fraction(derive_zg(2, g, {.reduced = true}).solution).top();
    auto rows = top_relation_check(tops, G().e_nu2);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
      CHECK(r.ok);
      CHECK(r.ratio == Rational(4L * (5 * r.g - 5) * (5 * r.g - 3)));
    }
  }

  TEST_CASE("closed-form identities") {
    CHECK(G().z_nu3_expanded.same_rational(G().z_nu3_factored));
    CHECK(G().z_nu3half_expanded.same_rational(G().z_nu3half_factored));
    CHECK(G().z_nu3_expanded.same_function(G().z_nu3_factored));
    GenFunExpr bent = G().z_nu3_factored;
    bent.terms[0].coef = bent.terms[0].coef * Rational(2);
    CHECK_FALSE(G().z_nu3_expanded.same_rational(bent));
    // ln z and ln z^2 / 2 are the same function
    GenFunExpr a, b;
    a.logs.push_back({Rational(1), UPoly::linear(0, 1), UPoly(1)});
    b.logs.push_back({Rational(1, 2), UPoly::linear(0, 1).pow(2), UPoly(1)});
    CHECK(a.same_function(b));
    CHECK_FALSE(a.same_rational(b));
  }

  TEST_CASE("derived solutions as generating functions") {
    auto d = derive_zg(2, 2, {.reduced = true});
    CHECK(GenFunExpr::from_solution(d.solution).same_rational(G().z_nu2.at(2)));
    auto d3 = derive_zg(3, 2, {.extra_slots = 1});
    CHECK(GenFunExpr::from_solution(d3.solution).same_rational(G().z_nu3_expanded));
  }

  TEST_CASE("e_g carry the (z-1) factor") {
    for (int g = 2; g <= 7; ++g) {
      auto [n, d] = G().e_nu2.at(g).rational_part();
      CHECK(z_minus_one_multiplicity(n) >= 2 * g - 1);
    }
  }

  TEST_CASE("CSV and JSON round trips") {
    const auto& t = G().tables.at("z_nu2");
    const std::string csv = t.to_csv();
    CHECK(csv.rfind("vertices,genus0,genus1,genus2,", 0) == 0);
    auto back = CountTable::from_csv(csv, Family::Z, 2);
    CHECK(back == t);
    CHECK(back.at(3, 1).str() == "162");
    CHECK(CountTable::from_json(t.to_json()) == t);
    const auto& e3 = G().tables.at("e_3v");
    CHECK(CountTable::from_json(e3.to_json()) == e3);
    CHECK_THROWS(CountTable::from_csv("j,genus0\n1,2\n", Family::Z, 2));
  }

  TEST_CASE("expression JSON round trip") {
    for (const auto& [g, f] : G().e_nu2) {
      auto back = GenFunExpr::from_json(f.to_json());
      CHECK(back.same_function(f));
      CHECK(back.to_json() == f.to_json());
    }
  }

  TEST_CASE("printed nu = 3 Freud polynomial") {
    auto printed = G().printed_freud_nu3();
    auto engine = build_freud(3);
    CHECK(printed.all_ones() == 10);
    CHECK(engine.all_ones() == 10);
    int differing = 0;
    for (const auto& [k, v] : engine.terms) {
      auto it = printed.terms.find(k);
      differing += std::abs(v - (it == printed.terms.end() ? 0 : it->second));
    }
    for (const auto& [k, v] : printed.terms)
      if (!engine.terms.count(k)) differing += static_cast<int>(v);
    CHECK(differing == 4);  // two misprinted monomials, each missing one place and gaining another
  }
}
