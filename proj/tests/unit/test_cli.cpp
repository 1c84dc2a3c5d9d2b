#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mapenum/cli/app.hpp"
#include "mapenum/cli/checks.hpp"

using namespace mapenum;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mapenum");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mapenum_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"derive-zg"}).code == kExitUsage);
    CHECK(cli({"counts", "--family", "x"}).code == kExitUsage);
    CHECK(cli({"counts", "--family", "e", "--nu", "3"}).code == kExitUsage);
    CHECK(cli({"verify", "sideways"}).code == kExitUsage);
    CHECK(cli({"cm-expand", "--format", "xml"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
  }

  TEST_CASE("shortfall exits 3") {
    CHECK(cli({"orbit-check", "--precision", "256", "--nmin", "20", "--nmax", "40", "--terms", "2"}).code == kExitOk);
    // moments at 128 bits cannot carry the Hankel route this far
    CHECK(cli({"orbit-check", "--method", "hankel", "--precision", "128", "--nmin", "10", "--nmax", "80"}).code ==
          kExitShortfall);
    CHECK(cli({"orbit-check", "--method", "hankel", "--precision", "512", "--nmin", "10", "--nmax", "40"}).code ==
          kExitOk);
    CHECK(cli({"orbit-check", "--precision", "64"}).code == kExitUsage);
  }

  TEST_CASE("cm-expand") {
    auto r = cli({"cm-expand", "--nu", "2", "--order", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("c_0 = (-1/6)*B^-2") != std::string::npos);
    auto j = nlohmann::json::parse(cli({"cm-expand", "--order", "2", "--format", "json"}).out);
    CHECK(j["kmax"] == 2);
    CHECK(j["coefficients"].size() == 4);
  }

  TEST_CASE("derive-zg") {
    auto j = nlohmann::json::parse(cli({"derive-zg", "--genus", "1", "--format", "json"}).out);
    CHECK(j["beta"] == nlohmann::json::array({"-2/3", "2/3"}));
    CHECK(j["top"] == "2/3");
    auto r = cli({"derive-zg", "--genus", "2", "--reduced"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Q_1 = 14*z - 56/9") != std::string::npos);
  }

  TEST_CASE("z0") {
    auto j = nlohmann::json::parse(cli({"z0", "--r", "1", "--order", "2", "--jmax", "2", "--format", "json"}).out);
    CHECK(j["coupling"] == nlohmann::json::array({"1", "-3", "18"}));
    CHECK(j["value"]["quadratic_check"] == true);
    CHECK(j["value"]["float"].get<double>() == doctest::Approx(0.4342585459));
  }

  TEST_CASE("counts") {
    auto r = cli({"counts", "--family", "z", "--genus", "0,1", "--jmax", "3"});
    CHECK(r.out == "vertices,genus0,genus1\n1,3,0\n2,18,6\n3,135,162\n");
    auto e = cli({"counts", "--family", "e", "--genus", "3", "--jmax", "5"});
    CHECK(e.out.find("5,945/2") != std::string::npos);
    auto golden = cli({"counts", "--family", "z", "--genus", "2", "--jmax", "6", "--source", "golden"});
    auto derived = cli({"counts", "--family", "z", "--genus", "2", "--jmax", "6"});
    CHECK(golden.out == derived.out);
    auto z3 = cli({"counts", "--family", "z", "--nu", "3", "--genus", "1", "--jmax", "4"});
    CHECK(z3.code == 0);
  }

  TEST_CASE("qroots") {
    auto j = nlohmann::json::parse(cli({"qroots", "--genus", "3", "--format", "json"}).out);
    CHECK(j["all_real"] == true);
    CHECK(j["interlaces_previous"] == true);
    CHECK(j["roots"].size() == 2);
  }

  TEST_CASE("export is deterministic and round-trips") {
    const auto path = temp_file("z.csv");
    REQUIRE(cli({"export", "--table", "z_nu2", "--out", path.string()}).code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto text = buf.str();
    CHECK(text == cli({"export", "--table", "z_nu2"}).out);
    auto t = CountTable::from_csv(text, Family::Z, 2);
    CHECK(t == GoldenCatalog::embedded().tables.at("z_nu2"));
    CHECK(t.at(3, 1).str() == "162");
    auto j = nlohmann::json::parse(cli({"export", "--table", "e_3v", "--format", "json"}).out);
    CHECK(CountTable::from_json(j) == GoldenCatalog::embedded().tables.at("e_3v"));
    std::filesystem::remove(path);
    CHECK(cli({"export", "--table", "z_nu9"}).code == kExitUsage);
  }

  TEST_CASE("verify counts passes and names a corrupted cell") {
    auto ok = cli({"verify", "counts", "--format", "json"});
    CHECK(ok.code == 0);
    auto rep = nlohmann::json::parse(ok.out);
    CHECK(rep["passed"] == true);
    CHECK(rep["checks"][0]["details"][0].get<std::string>().find("z_nu2") != std::string::npos);

    auto golden = nlohmann::json::parse(GoldenCatalog::embedded_text());
    golden["tables"]["z_nu2"]["rows"][2][1] = "163";  // j = 3, g = 1
    const auto path = temp_file("golden.json");
    std::ofstream(path) << golden.dump();
    auto bad = cli({"verify", "counts", "--golden", path.string()});
    CHECK(bad.code == kExitVerifyFailed);
    CHECK(bad.out.find("(j=3, g=1): 162 vs 163") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("check plumbing") {
    CHECK(parse_scope("numeric") == Scope::Numeric);
    CHECK_THROWS_AS(parse_scope("everything"), std::invalid_argument);
    CheckContext ctx(GoldenCatalog::embedded());
    auto r = check_bootstrap(ctx);
    CHECK(r.pass);
    CHECK(r.id == "AC1");
    auto rep = report_json({r});
    CHECK(rep["summary"]["passed"] == 1);
    CHECK(&ctx.derivation(2, 2) == &ctx.derivation(2, 2));
  }
}
