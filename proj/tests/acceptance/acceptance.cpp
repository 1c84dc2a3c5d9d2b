// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.
// Sub-check lines follow indented; exit status is 1 if any criterion fails.
#include <cstdio>
#include <exception>
#include <string>

#include "mapenum/cli/checks.hpp"

int main(int argc, char** argv) {
  using namespace mapenum;
  const bool quiet = argc > 1 && std::string(argv[1]) == "--quiet";
  try {
    CheckContext ctx(GoldenCatalog::embedded());
    const auto results = run_checks(Scope::All, ctx);
    int failed = 0;
    for (const auto& r : results) {
      std::printf("%s %s  %s (%.2f s)\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
      if (!r.pass) {
        ++failed;
        std::printf("    first failure: %s\n", r.failure.c_str());
      }
      if (!quiet)
        for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed ? 1 : 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
    return 2;
  }
}
