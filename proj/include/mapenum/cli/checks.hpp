#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mapenum/genfun/golden.hpp"
#include "mapenum/matching/matching.hpp"

namespace mapenum {

struct CheckResult {
  std::string id;     // "AC1".."AC8"
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::string failure;               // first failure, empty on pass
  std::vector<std::string> details;  // one line per sub-check
  nlohmann::json data = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// Shared state for a verification run: the golden catalog in use and
/// derivations computed so far.
class CheckContext {
 public:
  explicit CheckContext(const GoldenCatalog& golden, unsigned numeric_bits = 512)
      : golden_(golden), bits_(numeric_bits) {}

  const GoldenCatalog& golden() const { return golden_; }
  unsigned numeric_bits() const { return bits_; }
  /// Derives (and caches) z_g; nu = 3 uses one extra slot.
  const Derivation& derivation(int nu, int g);

 private:
  const GoldenCatalog& golden_;
  unsigned bits_;
  std::map<std::pair<int, int>, Derivation> cache_;
};

CheckResult check_bootstrap(CheckContext& ctx);       // AC1
CheckResult check_derivations(CheckContext& ctx);     // AC2
CheckResult check_nu3(CheckContext& ctx);             // AC3
CheckResult check_count_tables(CheckContext& ctx);    // AC4
CheckResult check_structure(CheckContext& ctx);       // AC5
CheckResult check_q_roots(CheckContext& ctx);         // AC6
CheckResult check_numeric(CheckContext& ctx);         // AC7
CheckResult check_cross_oracle(CheckContext& ctx);    // AC8

enum class Scope { All, Derivations, Counts, Numeric };

Scope parse_scope(const std::string& s);
std::vector<CheckResult> run_checks(Scope scope, CheckContext& ctx);
nlohmann::json report_json(const std::vector<CheckResult>& results);

}  // namespace mapenum
