#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mapenum/exact/radical.hpp"
#include "mapenum/exact/upoly.hpp"
#include "mapenum/freud/freud.hpp"
#include "mapenum/series/power_series.hpp"

namespace mapenum {

/// Expansion order needed for genus g: 5 g nu - 2 nu - 3 g + 1.
int k_nu(int nu, int g);
/// nu = 2 reduced-ansatz order 5g - 2.
int k_reduced(int g);

/// All genus-expansion slots a_{(nu-1)m, g}(1), keyed by (m, g), read off c_k
/// at A = 1: the B^{-m} term of c_k sits at g = (k + nu - (nu-1)m) / (2 nu).
/// Throws ConsistencyError for a monomial that fits no slot.
std::map<std::pair<int, int>, RadicalElem> extract_slots(const CmExpansion& e);

/// a_{(nu-1)m, g}(1) for m = 1..3g-1. Throws ShortfallError if kmax < k_nu.
std::vector<RadicalElem> extract_a(const CmExpansion& e, int g);

using RadMatrix = std::vector<std::vector<RadicalElem>>;

/// Row m (1-based, rows 1..rows), column c: coefficient of v^m in
/// z(z-1)z^c / (nu - (nu-1)z)^{5g-1}, c = 0..3g-2, z the Puiseux z_0 in v.
RadMatrix ansatz_rows(int nu, int g, int rows);

/// nu = 2 reduced ansatz: z(z-1)^{2g} z^c / (2 - z)^{5g-1}, c = 0..g-1.
RadMatrix reduced_rows(int g, int rows);

/// Fraction-free (Bareiss) solve of M x = b over Q(theta).
std::vector<RadicalElem> bareiss_solve(RadMatrix M, std::vector<RadicalElem> b);

struct GenusSolution {
  int nu = 2;
  int g = 1;
  std::vector<Rational> beta;  // coefficients of P_{3g-2}, ascending
  int denominator_exponent = 4;
  bool reduced = false;

  UPoly P() const { return UPoly(beta); }
  /// Numerator z (z - 1) P(z) of z_g.
  UPoly numerator() const;
  /// nu - (nu - 1) z raised to 5g - 1.
  UPoly denominator() const;
  nlohmann::json to_json() const;
};

/// Entry-wise triangularity and diagonal -theta^{-m} / nu^{5g-1} (sign + for
/// the reduced ansatz). Returns an empty string on success, else a diagnostic.
std::string check_triangular(const RadMatrix& M, int nu, int g, bool reduced);

/// Solves for beta from rows and slots; asserts triangularity, rationality.
GenusSolution solve_beta(int nu, int g, const std::vector<RadicalElem>& a, const RadMatrix& rows);
GenusSolution solve_reduced(int g, const std::vector<RadicalElem>& a, const RadMatrix& rows);

/// Puiseux coefficients (v^1..v^mmax) of the reconstructed z_g.
PowerSeries<RadicalElem> zg_puiseux(const GenusSolution& sol, int mmax);

/// Exact division of P_{3g-2} by (z-1)^{2g-1}; nu = 2 only.
UPoly q_factor(const GenusSolution& sol);

/// Least e with (z-1)^e dividing P, capped at deg P + 1.
int z_minus_one_multiplicity(const UPoly& p);
/// Required multiplicity of (z-1) in z_g: ceil(2g / (nu-1)).
int required_z_multiplicity(int nu, int g);

struct PartialFraction {
  int nu = 2;
  int g = 1;
  std::vector<Rational> a;  // a[k] multiplies w^{-(2g+k)}, k = 0..3g-1, w = nu - (nu-1)z
  const Rational& top() const { return a.back(); }
};

/// z_g / z_0 = sum_k a_k w^{-(2g+k)}.
PartialFraction partial_fraction(const GenusSolution& sol);

struct RecursionRow {
  int g;  // the genus whose top coefficient is predicted
  Rational predicted;
  Rational actual;
  bool ok;
};
/// Top-coefficient recursion: a^{(g+1)} = nu^3 (25 g^2 - 1)/6 a^{(g)} +
/// (nu/2) sum_{m=1}^{g} a^{(m)} a^{(g-m+1)}, seeded by nu^2/6.
std::vector<RecursionRow> recursion_check(int nu, const std::map<int, Rational>& tops);

struct DeriveOptions {
  bool reduced = false;
  // Extra slots beyond the square system, used for the over-determination check.
  int extra_slots = 2;
  bool self_check = true;
};

struct Derivation {
  GenusSolution solution;
  int kmax = 0;
  int slots_checked = 0;  // slots verified by re-expansion (square + extra)
  std::string triangular_report;  // empty when triangular with the expected diagonal
  double seconds = 0.0;
};

/// Full pipeline for one genus from a fresh expansion.
Derivation derive_zg(int nu, int g, const DeriveOptions& opts = {});
/// Same, reusing an expansion that must reach the needed order.
Derivation derive_zg(const CmExpansion& e, int g, const DeriveOptions& opts = {});

struct RealRoots {
  std::vector<Rational> lo, hi;  // isolating intervals, sorted
  int degree = 0;
  bool all_real() const { return static_cast<int>(lo.size()) == degree; }
  std::vector<double> approx() const;
};

/// Exact real-root isolation by Sturm sequences; intervals refined until
/// narrower than the width tolerance.
RealRoots real_roots(const UPoly& p, const Rational& width = Rational(1L, 1000000000000L));

/// Strict interlacing: each root of `inner` (degree d) lies strictly between
/// consecutive roots of `outer` (degree d + 1).
bool interlaced(const RealRoots& inner, const RealRoots& outer);

}  // namespace mapenum
