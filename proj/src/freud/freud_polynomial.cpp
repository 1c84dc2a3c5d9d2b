#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "mapenum/error.hpp"
#include "mapenum/freud/freud.hpp"

namespace mapenum {

long FreudPolynomial::all_ones() const {
  long total = 0;
  for (const auto& [mono, mult] : terms) total += mult;
  return total;
}

FreudPolynomial FreudPolynomial::reflected() const {
  FreudPolynomial out;
  out.nu = nu;
  for (const auto& [mono, mult] : terms) {
    std::vector<int> r;
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) r.push_back(-*it);
    out.terms[r] += mult;
  }
  return out;
}

namespace {

std::string x_name(int j) {
  if (j == 0) return "x[n]";
  return "x[n" + std::string(j > 0 ? "+" : "-") + std::to_string(std::abs(j)) + "]";
}

}  // namespace

std::string FreudPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, mult] : terms) {
    if (!first) os << " + ";
    first = false;
    if (mult != 1) os << mult << "*";
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t k = i;
      while (k < mono.size() && mono[k] == mono[i]) ++k;
      if (i) os << "*";
      os << x_name(mono[i]);
      if (k - i > 1) os << "^" << (k - i);
      i = k;
    }
  }
  return os.str();
}

long freud_constant(int nu) {
  if (nu < 1) throw std::invalid_argument("nu must be >= 1");
  return binomial(static_cast<unsigned long>(2 * nu - 1), static_cast<unsigned long>(nu - 1)).get_si();
}

FreudPolynomial build_freud(int nu) {
  if (nu < 2) throw std::invalid_argument("build_freud requires nu >= 2");
  const int half = 2 * nu;  // window of levels -half..half
  const std::size_t width = static_cast<std::size_t>(2 * half + 1);
  using Poly = std::map<std::vector<int>, long>;  // edge crossing counts -> coefficient
  // Column vector J^t e_n, one polynomial entry per level.
  std::map<int, Poly> vec;
  vec[0][std::vector<int>(width, 0)] = 1;
  for (int step = 0; step < 2 * nu - 1; ++step) {
    std::map<int, Poly> next;
    for (const auto& [level, poly] : vec) {
      // J_{level+1, level} = b_{level+1}; J_{level-1, level} = b_level.
      for (const int dir : {+1, -1}) {
        const int to = level + dir;
        if (to < -half || to > half) continue;
        const int edge = dir > 0 ? level + 1 : level;
        for (const auto& [counts, coef] : poly) {
          auto c = counts;
          ++c[static_cast<std::size_t>(edge + half)];
          next[to][c] += coef;
        }
      }
    }
    vec = std::move(next);
  }
  FreudPolynomial out;
  out.nu = nu;
  for (const auto& [walk_counts, coef] : vec[-1]) {
    auto counts = walk_counts;
    ++counts[static_cast<std::size_t>(half)];  // the b_n prefactor
    std::vector<int> mono;
    for (std::size_t i = 0; i < width; ++i) {
      if (counts[i] % 2 != 0) throw ConsistencyError("closed walk crossed an edge an odd number of times");
      for (int t = 0; t < counts[i] / 2; ++t) mono.push_back(static_cast<int>(i) - half);
    }
    if (static_cast<int>(mono.size()) != nu) throw ConsistencyError("Freud monomial of wrong degree");
    for (int j : mono)
      if (std::abs(j) >= nu) throw ConsistencyError("Freud monomial offset out of range");
    out.terms[mono] += coef;
  }
  if (out.all_ones() != freud_constant(nu)) {
    throw ConsistencyError("Freud polynomial all-ones value differs from C(2nu-1, nu-1)");
  }
  return out;
}

}  // namespace mapenum
