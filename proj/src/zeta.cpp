#include "iwtower/zeta.hpp"

#include <stdexcept>

#include "iwtower/parallel.hpp"

namespace iwtower {

IntPoly zeta_reciprocal(const Digraph& x) {
  if (x.empty()) return IntPoly(std::vector<Integer>{1});
  const IntPoly chi = char_poly(adjacency_matrix(x));
  return chi.reversed(x.vertex_count());
}

Matrix<CycloElement> character_matrix(const Digraph& x, const VoltageAssignment& a, const Character& w) {
  if (w.p != a.p || w.d != a.d) throw std::invalid_argument("character does not match the tower");
  const Matrix<LaurentPolyZ> aa = voltage_matrix(x, a);
  return aa.map([&](const LaurentPolyZ& f) { return char_eval(f, w); });
}

CycloPoly reciprocal_determinant(const Matrix<CycloElement>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) throw std::invalid_argument("empty matrix");
  const unsigned long p = m(0, 0).p();
  const unsigned level = m(0, 0).level();
  const CycloElement zero(p, level), one(p, level, 1);
  std::vector<CycloElement> chi = faddeev_leverrier(m, zero, one);
  // det(Id - u m) = u^r chi(1/u): reverse the coefficient list.
  std::vector<CycloElement> rev(chi.rbegin(), chi.rend());
  return CycloPoly(p, level, std::move(rev));
}

LFunctionReciprocal l_function_reciprocal(const Digraph& x, const VoltageAssignment& a, const Character& w) {
  return {reciprocal_determinant(character_matrix(x, a, w)), w};
}

namespace {

struct WalkEnumerator {
  const Digraph& x;
  const VoltageAssignment& a;
  const Character& w;
  std::size_t v_max;
  std::int64_t modulus;
  std::vector<CycloElement>& counts;
  std::size_t start = 0;
  std::vector<std::int64_t> acc;

  void dfs(std::size_t v, std::size_t length) {
    if (length > 0 && v == start) {
      std::int64_t k = 0;
      for (std::size_t i = 0; i < w.d; ++i) k = mod_floor(k + mod_floor(acc[i], modulus) * w.exponents[i], modulus);
      counts[length - 1] += CycloElement::zeta_power(w.p, w.level, k);
    }
    if (length == v_max) return;
    for (std::size_t e : x.out_edges(v)) {
      const auto& vol = a.values[e];
      for (std::size_t i = 0; i < w.d; ++i) acc[i] = mod_floor(acc[i] + vol[i], modulus);
      dfs(x.edge(e).dst, length + 1);
      for (std::size_t i = 0; i < w.d; ++i) acc[i] = mod_floor(acc[i] - vol[i], modulus);
    }
  }
};

}  // namespace

std::vector<CycloElement> cycle_counts(const Digraph& x, const VoltageAssignment& a, const Character& w,
                                       std::size_t v_max) {
  if (v_max > 10 || x.vertex_count() > 5)
    throw std::invalid_argument("cycle_counts is an oracle limited to length 10 and 5 vertices");
  const CycloElement zero(w.p, w.level);
  std::vector<CycloElement> by_trace(v_max, zero), by_walks(v_max, zero);
  if (x.empty()) return by_trace;

  const Matrix<CycloElement> aw = character_matrix(x, a, w);
  Matrix<CycloElement> power = aw;
  for (std::size_t v = 1; v <= v_max; ++v) {
    if (v > 1) power = power * aw;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) by_trace[v - 1] += power(i, i);
  }

  WalkEnumerator walk{x, a, w, v_max, ipow64(static_cast<std::int64_t>(w.p), w.level), by_walks, 0,
                      std::vector<std::int64_t>(w.d, 0)};
  for (std::size_t s = 0; s < x.vertex_count(); ++s) {
    walk.start = s;
    walk.dfs(s, 0);
  }
  if (by_trace != by_walks) throw std::logic_error("cycle counts disagree between traces and walk enumeration");
  return by_trace;
}

ArtinReport artin_check(const Digraph& x, const VoltageAssignment& a, unsigned n, std::size_t budget) {
  check_budget(x, a.p, a.d, n, budget);
  ArtinReport report;
  report.cover = zeta_reciprocal(derived_digraph(x, a, n).derived);

  const auto orbits = enumerate_rational_orbits(a.p, a.d, n);
  std::vector<IntPoly> factors(orbits.size());
  parallel_for(orbits.size(), [&](std::size_t i) {
    factors[i] = orbit_norm(l_function_reciprocal(x, a, orbits[i].representative).poly);
  });
  IntPoly product(std::vector<Integer>{1});
  for (const auto& f : factors) product = product * f;
  report.product = product;
  report.holds = report.cover == report.product;
  return report;
}

}  // namespace iwtower
