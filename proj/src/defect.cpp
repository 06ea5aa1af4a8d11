#include "iwtower/defect.hpp"

#include <algorithm>
#include <stdexcept>

#include "iwtower/groups.hpp"
#include "iwtower/iwasawa.hpp"
#include "iwtower/linalg.hpp"
#include "iwtower/parallel.hpp"
#include "iwtower/zeta.hpp"

namespace iwtower {

std::size_t analytic_rank(const Digraph& x) {
  if (x.empty()) return 0;
  return root_multiplicity_at_one(char_poly(adjacency_matrix(x)));
}

std::size_t algebraic_rank(const Digraph& x) {
  if (x.empty()) return 0;
  return x.vertex_count() - rank_exact(relation_matrix(x, GroupKind::bowen_franks));
}

CharacterRanks per_character_ranks(const Digraph& x, const VoltageAssignment& a, const Character& w) {
  const Matrix<CycloElement> aw = character_matrix(x, a, w);
  Matrix<CycloElement> id_minus = aw;
  for (std::size_t i = 0; i < aw.rows(); ++i)
    for (std::size_t j = 0; j < aw.cols(); ++j) {
      id_minus(i, j) = -aw(i, j);
      if (i == j) id_minus(i, j) += CycloElement(w.p, w.level, 1);
    }
  CharacterRanks r;
  r.a = root_multiplicity_at_one(reciprocal_determinant(aw));
  r.b = x.vertex_count() - rank(id_minus);
  if (r.a < r.b) throw std::logic_error("geometric multiplicity exceeds algebraic multiplicity");
  return r;
}

bool DefectReport::consistent() const {
  if (!monotone) return false;
  for (const auto& lv : levels)
    if (lv.delta < 0 || !lv.decomposition_holds()) return false;
  return !constant_voltage_bound_holds || *constant_voltage_bound_holds;
}

DefectReport defect_series(const Digraph& x, const VoltageAssignment& a, unsigned n_max, std::size_t budget) {
  check_budget(x, a.p, a.d, n_max, budget);
  DefectReport report;

  const auto orbits = enumerate_rational_orbits(a.p, a.d, n_max);
  report.characters.resize(orbits.size());
  parallel_for(orbits.size(), [&](std::size_t i) {
    report.characters[i] = {orbits[i], per_character_ranks(x, a, orbits[i].representative)};
  });

  report.levels.resize(n_max + 1);
  parallel_for(n_max + 1, [&](std::size_t n) {
    DefectLevel& lv = report.levels[n];
    lv.n = static_cast<unsigned>(n);
    const Digraph derived = derived_digraph(x, a, lv.n).derived;
    lv.a = analytic_rank(derived);
    lv.b = algebraic_rank(derived);
    lv.delta = static_cast<long>(lv.a) - static_cast<long>(lv.b);
    for (const auto& row : report.characters) {
      if (row.orbit.level > lv.n) continue;
      lv.a_from_characters += row.orbit.orbit_size * row.ranks.a;
      lv.b_from_characters += row.orbit.orbit_size * row.ranks.b;
    }
  });

  for (std::size_t n = 1; n < report.levels.size(); ++n)
    if (report.levels[n].delta < report.levels[n - 1].delta) report.monotone = false;

  if (a.d == 1 && !p_adic_bf(x, a).is_zero()) {
    unsigned first = n_max;
    while (first > 0 && report.levels[first - 1].delta == report.levels[n_max].delta) --first;
    report.stabilization_level = first;
  }

  const bool constant_unit = a.d == 1 && !a.values.empty() && is_constant_voltage(a) &&
                             mod_floor(a.values[0][0], static_cast<std::int64_t>(a.p)) != 0;
  if (constant_unit) {
    report.constant_voltage_level = constant_voltage_stabilization_level(x, a);
    bool holds = true, constant = true;
    const std::int64_t r = static_cast<std::int64_t>(x.vertex_count());
    for (unsigned n = 1; n <= n_max; ++n) {
      if (phi_prime_power(static_cast<std::int64_t>(a.p), n) > r && report.levels[n].delta != report.levels[n - 1].delta)
        holds = false;
      if (report.levels[n].delta != report.levels[0].delta) constant = false;
    }
    report.constant_voltage_bound_holds = holds;
    report.constant_defect_observed = constant;
  }
  return report;
}

unsigned constant_voltage_stabilization_level(const Digraph& x, const VoltageAssignment& a) {
  if (a.d != 1) throw std::invalid_argument("constant voltage towers need d = 1");
  if (a.values.empty() || !is_constant_voltage(a) ||
      mod_floor(a.values[0][0], static_cast<std::int64_t>(a.p)) == 0)
    throw std::invalid_argument("non-constant voltage");
  const std::int64_t r = static_cast<std::int64_t>(x.vertex_count());
  unsigned n = 1;
  while (phi_prime_power(static_cast<std::int64_t>(a.p), n) <= r) ++n;
  return n == 1 ? 0 : n;
}

}  // namespace iwtower
