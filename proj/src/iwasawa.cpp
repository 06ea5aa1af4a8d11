#include "iwtower/iwasawa.hpp"

#include <algorithm>
#include <stdexcept>

#include "iwtower/linalg.hpp"
#include "iwtower/parallel.hpp"
#include "iwtower/zeta.hpp"

namespace iwtower {

namespace {

Matrix<LaurentPolyZ> diagonal_minus(const Digraph& x, const VoltageAssignment& a, bool use_degrees) {
  Matrix<LaurentPolyZ> m = voltage_matrix(x, a);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    const Integer diag = use_degrees ? Integer(static_cast<unsigned long>(x.out_degree(v))) : Integer(1);
    m(v, v) += LaurentPolyZ::constant(a.d, diag);
  }
  return m;
}

LaurentPolyZ laurent_det(const Matrix<LaurentPolyZ>& m, std::size_t d) {
  if (m.rows() == 0) return LaurentPolyZ::constant(d, 1);
  return det_subset_expansion(m, LaurentPolyZ(d), LaurentPolyZ::constant(d, 1));
}

}  // namespace

Matrix<LaurentPolyZ> bf_matrix(const Digraph& x, const VoltageAssignment& a) { return diagonal_minus(x, a, false); }

LaurentPolyZ p_adic_zeta(const Digraph& x, const VoltageAssignment& a) {
  return laurent_det(diagonal_minus(x, a, true), a.d);
}

LaurentPolyZ p_adic_bf(const Digraph& x, const VoltageAssignment& a) {
  return laurent_det(diagonal_minus(x, a, false), a.d);
}

std::vector<LaurentPolyZ> laurent_char_poly(const Matrix<LaurentPolyZ>& m) {
  const std::size_t d = m.rows() ? m(0, 0).num_vars() : 1;
  return faddeev_leverrier(m, LaurentPolyZ(d), LaurentPolyZ::constant(d, 1));
}

LaurentPolyZ tower_function(const Digraph& x, const VoltageAssignment& a, GroupKind which) {
  return which == GroupKind::picard ? p_adic_zeta(x, a) : p_adic_bf(x, a);
}

long mu_l(const LaurentPolyZ& f, unsigned long l) {
  if (f.is_zero()) throw std::domain_error("mu undefined for 0");
  long mu = -1;
  for (const auto& [e, c] : f.terms()) {
    const long v = valuation(c, l);
    if (mu < 0 || v < mu) mu = v;
  }
  return mu;
}

IwasawaInvariants iwasawa_mu_lambda_d1(const LaurentPolyZ& f, unsigned long p) {
  if (f.num_vars() != 1) throw std::invalid_argument("only d=1 supported");
  if (f.is_zero()) throw std::domain_error("Iwasawa invariants undefined for 0");
  const LaurentPolyZ g = f.shifted({-f.min_exponents()[0]});
  std::int64_t top = 0;
  for (const auto& [e, c] : g.terms()) top = std::max(top, e[0]);
  // T = 1 + S: c_i = sum_k a_k binom(k, i).
  std::vector<Integer> c(static_cast<std::size_t>(top) + 1, Integer(0));
  Integer binom;
  for (const auto& [e, a] : g.terms()) {
    const auto k = static_cast<unsigned long>(e[0]);
    for (unsigned long i = 0; i <= k; ++i) {
      mpz_bin_uiui(binom.get_mpz_t(), k, i);
      c[i] += a * binom;
    }
  }
  IwasawaInvariants inv;
  inv.mu = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) {
      inv.unit_part_valuations.push_back(-1);
      continue;
    }
    const long v = valuation(c[i], p);
    inv.unit_part_valuations.push_back(v);
    if (inv.mu < 0 || v < inv.mu) {
      inv.mu = v;
      inv.lambda = static_cast<long>(i);
    }
  }
  return inv;
}

bool interpolation_check(const Digraph& x, const VoltageAssignment& a, const Character& w,
                         InterpolationBranch branch) {
  std::optional<std::size_t> q;
  if (branch != InterpolationBranch::bowen_franks) {
    q = out_regular_degree(x);
    if (!q) throw std::invalid_argument("out-regular branch requested on a graph that is not out-regular");
  }
  const CycloPoly recip = l_function_reciprocal(x, a, w).poly;
  bool ok = true;
  if (branch != InterpolationBranch::out_regular) ok = ok && char_eval(p_adic_bf(x, a), w) == recip(Rational(1));
  if (q) {
    if (*q == 0) throw std::invalid_argument("out-regular branch needs positive out-degree");
    CycloElement rhs = recip(1 / Rational(static_cast<unsigned long>(*q)));
    rhs *= Rational(ipow(Integer(static_cast<unsigned long>(*q)), static_cast<unsigned long>(x.vertex_count())));
    ok = ok && char_eval(p_adic_zeta(x, a), w) == rhs;
  }
  return ok;
}

std::optional<long> orbit_char_ideal(const LaurentPolyZ& f, unsigned long l, const GaloisOrbit& orbit) {
  const CycloElement e = char_eval(f, orbit.representative);
  if (e.is_zero()) return std::nullopt;
  return local_valuation(e, l, orbit);
}

std::optional<long> orbit_char_ideal(const Digraph& x, const VoltageAssignment& a, unsigned long l,
                                     const GaloisOrbit& orbit, GroupKind which) {
  return orbit_char_ideal(tower_function(x, a, which), l, orbit);
}

AggregateReport aggregate_valuation_check(const Digraph& x, const VoltageAssignment& a, unsigned long l,
                                          unsigned n, GroupKind which, std::size_t budget) {
  check_budget(x, a.p, a.d, n, budget);
  AggregateReport report;
  report.observed = level_groups(x, a, n, which, budget).torsion_valuation(l) -
                    level_groups(x, a, 0, which, budget).torsion_valuation(l);
  const LaurentPolyZ f = tower_function(x, a, which);
  for (const auto& orbit : enumerate_orbits(a.p, a.d, n, l))
    if (!orbit.representative.is_trivial()) report.terms.push_back({orbit, std::nullopt});
  parallel_for(report.terms.size(), [&](std::size_t i) {
    report.terms[i].t = orbit_char_ideal(f, l, report.terms[i].orbit);
  });
  for (const auto& term : report.terms) {
    if (!term.t) {
      report.all_torsion = false;
      continue;
    }
    report.predicted += static_cast<long>(term.orbit.local_degree) * *term.t;
  }
  report.holds = report.all_torsion && report.observed == report.predicted;
  return report;
}

NonvanishingReport nonvanishing_check(const Digraph& x, const VoltageAssignment& a, unsigned n) {
  const LaurentPolyZ f = p_adic_zeta(x, a);
  NonvanishingReport report;
  for (const auto& w : all_characters(a.p, a.d, n)) {
    if (w.is_trivial()) continue;
    ++report.characters_checked;
    if (char_eval(f, w).is_zero()) report.vanishing.push_back(w);
  }
  return report;
}

GrowthTable growth_experiment(const Digraph& x, const VoltageAssignment& a, unsigned long l, unsigned n_max,
                              GroupKind which, std::size_t budget) {
  if (l == a.p) throw std::invalid_argument("growth experiment needs l different from p");
  if (!is_prime(static_cast<std::int64_t>(l))) throw std::invalid_argument("l must be prime");
  check_budget(x, a.p, a.d, n_max, budget);
  const LaurentPolyZ f = tower_function(x, a, which);
  if (f.is_zero()) {
    if (which == GroupKind::bowen_franks)
      throw std::domain_error(
          "Bowen-Franks function vanishes identically; growth needs nonzero evaluations at almost all characters");
    throw std::domain_error("p-adic zeta function vanishes identically");
  }
  GrowthTable table;
  table.l = l;
  table.which = which;
  table.mu = mu_l(f, l);
  if (which == GroupKind::bowen_franks)
    for (const auto& w : all_characters(a.p, a.d, n_max))
      if (!w.is_trivial() && char_eval(f, w).is_zero()) ++table.vanishing_characters;

  table.rows.resize(n_max + 1);
  parallel_for(n_max + 1, [&](std::size_t n) {
    GrowthRow& row = table.rows[n];
    row.n = static_cast<unsigned>(n);
    row.observed = level_groups(x, a, row.n, which, budget).torsion_valuation(l);
    row.predicted = ipow(Integer(a.p), static_cast<unsigned long>(n * a.d)) * table.mu;
    row.residual = Integer(row.observed) - row.predicted;
  });
  for (const auto& row : table.rows) {
    Rational scaled(row.residual, ipow(Integer(a.p), static_cast<unsigned long>(row.n * (a.d - 1))));
    scaled.canonicalize();
    if (row.n == 0 || scaled > table.max_scaled_residual) table.max_scaled_residual = scaled;
    if (row.n == 0 || scaled < table.min_scaled_residual) table.min_scaled_residual = scaled;
  }
  return table;
}

}  // namespace iwtower
