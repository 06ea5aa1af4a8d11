#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "iwtower/iwasawa.hpp"
#include "iwtower/random_tower.hpp"
#include "iwtower/zeta.hpp"
#include "oracles.hpp"

using namespace iwtower;

namespace {

LaurentPolyZ poly1(std::vector<long> c, std::int64_t shift = 0) {
  LaurentPolyZ f(1);
  for (std::size_t i = 0; i < c.size(); ++i) f.add_term({static_cast<std::int64_t>(i) + shift}, Integer(c[i]));
  return f;
}

// Symbolic det(D - A_alpha) or det(Id - A_alpha) by cofactor expansion over Z[T^{+-1}].
LaurentPolyZ cofactor_function(const Digraph& x, const VoltageAssignment& a, GroupKind which) {
  const std::size_t r = x.vertex_count(), d = a.d;
  Matrix<LaurentPolyZ> m(r, r, LaurentPolyZ(d));
  for (std::size_t v = 0; v < r; ++v)
    m(v, v) = LaurentPolyZ::constant(d, which == GroupKind::picard ? Integer(static_cast<unsigned long>(x.out_degree(v))) : Integer(1));
  for (const Edge& e : x.edges()) m(e.dst, e.src) -= LaurentPolyZ::monomial(a.values[e.id]);
  return oracle::cofactor_det<LaurentPolyZ>(m, LaurentPolyZ(d), LaurentPolyZ::constant(d, 1));
}

// Same determinant evaluated numerically at a point of the torus.
oracle::Complex numeric_function(const Digraph& x, const VoltageAssignment& a, GroupKind which, const std::vector<oracle::Complex>& t) {
  const std::size_t r = x.vertex_count();
  std::vector<std::vector<oracle::Complex>> m(r, std::vector<oracle::Complex>(r, 0));
  for (std::size_t v = 0; v < r; ++v) m[v][v] = which == GroupKind::picard ? static_cast<double>(x.out_degree(v)) : 1.0;
  for (const Edge& e : x.edges()) {
    oracle::Complex z = 1;
    for (std::size_t i = 0; i < a.d; ++i) z *= std::pow(t[i], static_cast<double>(a.values[e.id][i]));
    m[e.dst][e.src] -= z;
  }
  return oracle::complex_det(m);
}

}  // namespace

TEST_CASE("p-adic zeta and Bowen-Franks function examples") {
  const Digraph c3 = directed_cycle(3);
  CHECK(p_adic_zeta(c3, VoltageAssignment::constant(2, c3, 1)) == poly1({1, 0, 0, -1}));
  for (std::size_t r = 1; r <= 5; ++r) {
    const Digraph c = directed_cycle(r);
    const LaurentPolyZ f = p_adic_zeta(c, VoltageAssignment::constant(3, c, 1));
    CHECK(f.augmentation() == 0);
    CHECK(f == cofactor_function(c, VoltageAssignment::constant(3, c, 1), GroupKind::picard));
  }
  const GraphSpec z = fixture("positive_defect");
  CHECK(p_adic_zeta(z.graph, z.voltage).is_zero());

  const GraphSpec ub = fixture("unbounded_bf");
  CHECK(p_adic_zeta(ub.graph, ub.voltage) == poly1({4, -4}));
  CHECK(p_adic_bf(ub.graph, ub.voltage).is_zero());

  // Characteristic polynomial of Id - A_alpha for the rank-two example: lambda^2 (lambda + 2 + 2T).
  const GraphSpec r2 = fixture("rank_two_defect");
  const std::vector<LaurentPolyZ> cp = laurent_char_poly(bf_matrix(r2.graph, r2.voltage));
  REQUIRE(cp.size() == 4);
  CHECK(cp[0].is_zero());
  CHECK(cp[1].is_zero());
  CHECK(cp[2] == poly1({2, 2}));
  CHECK(cp[3] == poly1({1}));

  Digraph edgeless({"a", "b"});
  CHECK(p_adic_bf(edgeless, VoltageAssignment::zero(2, 1, 0)) == poly1({1}));
}

TEST_CASE("tower functions against cofactor and numeric determinants") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  for (int trial = 0; trial < 25; ++trial) {
    RandomTowerOptions o;
    o.p = 2 + trial % 2;
    o.d = trial % 3 == 2 ? 2 : 1;
    const RandomTower t = random_tower(rng, o);
    for (GroupKind k : {GroupKind::picard, GroupKind::bowen_franks}) {
      const LaurentPolyZ f = tower_function(t.graph, t.voltage, k);
      CHECK(f == cofactor_function(t.graph, t.voltage, k));
      std::vector<oracle::Complex> pt;
      for (std::size_t i = 0; i < o.d; ++i) pt.push_back(std::polar(1.0, angle(rng)));
      const oracle::Complex want = numeric_function(t.graph, t.voltage, k, pt);
      CHECK(std::abs(oracle::eval_laurent(f, pt) - want) < 1e-7 * std::max(1.0, std::abs(want)));
    }
    CHECK(p_adic_zeta(t.graph, t.voltage).augmentation() == 0);
  }
}

TEST_CASE("mu_l and the d = 1 invariants") {
  CHECK(mu_l(poly1({4, -4}), 2) == 2);
  CHECK(mu_l(poly1({6, 9, 12}), 3) == 1);
  CHECK(mu_l(poly1({6, 9, 12}), 2) == 0);
  CHECK_THROWS_WITH(mu_l(LaurentPolyZ(1), 2), "mu undefined for 0");

  const IwasawaInvariants a = iwasawa_mu_lambda_d1(poly1({3}), 3);
  CHECK(a.mu == 1);
  CHECK(a.lambda == 0);
  const IwasawaInvariants b = iwasawa_mu_lambda_d1(poly1({-1, 1}), 5);
  CHECK(b.mu == 0);
  CHECK(b.lambda == 1);
  const IwasawaInvariants c = iwasawa_mu_lambda_d1(poly1({1, 0, 0, -1}), 3);
  CHECK(c.mu == 0);
  CHECK(c.lambda == 3);
  // 1 - T^r with r prime to p: a single simple zero at T = 1.
  const IwasawaInvariants e = iwasawa_mu_lambda_d1(poly1({1, 0, 0, -1}), 2);
  CHECK(e.mu == 0);
  CHECK(e.lambda == 1);

  // Multiplying by a unit monomial -T^k changes nothing.
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> coeffs;
    for (int i = 0; i < 1 + trial % 5; ++i) coeffs.push_back(static_cast<long>(rng() % 19) - 9);
    coeffs.push_back(1 + static_cast<long>(rng() % 5));
    const LaurentPolyZ f = poly1(coeffs);
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      const IwasawaInvariants base = iwasawa_mu_lambda_d1(f, p);
      const IwasawaInvariants moved = iwasawa_mu_lambda_d1(-f.shifted({static_cast<std::int64_t>(trial % 7) - 3}), p);
      CHECK(base.mu == moved.mu);
      CHECK(base.lambda == moved.lambda);
      CHECK(base.mu == mu_l(f, p));
    }
  }
  LaurentPolyZ two(2);
  two.add_term({1, 0}, 1);
  CHECK_THROWS_WITH(iwasawa_mu_lambda_d1(two, 2), "only d=1 supported");
}

TEST_CASE("interpolation") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 15; ++trial) {
    RandomTowerOptions o;
    o.p = trial % 3 == 0 ? 5 : 2 + trial % 2;
    o.d = trial % 4 == 3 ? 2 : 1;
    const RandomTower t = random_tower(rng, o);
    for (unsigned n = 0; n <= (o.d == 2 || o.p == 5 ? 1u : 2u); ++n)
      for (const Character& w : all_characters(o.p, o.d, n)) CHECK(interpolation_check(t.graph, t.voltage, w));
  }
  for (int trial = 0; trial < 8; ++trial) {
    RandomTowerOptions o;
    o.p = 2 + trial % 2;
    const RandomTower t = random_out_regular_tower(rng, 2 + trial % 2, o);
    for (const Character& w : all_characters(o.p, 1, 2)) CHECK(interpolation_check(t.graph, t.voltage, w, InterpolationBranch::both));
  }
  const GraphSpec pd = fixture("positive_defect");
  CHECK_THROWS_AS(
      interpolation_check(pd.graph, pd.voltage, Character::trivial(2, 1), InterpolationBranch::out_regular),
      std::invalid_argument);
}

TEST_CASE("nonvanishing at nontrivial characters") {
  const GraphSpec ub = fixture("unbounded_bf");
  const NonvanishingReport r = nonvanishing_check(ub.graph, ub.voltage, 2);
  CHECK(r.characters_checked == 8);
  CHECK(r.holds());
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 10; ++trial) {
    RandomTowerOptions o;
    o.p = 2 + trial % 2;
    const RandomTower t = random_tower(rng, o);
    CHECK(nonvanishing_check(t.graph, t.voltage, 2).holds());
  }
}

TEST_CASE("orbit characteristic ideals") {
  const GraphSpec cy = fixture("cycle3_p2");
  const auto orbits = enumerate_orbits(2, 1, 1, 3);
  for (const GaloisOrbit& o : orbits)
    if (o.representative.is_trivial()) CHECK_FALSE(orbit_char_ideal(cy.graph, cy.voltage, 3, o, GroupKind::picard).has_value());

  // a <-> b with voltages 1 and 0: L_p = 1 - T, whose value 2 at T = -1 is a 3-adic unit.
  Digraph two({"a", "b"});
  two.add_edge(0, 1);
  two.add_edge(1, 0);
  VoltageAssignment a = VoltageAssignment::zero(2, 1, 2);
  a.values[0] = {1};
  CHECK(p_adic_zeta(two, a) == poly1({1, -1}));
  for (const GaloisOrbit& o : enumerate_orbits(2, 1, 1, 3)) {
    const auto t = orbit_char_ideal(two, a, 3, o, GroupKind::picard);
    if (o.representative.is_trivial()) CHECK_FALSE(t.has_value());
    else CHECK(t == std::optional<long>(0));
  }
  // f = 3 (1 - T) at l = 3: every nontrivial orbit sees exactly one factor of 3.
  for (const GaloisOrbit& o : enumerate_orbits(2, 1, 2, 3))
    if (!o.representative.is_trivial()) CHECK(orbit_char_ideal(poly1({3, -3}), 3, o) == std::optional<long>(1));
}

TEST_CASE("aggregate valuation identity") {
  const GraphSpec z = fixture("two_cycle_z3sq");
  for (unsigned long l : {2ul, 7ul}) CHECK(aggregate_valuation_check(z.graph, z.voltage, l, 1).holds);
  std::mt19937_64 rng(75);
  for (int trial = 0; trial < 16; ++trial) {
    RandomTowerOptions o;
    o.p = 2 + trial % 2;
    const RandomTower t = random_tower(rng, o);
    const unsigned long l = o.p == 2 ? 3 : 2;
    for (unsigned n = 1; n <= 2; ++n) {
      const AggregateReport r = aggregate_valuation_check(t.graph, t.voltage, l, n);
      CHECK(r.all_torsion);
      CHECK(r.holds);
      CHECK(r.observed == r.predicted);
    }
  }
}

TEST_CASE("growth experiments") {
  const GraphSpec dl = fixture("double_loop_p3");
  const GrowthTable g = growth_experiment(dl.graph, dl.voltage, 2, 3, GroupKind::picard);
  CHECK(g.mu == 1);
  REQUIRE(g.rows.size() == 4);
  const long obs[] = {0, 2, 8, 26};
  for (unsigned n = 0; n <= 3; ++n) {
    CHECK(g.rows[n].observed == obs[n]);
    CHECK(g.rows[n].residual == -1);
  }

  const GraphSpec ub = fixture("unbounded_bf");
  const GrowthTable u = growth_experiment(ub.graph, ub.voltage, 2, 2, GroupKind::picard);
  CHECK(u.mu == 2);
  for (const GrowthRow& row : u.rows) CHECK(row.residual == -1);
  CHECK_THROWS_AS(growth_experiment(ub.graph, ub.voltage, 2, 2, GroupKind::bowen_franks), std::domain_error);

  const GraphSpec tri = fixture("triangle_undirected");
  const GrowthTable t = growth_experiment(tri.graph, tri.voltage, 3, 3, GroupKind::picard);
  CHECK(t.mu == 0);
  CHECK(t.max_scaled_residual == t.min_scaled_residual);

  const GrowthTable z0 = growth_experiment(dl.graph, dl.voltage, 2, 0, GroupKind::picard);
  CHECK(z0.rows.size() == 1);
  CHECK_THROWS_AS(growth_experiment(dl.graph, dl.voltage, 3, 1, GroupKind::picard), std::invalid_argument);
}
