#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "iwtower/defect.hpp"
#include "iwtower/random_tower.hpp"
#include "oracles.hpp"

using namespace iwtower;

namespace {

// Multiplicity of 1 as a root of det(x Id - A), by repeated synthetic division.
std::size_t root_one_multiplicity(const IntMatrix& a) {
  std::vector<Integer> c = oracle::char_poly(a).coeffs();
  std::size_t k = 0;
  while (!c.empty()) {
    Integer s = 0;
    for (const auto& x : c) s += x;
    if (s != 0) break;
    // Divide by (x - 1): descending Horner.
    std::vector<Integer> q(c.size() - 1);
    Integer carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry += c[i];
      q[i - 1] = carry;
    }
    c = std::move(q);
    ++k;
  }
  return k;
}

std::size_t bf_free_rank(const IntMatrix& a) {
  return a.rows() - oracle::invariant_factors(IntMatrix::identity(a.rows(), 0, 1) - a).size();
}

}  // namespace

TEST_CASE("ranks of the base examples") {
  // The three-vertex example has char poly (x - 1)(x^2 - 4x + 2): eigenvalue 1 is simple.
  const GraphSpec pd = fixture("positive_defect");
  CHECK(analytic_rank(pd.graph) == 1);
  CHECK(algebraic_rank(pd.graph) == 1);
  for (std::size_t r = 1; r <= 5; ++r) {
    CHECK(analytic_rank(directed_cycle(r)) == 1);
    CHECK(algebraic_rank(directed_cycle(r)) == 1);
  }
  Digraph dbl({"a"});
  dbl.add_edge(0, 0);
  dbl.add_edge(0, 0);
  CHECK(analytic_rank(dbl) == 0);
  CHECK(algebraic_rank(dbl) == 0);
  CHECK(analytic_rank(fixture("rank_two_defect").graph) == 2);
  CHECK(algebraic_rank(fixture("rank_two_defect").graph) == 1);
}

TEST_CASE("ranks against the characteristic polynomial oracle") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 1 + trial % 4, 1 + trial % 4, 0, 2);
    const Digraph g = digraph_from_adjacency(a);
    const std::size_t an = analytic_rank(g), al = algebraic_rank(g);
    CHECK(an == root_one_multiplicity(a));
    CHECK(al == bf_free_rank(a));
    CHECK(an >= al);
  }
}

TEST_CASE("per-character ranks") {
  const GraphSpec z5 = fixture("z5_growing_defect");
  for (const Character& w : all_characters(5, 1, 1)) {
    const CharacterRanks r = per_character_ranks(z5.graph, z5.voltage, w);
    CHECK(r.a == (w.is_trivial() ? 0u : 2u));
    CHECK(r.b == (w.is_trivial() ? 0u : 1u));
  }
  const GraphSpec r2 = fixture("rank_two_defect");
  for (const Character& w : all_characters(3, 1, 2)) {
    const CharacterRanks r = per_character_ranks(r2.graph, r2.voltage, w);
    CHECK(r.a == 2);
    CHECK(r.b == 1);
  }
}

TEST_CASE("defect series of the fixtures") {
  const GraphSpec r2 = fixture("rank_two_defect");
  const DefectReport rep = defect_series(r2.graph, r2.voltage, 2);
  REQUIRE(rep.levels.size() == 3);
  const std::size_t as[] = {2, 6, 18}, bs[] = {1, 3, 9};
  for (unsigned n = 0; n <= 2; ++n) {
    CHECK(rep.levels[n].a == as[n]);
    CHECK(rep.levels[n].b == bs[n]);
    CHECK(rep.levels[n].decomposition_holds());
  }
  CHECK(rep.monotone);
  CHECK(rep.consistent());

  const GraphSpec z5 = fixture("z5_growing_defect");
  const DefectReport zr = defect_series(z5.graph, z5.voltage, 2);
  const long deltas[] = {0, 4, 4};
  for (unsigned n = 0; n <= 2; ++n) CHECK(zr.levels[n].delta == deltas[n]);
  CHECK(zr.stabilization_level == std::optional<unsigned>(1));
  CHECK(zr.consistent());
}

TEST_CASE("defect decomposition and monotonicity on random towers") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 16; ++trial) {
    RandomTowerOptions o;
    o.p = 2 + trial % 2;
    o.max_vertices = 3;
    const RandomTower t = random_tower(rng, o);
    const DefectReport rep = defect_series(t.graph, t.voltage, 2);
    CHECK(rep.monotone);
    CHECK(rep.consistent());
    long prev = 0;
    for (const DefectLevel& lv : rep.levels) {
      CHECK(lv.decomposition_holds());
      CHECK(lv.a >= lv.b);
      CHECK(lv.delta >= prev);
      prev = lv.delta;
    }
    // Level 1 against the derived adjacency itself when it is small enough for cofactor expansion.
    const Digraph x1 = derived_digraph(t.graph, t.voltage, 1).derived;
    if (x1.vertex_count() <= 8) {
      const IntMatrix a1 = adjacency_matrix(x1);
      CHECK(rep.levels[1].a == root_one_multiplicity(a1));
      CHECK(rep.levels[1].b == bf_free_rank(a1));
    }
  }
}

TEST_CASE("constant-voltage stabilization level") {
  const auto level = [](std::size_t r, unsigned long p) {
    const Digraph c = directed_cycle(r);
    return constant_voltage_stabilization_level(c, VoltageAssignment::constant(p, c, 1));
  };
  CHECK(level(3, 5) == 0);
  CHECK(level(4, 5) == 2);
  CHECK(level(6, 7) == 2);
  CHECK(level(1, 2) == 2);
  const GraphSpec ub = fixture("unbounded_bf");
  CHECK_THROWS_WITH(constant_voltage_stabilization_level(ub.graph, ub.voltage), "non-constant voltage");

  const Digraph c4 = directed_cycle(4);
  const DefectReport rep = defect_series(c4, VoltageAssignment::constant(5, c4, 1), 2);
  CHECK(rep.constant_voltage_level == std::optional<unsigned>(2));
  CHECK(rep.constant_voltage_bound_holds == std::optional<bool>(true));
  CHECK(rep.consistent());
}
