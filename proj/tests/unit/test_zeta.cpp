#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "iwtower/random_tower.hpp"
#include "iwtower/zeta.hpp"
#include "oracles.hpp"

using namespace iwtower;

namespace {

IntPoly poly(std::vector<long> v) { return IntPoly(std::vector<Integer>(v.begin(), v.end())); }

// 1 / Z(u) through degree `deg` from closed-walk counts: exp(-sum_v N_v u^v / v).
std::vector<Rational> reciprocal_series_from_walks(const Digraph& x, std::size_t deg) {
  const VoltageAssignment zero = VoltageAssignment::zero(2, 1, x.edge_count());
  std::vector<Rational> s(deg + 1, Rational(0));  // s = -log(1/Z) ... we build L = -sum N_v u^v / v
  for (std::size_t v = 1; v <= deg; ++v) {
    const double n = oracle::closed_walk_sum(x, zero, {0}, 0, v).real();
    s[v] = Rational(-static_cast<long>(std::llround(n)), static_cast<long>(v));
  }
  // exp of a series with zero constant term: e' = s' e.
  std::vector<Rational> e(deg + 1, Rational(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= deg; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += Rational(static_cast<long>(j)) * s[j] * e[k - j];
    e[k] = acc / Rational(static_cast<long>(k));
  }
  return e;
}

Digraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  Digraph g(labels);
  for (std::size_t k = 0; k < edges; ++k) g.add_edge(rng() % n, rng() % n);
  return g;
}

}  // namespace

TEST_CASE("zeta reciprocal examples") {
  for (std::size_t r = 1; r <= 5; ++r) CHECK(zeta_reciprocal(directed_cycle(r)) == IntPoly::monomial(0) - IntPoly::monomial(r));
  CHECK(zeta_reciprocal(Digraph({"a", "b"})) == poly({1}));
  Digraph two({"a", "b"});
  two.add_edge(0, 1);
  two.add_edge(1, 0);
  CHECK(zeta_reciprocal(two) == poly({1, 0, -1}));
}

TEST_CASE("zeta reciprocal against the closed-walk series") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 25; ++trial) {
    const Digraph g = random_graph(rng, 1 + trial % 4, 1 + trial % 6);
    const IntPoly z = zeta_reciprocal(g);
    CHECK(z.coeff(0) == 1);
    CHECK(z.degree() <= static_cast<long>(g.vertex_count()));
    const auto series = reciprocal_series_from_walks(g, 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(series[k] == Rational(z.coeff(k)));
  }
}

TEST_CASE("cycle counts") {
  Digraph empty({"a", "b"});
  const auto zeros = cycle_counts(empty, VoltageAssignment::zero(3, 1, 0), Character::trivial(3, 1), 6);
  for (const auto& c : zeros) CHECK(c.is_zero());

  Digraph loop({"a"});
  loop.add_edge(0, 0);
  for (const auto& c : cycle_counts(loop, VoltageAssignment::zero(3, 1, 1), Character::trivial(3, 1), 10))
    CHECK(c == CycloElement(3, 0, 1));

  Digraph two({"a", "b"});
  two.add_edge(0, 1);
  two.add_edge(1, 0);
  const auto n2 = cycle_counts(two, VoltageAssignment::zero(2, 1, 2), Character::trivial(2, 1), 8);
  for (std::size_t v = 1; v <= 8; ++v) CHECK(n2[v - 1] == CycloElement(2, 0, v % 2 ? 0 : 2));
  CHECK_THROWS(cycle_counts(two, VoltageAssignment::zero(2, 1, 2), Character::trivial(2, 1), 11));
}

TEST_CASE("twisted cycle counts match complex walk sums and the power series of 1/L") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 12; ++trial) {
    RandomTowerOptions o;
    o.p = trial % 2 ? 2 : 3;
    o.max_vertices = 3;
    const RandomTower t = random_tower(rng, o);
    for (const Character& w : all_characters(o.p, 1, 1)) {
      const auto counts = cycle_counts(t.graph, t.voltage, w, 6);
      for (std::size_t v = 1; v <= 6; ++v) {
        const oracle::Complex walk = oracle::closed_walk_sum(t.graph, t.voltage, w.exponents, w.level, v);
        CHECK(std::abs(oracle::embed(counts[v - 1], 1) - walk) < 1e-8);
      }
      // u P'(u) + P(u) * sum_v N_v u^v = 0 modulo u^7, where P = det(Id - u A_omega).
      const CycloPoly P = l_function_reciprocal(t.graph, t.voltage, w).poly;
      for (std::size_t k = 1; k <= 6; ++k) {
        CycloElement acc = P.coeff(k) * Rational(static_cast<long>(k));
        for (std::size_t v = 1; v <= k; ++v) acc += P.coeff(k - v) * counts[v - 1];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("L-function examples") {
  const GraphSpec s = fixture("unbounded_bf");
  CHECK(l_function_reciprocal(s.graph, s.voltage, Character::trivial(3, 1)).poly ==
        CycloPoly(3, 0, [&] {
          std::vector<CycloElement> c;
          const IntPoly z0 = zeta_reciprocal(s.graph);
          for (const auto& z : z0.coeffs()) c.emplace_back(3, 0, Rational(z));
          return c;
        }()));

  // At an order-5 character of the p = 5 fixture the twisted matrix is a 0/1 matrix.
  const GraphSpec f = fixture("z5_growing_defect");
  const long expect[4][4] = {{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}};
  for (std::int64_t k = 1; k < 5; ++k) {
    Character w;
    w.p = 5;
    w.level = 1;
    w.exponents = {k};
    const Matrix<CycloElement> m = character_matrix(f.graph, f.voltage, w);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(m(i, j) == CycloElement(5, 1, expect[i][j]));
  }
}

TEST_CASE("L-functions at conjugate characters are Galois conjugate") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    RandomTowerOptions o;
    o.p = trial % 2 ? 3 : 5;
    const RandomTower t = random_tower(rng, o);
    for (const Character& w : all_characters(o.p, 1, 1)) {
      if (w.is_trivial()) continue;
      const CycloPoly f = l_function_reciprocal(t.graph, t.voltage, w).poly;
      CHECK(f.coeff(0) == CycloElement(o.p, 1, 1));
      CHECK(f.degree() <= static_cast<long>(t.graph.vertex_count()));
      for (std::int64_t k = 2; k < static_cast<std::int64_t>(o.p); ++k)
        CHECK(l_function_reciprocal(t.graph, t.voltage, w.scaled(k)).poly == f.galois(k));
    }
  }
}

TEST_CASE("Artin formalism") {
  const Digraph c3 = directed_cycle(3);
  const ArtinReport r = artin_check(c3, VoltageAssignment::constant(2, c3, 1), 1);
  CHECK(r.holds);
  CHECK(r.cover == IntPoly::monomial(0) - IntPoly::monomial(6));
  CHECK(r.product == r.cover);
  const GraphSpec ub = fixture("unbounded_bf");
  CHECK(artin_check(ub.graph, ub.voltage, 0).holds);
  CHECK(artin_check(ub.graph, ub.voltage, 1).holds);
  CHECK_THROWS_AS(artin_check(ub.graph, ub.voltage, 9), BudgetExceeded);
}

TEST_CASE("Artin formalism against a complex-embedding oracle") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    RandomTowerOptions o;
    o.p = trial % 2 ? 2 : 3;
    o.d = trial % 5 == 4 ? 2 : 1;
    const RandomTower t = random_tower(rng, o);
    const ArtinReport r = artin_check(t.graph, t.voltage, 1);
    CHECK(r.holds);
    CHECK(r.cover == zeta_reciprocal(derived_digraph(t.graph, t.voltage, 1).derived));
    for (double u : {0.3, -0.7, 1.1}) {
      oracle::Complex prod = 1;
      for (const Character& w : all_characters(o.p, o.d, 1)) {
        auto m = oracle::twisted_adjacency(t.graph, t.voltage, w.exponents, 1);
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j ? 1.0 : 0.0) - u * m[i][j];
        prod *= oracle::complex_det(m);
      }
      const double cover = r.cover(Rational(u)).get_d();
      CHECK(std::abs(prod - cover) < 1e-6 * std::max(1.0, std::abs(cover)));
    }
  }
}
