#include "iwtower/tower.hpp"

#include <algorithm>
#include <functional>

namespace iwtower {

VoltageAssignment VoltageAssignment::zero(unsigned long p, std::size_t d, std::size_t edges) {
  VoltageAssignment a;
  a.p = p;
  a.d = d;
  a.values.assign(edges, ExponentVector(d, 0));
  return a;
}

VoltageAssignment VoltageAssignment::constant(unsigned long p, const Digraph& x, std::int64_t value) {
  VoltageAssignment a;
  a.p = p;
  a.d = 1;
  a.values.assign(x.edge_count(), ExponentVector{value});
  return a;
}

void VoltageAssignment::validate(const Digraph& x) const {
  if (!is_prime(static_cast<std::int64_t>(p))) throw std::invalid_argument("p must be prime");
  if (d == 0) throw std::invalid_argument("d must be positive");
  if (values.size() != x.edge_count()) throw std::invalid_argument("voltage missing for some edge");
  for (const auto& v : values)
    if (v.size() != d) throw std::invalid_argument("voltage vector has wrong length");
}

BudgetExceeded::BudgetExceeded(std::size_t needed_, std::size_t budget_)
    : std::runtime_error("level needs " + std::to_string(needed_) + " derived vertices, budget is " +
                         std::to_string(budget_) + "; lower the level or raise --budget"),
      needed(needed_),
      budget(budget_) {}

std::size_t check_budget(const Digraph& x, unsigned long p, std::size_t d, unsigned n, std::size_t budget) {
  long double approx = static_cast<long double>(x.vertex_count());
  for (std::size_t i = 0; i < d * n; ++i) approx *= static_cast<long double>(p);
  if (approx > static_cast<long double>(budget))
    throw BudgetExceeded(approx > 1e18L ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(approx), budget);
  return static_cast<std::size_t>(approx);
}

VoltageAssignment reduce_voltage(const VoltageAssignment& a, unsigned n) {
  VoltageAssignment r = a;
  const std::int64_t N = ipow64(static_cast<std::int64_t>(a.p), n);
  for (auto& v : r.values)
    for (auto& c : v) c = mod_floor(c, N);
  return r;
}

LevelGroup::LevelGroup(unsigned long p_, std::size_t d_, unsigned n_)
    : p(p_), d(d_), n(n_), modulus(ipow64(static_cast<std::int64_t>(p_), n_)), order(1) {
  for (std::size_t i = 0; i < d; ++i) order *= static_cast<std::size_t>(modulus);
}

std::size_t LevelGroup::encode(const ExponentVector& g) const {
  std::size_t code = 0;
  for (std::size_t i = 0; i < d; ++i)
    code = code * static_cast<std::size_t>(modulus) + static_cast<std::size_t>(mod_floor(g[i], modulus));
  return code;
}

ExponentVector LevelGroup::decode(std::size_t code) const {
  ExponentVector g(d, 0);
  for (std::size_t i = d; i-- > 0;) {
    g[i] = static_cast<std::int64_t>(code % static_cast<std::size_t>(modulus));
    code /= static_cast<std::size_t>(modulus);
  }
  return g;
}

std::size_t LevelGroup::shift(std::size_t code, const ExponentVector& h) const {
  ExponentVector g = decode(code);
  for (std::size_t i = 0; i < d; ++i) g[i] = mod_floor(g[i] + mod_floor(h[i], modulus), modulus);
  return encode(g);
}

TowerLevel derived_digraph(const Digraph& x, const VoltageAssignment& a, unsigned n) {
  a.validate(x);
  const LevelGroup G(a.p, a.d, n);
  const std::size_t N = G.order;
  TowerLevel level;
  level.n = n;
  level.group_order = N;

  std::vector<std::string> labels;
  labels.reserve(x.vertex_count() * N);
  for (std::size_t v = 0; v < x.vertex_count(); ++v)
    for (std::size_t code = 0; code < N; ++code) {
      std::string label = x.vertex_labels()[v];
      if (n > 0) {
        label += "@";
        const ExponentVector g = G.decode(code);
        for (std::size_t i = 0; i < g.size(); ++i) label += (i ? "," : "") + std::to_string(g[i]);
      }
      labels.push_back(std::move(label));
      level.vertex_projection.push_back(v);
      level.vertex_group_code.push_back(code);
    }
  level.derived = Digraph(std::move(labels));
  for (const Edge& e : x.edges())
    for (std::size_t code = 0; code < N; ++code) {
      const std::size_t src = e.src * N + code;
      const std::size_t dst = e.dst * N + G.shift(code, a.values[e.id]);
      level.derived.add_edge(src, dst);
      level.edge_projection.push_back(e.id);
    }
  return level;
}

bool tower_strongly_connected(const Digraph& x, const VoltageAssignment& a) {
  if (x.empty() || !connectivity(x).strongly_connected)
    throw std::invalid_argument("base not strongly connected");
  // Gamma is pro-p, so closed-walk voltages generate it topologically iff they generate
  // Gamma / p Gamma; that is exactly strong connectivity of the level-1 cover.
  return connectivity(derived_digraph(x, a, 1).derived).strongly_connected;
}

std::pair<IntMatrix, IntMatrix> big_level_matrices(const Digraph& x, const VoltageAssignment& a, unsigned n) {
  const TowerLevel level = derived_digraph(x, a, n);
  return {adjacency_matrix(level.derived), degree_matrix(level.derived)};
}

Matrix<LaurentPolyZ> voltage_matrix(const Digraph& x, const VoltageAssignment& a) {
  a.validate(x);
  const std::size_t r = x.vertex_count();
  Matrix<LaurentPolyZ> m(r, r, LaurentPolyZ(a.d));
  for (const Edge& e : x.edges()) m(e.dst, e.src).add_term(a.values[e.id], 1);
  return m;
}

bool is_constant_voltage(const VoltageAssignment& a) {
  return std::adjacent_find(a.values.begin(), a.values.end(), std::not_equal_to<>()) == a.values.end();
}

}  // namespace iwtower
