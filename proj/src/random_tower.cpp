#include "iwtower/random_tower.hpp"

#include <stdexcept>
#include <string>

namespace iwtower {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

VoltageAssignment random_voltage(std::mt19937_64& rng, const Digraph& g, const RandomTowerOptions& o) {
  VoltageAssignment a = VoltageAssignment::zero(o.p, o.d, g.edge_count());
  std::uniform_int_distribution<std::int64_t> dist(-o.voltage_bound, o.voltage_bound);
  for (auto& v : a.values)
    for (auto& c : v) c = dist(rng);
  return a;
}

std::vector<std::string> labels(std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

template <class Build>
RandomTower retry(std::mt19937_64& rng, const RandomTowerOptions& o, Build build) {
  if (o.min_vertices == 0 || o.min_vertices > o.max_vertices) throw std::invalid_argument("bad vertex range");
  for (std::size_t attempt = 0; attempt < o.max_attempts; ++attempt) {
    Digraph g = build(uniform(rng, o.min_vertices, o.max_vertices));
    VoltageAssignment a = random_voltage(rng, g, o);
    if (tower_strongly_connected(g, a)) return {std::move(g), std::move(a)};
  }
  throw std::runtime_error("no strongly connected tower found within the attempt limit");
}

}  // namespace

RandomTower random_tower(std::mt19937_64& rng, const RandomTowerOptions& o) {
  return retry(rng, o, [&](std::size_t r) {
    Digraph g(labels(r));
    for (std::size_t v = 0; v < r; ++v) g.add_edge(v, (v + 1) % r);
    const std::size_t extra = uniform(rng, r == 1 ? 1 : 0, o.max_extra_edges);
    for (std::size_t k = 0; k < extra; ++k) g.add_edge(uniform(rng, 0, r - 1), uniform(rng, 0, r - 1));
    return g;
  });
}

RandomTower random_out_regular_tower(std::mt19937_64& rng, std::size_t q, const RandomTowerOptions& o) {
  if (q == 0) throw std::invalid_argument("out-degree must be positive");
  return retry(rng, o, [&](std::size_t r) {
    Digraph g(labels(r));
    for (std::size_t v = 0; v < r; ++v) {
      g.add_edge(v, (v + 1) % r);
      for (std::size_t k = 1; k < q; ++k) g.add_edge(v, uniform(rng, 0, r - 1));
    }
    return g;
  });
}

}  // namespace iwtower
