#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "iwtower/digraph.hpp"
#include "iwtower/tower.hpp"

namespace iwtower {

struct RandomTowerOptions {
  unsigned long p = 2;
  std::size_t d = 1;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 4;
  /// Edges added on top of a Hamiltonian cycle (loops and parallel edges allowed).
  std::size_t max_extra_edges = 3;
  /// Voltage entries are drawn from [-voltage_bound, voltage_bound].
  std::int64_t voltage_bound = 3;
  std::size_t max_attempts = 10000;
};

struct RandomTower {
  Digraph graph;
  VoltageAssignment voltage;
};

/// A strongly connected base with a voltage whose tower is strongly connected at every level.
RandomTower random_tower(std::mt19937_64& rng, const RandomTowerOptions& options);

/// As random_tower, but every vertex has out-degree exactly q.
RandomTower random_out_regular_tower(std::mt19937_64& rng, std::size_t q, const RandomTowerOptions& options);

}  // namespace iwtower
