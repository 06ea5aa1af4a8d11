#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "iwtower/cyclotomic.hpp"
#include "iwtower/digraph.hpp"
#include "iwtower/tower.hpp"

namespace iwtower {

/// Algebraic multiplicity of the eigenvalue 1 of A_X.
std::size_t analytic_rank(const Digraph& x);
/// Free rank of the Bowen-Franks group, |V| - rank(Id - A_X).
std::size_t algebraic_rank(const Digraph& x);

struct CharacterRanks {
  std::size_t a = 0, b = 0;
};

CharacterRanks per_character_ranks(const Digraph& x, const VoltageAssignment& a, const Character& w);

struct CharacterRankRow {
  GaloisOrbit orbit;  // rational orbit; ranks are constant on it
  CharacterRanks ranks;
};

struct DefectLevel {
  unsigned n = 0;
  std::size_t a = 0, b = 0;
  long delta = 0;
  /// Orbit-weighted sums of per-character ranks over characters of Gamma_n.
  std::size_t a_from_characters = 0, b_from_characters = 0;
  bool decomposition_holds() const { return a == a_from_characters && b == b_from_characters; }
};

struct DefectReport {
  std::vector<DefectLevel> levels;
  std::vector<CharacterRankRow> characters;
  bool monotone = true;
  /// First level from which delta is constant through the computed range; only reported
  /// for d = 1 towers with a nonzero Bowen-Franks function.
  std::optional<unsigned> stabilization_level;
  /// Constant-voltage towers: the bound level and whether delta_n = delta_{n-1} held at every
  /// computed n with phi(p^n) > |V|.
  std::optional<unsigned> constant_voltage_level;
  std::optional<bool> constant_voltage_bound_holds;
  /// Constant-voltage towers: whether delta_n = delta_0 at every computed level.
  std::optional<bool> constant_defect_observed;

  /// Monotonicity, per-level decomposition, and the constant-voltage bound when present.
  bool consistent() const;
};

DefectReport defect_series(const Digraph& x, const VoltageAssignment& a, unsigned n_max,
                           std::size_t budget = kDefaultBudget);

/// Smallest n with phi(p^n) > |V|, reported as 0 when already phi(p) = p - 1 > |V|.
/// Requires d = 1 and a constant voltage prime to p.
unsigned constant_voltage_stabilization_level(const Digraph& x, const VoltageAssignment& a);

}  // namespace iwtower
