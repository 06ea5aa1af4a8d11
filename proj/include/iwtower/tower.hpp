#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iwtower/digraph.hpp"
#include "iwtower/laurent.hpp"
#include "iwtower/matrix.hpp"

namespace iwtower {

/// Edge-indexed voltages in Z^d, read in Z_p^d.
struct VoltageAssignment {
  unsigned long p = 2;
  std::size_t d = 1;
  std::vector<ExponentVector> values;  // values[edge_id]

  static VoltageAssignment zero(unsigned long p, std::size_t d, std::size_t edges);
  static VoltageAssignment constant(unsigned long p, const Digraph& x, std::int64_t value);
  /// Throws unless every edge carries a length-d vector and p is prime.
  void validate(const Digraph& x) const;
};

/// Thrown when a level would exceed the derived-vertex budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t needed, std::size_t budget);
  std::size_t needed, budget;
};

constexpr std::size_t kDefaultBudget = 600;

/// |V(X)| * p^{nd}; throws BudgetExceeded when above the budget.
std::size_t check_budget(const Digraph& x, unsigned long p, std::size_t d, unsigned n, std::size_t budget);

/// Componentwise reduction into [0, p^n).
VoltageAssignment reduce_voltage(const VoltageAssignment& a, unsigned n);

/// Group Gamma_n = (Z/p^n)^d, elements encoded in mixed radix with the first coordinate
/// most significant.
struct LevelGroup {
  unsigned long p;
  std::size_t d;
  unsigned n;
  std::int64_t modulus;  // p^n
  std::size_t order;     // p^{nd}

  LevelGroup(unsigned long p, std::size_t d, unsigned n);
  std::size_t encode(const ExponentVector& g) const;
  ExponentVector decode(std::size_t code) const;
  /// code(g + h) for h given as an integer vector (reduced on the fly).
  std::size_t shift(std::size_t code, const ExponentVector& h) const;
};

struct TowerLevel {
  unsigned n = 0;
  Digraph derived;
  /// Derived vertex v*|Gamma_n| + code(g) is (v, g).
  std::vector<std::size_t> vertex_projection;
  std::vector<std::size_t> vertex_group_code;
  /// Derived edge e*|Gamma_n| + code(sigma) is (e, sigma).
  std::vector<std::size_t> edge_projection;
  std::size_t group_order = 1;
};

TowerLevel derived_digraph(const Digraph& x, const VoltageAssignment& a, unsigned n);

/// Whether every level of the tower is strongly connected. x must be strongly connected.
bool tower_strongly_connected(const Digraph& x, const VoltageAssignment& a);

/// (A_{X_n}, D_{X_n}).
std::pair<IntMatrix, IntMatrix> big_level_matrices(const Digraph& x, const VoltageAssignment& a, unsigned n);

/// A_alpha: entry (i,j) = sum over edges v_j -> v_i of T^{alpha(e)}.
Matrix<LaurentPolyZ> voltage_matrix(const Digraph& x, const VoltageAssignment& a);

/// True when every edge carries the same voltage vector.
bool is_constant_voltage(const VoltageAssignment& a);

}  // namespace iwtower
