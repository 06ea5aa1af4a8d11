#pragma once

#include <cstddef>
#include <vector>

#include "iwtower/cyclotomic.hpp"
#include "iwtower/digraph.hpp"
#include "iwtower/linalg.hpp"
#include "iwtower/tower.hpp"

namespace iwtower {

/// det(Id - u A_X), the reciprocal of the zeta function.
IntPoly zeta_reciprocal(const Digraph& x);

/// A_omega = omega(A_alpha) over Q(zeta_{p^level}).
Matrix<CycloElement> character_matrix(const Digraph& x, const VoltageAssignment& a, const Character& w);

/// det(Id - u m) over Q(zeta)[u].
CycloPoly reciprocal_determinant(const Matrix<CycloElement>& m);

struct LFunctionReciprocal {
  CycloPoly poly;
  Character character;
};

LFunctionReciprocal l_function_reciprocal(const Digraph& x, const VoltageAssignment& a, const Character& w);

/// N_v(omega) for v = 1..v_max, from traces of powers of A_omega and from an explicit walk
/// enumeration; throws std::logic_error if the two disagree. Limited to v_max <= 10, |V| <= 5.
std::vector<CycloElement> cycle_counts(const Digraph& x, const VoltageAssignment& a, const Character& w,
                                       std::size_t v_max);

struct ArtinReport {
  IntPoly cover;    // det(Id - u A_{X_n})
  IntPoly product;  // product over all characters of det(Id - u A_omega)
  bool holds = false;
};

ArtinReport artin_check(const Digraph& x, const VoltageAssignment& a, unsigned n,
                        std::size_t budget = kDefaultBudget);

}  // namespace iwtower
