#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iwtower/digraph.hpp"
#include "iwtower/linalg.hpp"
#include "iwtower/tower.hpp"

namespace iwtower {

/// Z^free_rank plus cyclic factors d_1 | d_2 | ..., all d_i > 1.
struct AbGroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_factors;

  Integer torsion_size() const;
  /// ord_l of the torsion size.
  long torsion_valuation(unsigned long l) const;
  std::string to_string() const;
  friend bool operator==(const AbGroupPresentation& a, const AbGroupPresentation& b) {
    return a.free_rank == b.free_rank && a.torsion_factors == b.torsion_factors;
  }
};

/// Cokernel Z^rows / m Z^cols.
AbGroupPresentation cokernel(const IntMatrix& m);

enum class GroupKind { picard, bowen_franks };
const char* to_string(GroupKind k);

/// D - A for Pic, Id - A for BF.
IntMatrix relation_matrix(const Digraph& x, GroupKind which);

AbGroupPresentation picard_group(const Digraph& x);
AbGroupPresentation bowen_franks_group(const Digraph& x);

/// Relation matrix of X_n assembled blockwise from the voltages (no derived digraph).
IntMatrix level_relation_matrix(const Digraph& x, const VoltageAssignment& a, unsigned n, GroupKind which);

AbGroupPresentation level_groups(const Digraph& x, const VoltageAssignment& a, unsigned n, GroupKind which,
                                 std::size_t budget = kDefaultBudget);

/// Compares the coinvariants of the level-m group under gamma_i^{p^n} with the level-n group.
bool control_check(const Digraph& x, const VoltageAssignment& a, unsigned m, unsigned n, GroupKind which,
                   std::size_t budget = kDefaultBudget);

}  // namespace iwtower
