#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "iwtower/cyclotomic.hpp"
#include "iwtower/groups.hpp"
#include "iwtower/laurent.hpp"
#include "iwtower/tower.hpp"

namespace iwtower {

/// det(D_X - A_alpha).
LaurentPolyZ p_adic_zeta(const Digraph& x, const VoltageAssignment& a);
/// det(Id - A_alpha).
LaurentPolyZ p_adic_bf(const Digraph& x, const VoltageAssignment& a);
/// Characteristic polynomial det(lambda Id - m) of a Laurent matrix, ascending in lambda.
std::vector<LaurentPolyZ> laurent_char_poly(const Matrix<LaurentPolyZ>& m);
/// Id - A_alpha.
Matrix<LaurentPolyZ> bf_matrix(const Digraph& x, const VoltageAssignment& a);

/// The Laurent polynomial attached to a group kind: L_p for Pic, the Bowen-Franks function for BF.
LaurentPolyZ tower_function(const Digraph& x, const VoltageAssignment& a, GroupKind which);

/// Minimum l-adic valuation of the coefficients.
long mu_l(const LaurentPolyZ& f, unsigned long l);

struct IwasawaInvariants {
  long mu = 0;
  long lambda = 0;
  /// v_p of each coefficient of f(1+S) after the monomial shift, -1 for zero coefficients.
  std::vector<long> unit_part_valuations;
};

IwasawaInvariants iwasawa_mu_lambda_d1(const LaurentPolyZ& f, unsigned long p);

enum class InterpolationBranch { bowen_franks, out_regular, both };

/// omega(BF function) = det(Id - A_omega); with the out-regular branch also
/// omega(L_p) = q^r det(Id - A_omega / q).
bool interpolation_check(const Digraph& x, const VoltageAssignment& a, const Character& w,
                         InterpolationBranch branch = InterpolationBranch::bowen_franks);

/// ord_l of omega(F) in the local component of the orbit; nullopt when omega(F) = 0
/// (the component is not torsion).
std::optional<long> orbit_char_ideal(const LaurentPolyZ& f, unsigned long l, const GaloisOrbit& orbit);
std::optional<long> orbit_char_ideal(const Digraph& x, const VoltageAssignment& a, unsigned long l,
                                     const GaloisOrbit& orbit, GroupKind which);

struct AggregateTerm {
  GaloisOrbit orbit;
  std::optional<long> t;
};

struct AggregateReport {
  long observed = 0;   // ord_l |G(X_n)_tor| - ord_l |G(X_0)_tor|
  long predicted = 0;  // sum over nontrivial orbits of f * t
  bool all_torsion = true;
  bool holds = false;
  std::vector<AggregateTerm> terms;
};

AggregateReport aggregate_valuation_check(const Digraph& x, const VoltageAssignment& a, unsigned long l,
                                          unsigned n, GroupKind which = GroupKind::picard,
                                          std::size_t budget = kDefaultBudget);

struct NonvanishingReport {
  std::size_t characters_checked = 0;
  std::vector<Character> vanishing;
  bool holds() const { return vanishing.empty(); }
};

/// Evaluates L_p at every nontrivial character of Gamma_n.
NonvanishingReport nonvanishing_check(const Digraph& x, const VoltageAssignment& a, unsigned n);

struct GrowthRow {
  unsigned n = 0;
  long observed = 0;
  Integer predicted;
  Integer residual;
};

struct GrowthTable {
  unsigned long l = 0;
  GroupKind which = GroupKind::picard;
  long mu = 0;
  std::vector<GrowthRow> rows;
  /// max and min of residual / p^{(d-1)n} over the computed levels.
  Rational max_scaled_residual, min_scaled_residual;
  /// Characters of the top level (nontrivial) where the function vanishes; only for BF.
  std::size_t vanishing_characters = 0;
};

GrowthTable growth_experiment(const Digraph& x, const VoltageAssignment& a, unsigned long l, unsigned n_max,
                              GroupKind which, std::size_t budget = kDefaultBudget);

}  // namespace iwtower
