#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "iwtower/bigint.hpp"

namespace iwtower {

using ExponentVector = std::vector<std::int64_t>;

/// Laurent polynomial in T_1..T_d over Z. Terms are kept in lexicographic exponent
/// order and no zero coefficient is ever stored.
class LaurentPolyZ {
 public:
  explicit LaurentPolyZ(std::size_t d = 1) : d_(d) {}

  static LaurentPolyZ constant(std::size_t d, const Integer& c);
  static LaurentPolyZ monomial(const ExponentVector& exps, const Integer& c = 1);
  /// T_i (0-based index).
  static LaurentPolyZ variable(std::size_t d, std::size_t i);

  std::size_t num_vars() const noexcept { return d_; }
  const std::map<ExponentVector, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coeff(const ExponentVector& exps) const;
  void add_term(const ExponentVector& exps, const Integer& c);

  /// Value at T_1 = ... = T_d = 1.
  Integer augmentation() const;

  /// Componentwise minimum exponent over all terms; requires a nonzero polynomial.
  ExponentVector min_exponents() const;
  /// Multiplies by T^shift.
  LaurentPolyZ shifted(const ExponentVector& shift) const;

  LaurentPolyZ& operator+=(const LaurentPolyZ& o);
  LaurentPolyZ& operator-=(const LaurentPolyZ& o);
  LaurentPolyZ& operator*=(const LaurentPolyZ& o);
  LaurentPolyZ& operator*=(const Integer& c);

  friend LaurentPolyZ operator+(LaurentPolyZ a, const LaurentPolyZ& b) { return a += b; }
  friend LaurentPolyZ operator-(LaurentPolyZ a, const LaurentPolyZ& b) { return a -= b; }
  friend LaurentPolyZ operator*(const LaurentPolyZ& a, const LaurentPolyZ& b);
  friend LaurentPolyZ operator*(LaurentPolyZ a, const Integer& c) { return a *= c; }
  LaurentPolyZ operator-() const;

  friend bool operator==(const LaurentPolyZ& a, const LaurentPolyZ& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, variables named T (d = 1) or T1..Td.
  std::string to_string() const;

 private:
  void check_compatible(const LaurentPolyZ& o) const;
  std::size_t d_;
  std::map<ExponentVector, Integer> terms_;
};

inline bool is_zero(const LaurentPolyZ& f) { return f.is_zero(); }

/// Exact coefficientwise division by an integer; throws if some coefficient is not divisible.
LaurentPolyZ divide_exact(const LaurentPolyZ& f, long k);

}  // namespace iwtower
