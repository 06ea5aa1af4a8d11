#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iwtower/bigint.hpp"
#include "iwtower/digraph.hpp"
#include "iwtower/matrix.hpp"

namespace iwtower {

inline bool is_zero(const Integer& z) { return z == 0; }

inline Integer divide_exact(const Integer& z, long k) {
  Integer q;
  if (!mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k)))
    throw std::logic_error("divide_exact: integer not divisible");
  mpz_divexact_ui(q.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Integer(-q) : q;
}

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly monomial(std::size_t degree, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;

  /// Coefficient reversal x^deg f(1/x) with respect to the given formal degree.
  IntPoly reversed(std::size_t formal_degree) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

struct SnfResult {
  /// Nonzero diagonal of the Smith form, positive, each dividing the next.
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
  /// Free rank of the cokernel Z^rows / image.
  std::size_t cokernel_rank = 0;
};

/// Smith normal form by elimination with a minimal-absolute-value pivot.
SnfResult smith_normal_form(const IntMatrix& m);

/// Bareiss fraction-free determinant.
Integer det_exact(const IntMatrix& m);

/// Rank over Q (fraction-free elimination).
std::size_t rank_exact(const IntMatrix& m);

/// det(lambda*Id - m), Faddeev-LeVerrier.
IntPoly char_poly(const IntMatrix& m);

/// Largest k with (x-1)^k | f.
std::size_t root_multiplicity_at_one(const IntPoly& f);

/// Faddeev-LeVerrier over a commutative ring in which division by 1..n is exact on the
/// intermediate traces. Returns ascending coefficients of det(lambda*Id - a). Zero
/// entries of a are skipped, so sparse matrices cost O(nnz * n) per step.
template <class T>
std::vector<T> faddeev_leverrier(const Matrix<T>& a, const T& zero, const T& one) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<T> coeffs(n + 1, zero);
  coeffs[n] = one;
  if (n == 0) return coeffs;

  struct Entry {
    std::size_t row, col;
  };
  std::vector<Entry> nonzero;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(a(i, j))) nonzero.push_back({i, j});

  Matrix<T> m = Matrix<T>::identity(n, zero, one);  // M_1
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> am(n, n, zero);
    for (const Entry& e : nonzero) {
      const T& aij = a(e.row, e.col);
      for (std::size_t c = 0; c < n; ++c)
        if (!is_zero(m(e.col, c))) am(e.row, c) += aij * m(e.col, c);
    }
    T trace = zero;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = divide_exact(-trace, static_cast<long>(k));
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += coeffs[n - k];
    m = std::move(am);
  }
  return coeffs;
}

/// Division-free determinant by dynamic programming over column subsets, O(2^n n)
/// ring multiplications. Intended for the small base-graph matrices over Laurent rings.
template <class T>
T det_subset_expansion(const Matrix<T>& a, const T& zero, const T& one) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n > 20) throw std::length_error("det_subset_expansion: matrix too large");
  std::vector<T> dp(std::size_t(1) << n, zero);
  dp[0] = one;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (is_zero(dp[mask])) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t(1) << j)) continue;
      if (is_zero(a(row, j))) continue;
      const int above = __builtin_popcountll(mask >> (j + 1));
      T term = a(row, j) * dp[mask];
      if (above % 2) dp[mask | (std::size_t(1) << j)] -= term;
      else dp[mask | (std::size_t(1) << j)] += term;
    }
  }
  return dp.back();
}

}  // namespace iwtower
