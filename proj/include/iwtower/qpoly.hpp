#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "iwtower/bigint.hpp"

namespace iwtower {

/// Dense univariate polynomial over Q, ascending coefficients, trimmed.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }
  static QPoly monomial(std::size_t degree, const Rational& c = 1);
  static QPoly from_integers(const std::vector<Integer>& coeffs);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  Rational operator()(const Rational& x) const;

  QPoly monic() const;
  /// Positive lcm of coefficient denominators (1 for the zero polynomial).
  Integer common_denominator() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const Rational& c);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);

struct QXgcd {
  QPoly g, s, t;  // s*a + t*b = g, g monic
};
QXgcd xgcd(const QPoly& a, const QPoly& b);

/// Res(a, b) = lc(a)^deg(b) * prod_{a(x)=0} b(x).
Rational resultant(const QPoly& a, const QPoly& b);

/// Newton interpolation through (xs[i], ys[i]); xs distinct.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace iwtower
