#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwtower/bigint.hpp"
#include "iwtower/laurent.hpp"
#include "iwtower/linalg.hpp"
#include "iwtower/matrix.hpp"
#include "iwtower/qpoly.hpp"

namespace iwtower {

/// Element of Q(zeta_{p^n}) stored as its residue modulo Phi_{p^n}(x); zeta is the class of x.
/// Level 0 is Q itself (one coefficient).
class CycloElement {
 public:
  CycloElement() : CycloElement(2, 0) {}
  CycloElement(unsigned long p, unsigned level);
  CycloElement(unsigned long p, unsigned level, const Rational& c);
  /// Reduces an arbitrary-length coefficient list modulo Phi_{p^n}.
  static CycloElement from_coeffs(unsigned long p, unsigned level, std::vector<Rational> coeffs);
  static CycloElement zeta_power(unsigned long p, unsigned level, std::int64_t k);

  unsigned long p() const noexcept { return p_; }
  unsigned level() const noexcept { return n_; }
  /// phi(p^n), the length of the coefficient vector.
  std::size_t dim() const noexcept { return c_.size(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;
  QPoly rep() const { return QPoly(c_); }

  CycloElement& operator+=(const CycloElement& o);
  CycloElement& operator-=(const CycloElement& o);
  CycloElement& operator*=(const CycloElement& o);
  CycloElement& operator*=(const Rational& c);
  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(CycloElement a, const Rational& c) { return a *= c; }
  CycloElement operator-() const;
  friend bool operator==(const CycloElement& a, const CycloElement& b);

  /// Multiplicative inverse via the extended Euclidean algorithm; throws on zero.
  CycloElement inverse() const;
  /// Galois action zeta -> zeta^k for k prime to p.
  CycloElement galois(std::int64_t k) const;

  std::string to_string() const;

 private:
  void check(const CycloElement& o) const;
  unsigned long p_;
  unsigned n_;
  std::vector<Rational> c_;
};

inline bool is_zero(const CycloElement& e) { return e.is_zero(); }
CycloElement divide_exact(const CycloElement& e, long k);

/// Phi_{p^n}(x) as a polynomial over Q.
QPoly cyclotomic_polynomial(unsigned long p, unsigned level);

/// Character of (Z/p^n)^d sending T_i to zeta_{p^n}^{c_i}.
struct Character {
  unsigned long p = 2;
  std::size_t d = 1;
  unsigned level = 0;
  std::vector<std::int64_t> exponents;  // residues in [0, p^n)

  static Character trivial(unsigned long p, std::size_t d);
  bool is_trivial() const;
  /// m with order(omega) = p^m.
  unsigned order_level() const;
  /// The same character written at its order level.
  Character primitive() const;
  /// Exponents multiplied by k modulo p^level.
  Character scaled(std::int64_t k) const;
  std::string to_string() const;
  friend bool operator==(const Character& a, const Character& b) {
    return a.p == b.p && a.d == b.d && a.level == b.level && a.exponents == b.exponents;
  }
};

/// One orbit of characters under the decomposition group of l (l > 0), or under the full
/// Galois group of Q(zeta) when l == 0. The representative is written at its order level.
struct GaloisOrbit {
  unsigned long l = 0;
  unsigned level = 0;
  Character representative;
  std::size_t orbit_size = 1;
  std::size_t local_degree = 1;  // order of l mod p^level (phi(p^level) when l == 0)
};

/// Sum over terms of coeff * zeta^(c . exps), reduced at w.level.
CycloElement char_eval(const LaurentPolyZ& f, const Character& w);

/// Product of all conjugates of e as a resultant with Phi_{p^n}.
Rational norm_to_Q(const CycloElement& e);

/// G_{Q_l}-orbits of the characters of (Z/p^n)^d; l must differ from p.
std::vector<GaloisOrbit> enumerate_orbits(unsigned long p, std::size_t d, unsigned n, unsigned long l);
/// G_Q-orbits, i.e. the rational classes of characters of (Z/p^n)^d.
std::vector<GaloisOrbit> enumerate_rational_orbits(unsigned long p, std::size_t d, unsigned n);
/// Every character of (Z/p^n)^d at level n, in mixed-radix order.
std::vector<Character> all_characters(unsigned long p, std::size_t d, unsigned n);

/**
 * ord_l of e in the unramified local component indexed by the orbit.
 *
 * e must be the evaluation at the orbit representative (so e.level() == orbit.level). The
 * component is the one cut out by the lexicographically least monic factor of Phi_{p^m} mod l,
 * lifted to Z/l^K. K starts from 20 plus a bound on log_l |N(e)| and doubles until two
 * consecutive answers agree; `precision` forces a single fixed K instead.
 */
long local_valuation(const CycloElement& e, unsigned long l, const GaloisOrbit& orbit,
                     std::optional<unsigned long> precision = std::nullopt);

/// Polynomial in u with coefficients in Q(zeta_{p^n}).
class CycloPoly {
 public:
  CycloPoly(unsigned long p, unsigned level) : p_(p), n_(level) {}
  CycloPoly(unsigned long p, unsigned level, std::vector<CycloElement> coeffs);

  unsigned long p() const noexcept { return p_; }
  unsigned level() const noexcept { return n_; }
  const std::vector<CycloElement>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  CycloElement coeff(std::size_t i) const;
  CycloElement operator()(const CycloElement& u) const;
  CycloElement operator()(const Rational& u) const;

  friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);
  friend bool operator==(const CycloPoly& a, const CycloPoly& b) { return a.c_ == b.c_; }

  /// Coefficientwise Galois action.
  CycloPoly galois(std::int64_t k) const;

 private:
  void trim();
  unsigned long p_;
  unsigned n_;
  std::vector<CycloElement> c_;
};

/// Largest k with (u - 1)^k | f over Q(zeta).
std::size_t root_multiplicity_at_one(const CycloPoly& f);

/// Res_x(Phi_{p^n}(x), P(x, u)) as an integer polynomial in u (product over all conjugates).
/// Throws if the result is not integral.
IntPoly orbit_norm(const CycloPoly& f);

/// Rank over Q(zeta) by Gaussian elimination.
std::size_t rank(const Matrix<CycloElement>& m);

}  // namespace iwtower
