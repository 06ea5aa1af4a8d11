#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace iwtower {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest k with prime^k dividing n. n must be nonzero.
long valuation(const Integer& n, unsigned long prime);

/// Valuation of a nonzero rational: v(num) - v(den).
long valuation(const Rational& q, unsigned long prime);

Integer ipow(const Integer& base, unsigned long exp);
std::int64_t ipow64(std::int64_t base, unsigned exp);

/// Euler totient of p^n.
std::int64_t phi_prime_power(std::int64_t p, unsigned n);

bool is_prime(std::int64_t n);

/// Least positive k with base^k = 1 mod modulus. Requires gcd(base, modulus) = 1.
std::int64_t multiplicative_order(std::int64_t base, std::int64_t modulus);

/// Non-negative residue of a mod m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s);
Integer parse_integer(const std::string& s);

}  // namespace iwtower
