#include "iwtower/bigint.hpp"

#include <numeric>
#include <stdexcept>

namespace iwtower {

long valuation(const Integer& n, unsigned long prime) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), prime)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), prime);
    ++v;
  }
  return v;
}

long valuation(const Rational& q, unsigned long prime) {
  return valuation(Integer(q.get_num()), prime) - valuation(Integer(q.get_den()), prime);
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::int64_t ipow64(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t phi_prime_power(std::int64_t p, unsigned n) {
  if (n == 0) return 1;
  return ipow64(p, n - 1) * (p - 1);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::int64_t multiplicative_order(std::int64_t base, std::int64_t modulus) {
  if (modulus == 1) return 1;
  if (std::gcd(mod_floor(base, modulus), modulus) != 1)
    throw std::domain_error("multiplicative_order: base not a unit");
  std::int64_t b = mod_floor(base, modulus);
  std::int64_t x = b;
  std::int64_t k = 1;
  while (x != 1) {
    x = (x * b) % modulus;
    ++k;
  }
  return k;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  q.canonicalize();
  return q;
}

Integer parse_integer(const std::string& s) {
  Integer z;
  if (z.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
  return z;
}

}  // namespace iwtower
