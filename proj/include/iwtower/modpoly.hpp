#pragma once

#include <cstdint>
#include <vector>

#include "iwtower/bigint.hpp"

namespace iwtower::modpoly {

/// Polynomials over Z/M as ascending coefficient vectors with entries in [0, M), trimmed.
using Poly = std::vector<Integer>;

Poly reduce(const Poly& f, const Integer& m);
Poly add(const Poly& a, const Poly& b, const Integer& m);
Poly sub(const Poly& a, const Poly& b, const Integer& m);
Poly mul(const Poly& a, const Poly& b, const Integer& m);
Poly scale(const Poly& a, const Integer& c, const Integer& m);
long degree(const Poly& f);

/// Division by b whose leading coefficient is a unit mod m.
void divmod(const Poly& a, const Poly& b, const Integer& m, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& b, const Integer& m);
Poly powmod(Poly base, Integer e, const Poly& modulus, const Integer& m);

/// Monic gcd over the prime field F_l.
Poly gcd(Poly a, Poly b, const Integer& l);
Poly make_monic(const Poly& f, const Integer& m);

/// s*a + t*b = 1 over F_l; throws if a and b are not coprime.
void xgcd_unit(const Poly& a, const Poly& b, const Integer& l, Poly& s, Poly& t);

/// Splits a squarefree monic f over F_l whose irreducible factors all have degree k.
/// Probes are drawn from a generator seeded with `seed`; gives up after 64 failed probes.
std::vector<Poly> equal_degree_factor(const Poly& f, std::size_t k, const Integer& l,
                                      std::uint64_t seed);

/// Given f = g*h mod l with h monic and gcd(g, h) = 1 mod l, returns the lift of h
/// that divides f mod l^k (f monic over Z).
Poly hensel_lift_factor(const Poly& f, const Poly& g, const Poly& h, const Integer& l,
                        unsigned long k);

}  // namespace iwtower::modpoly
