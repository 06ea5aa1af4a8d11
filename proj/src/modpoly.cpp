#include "iwtower/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace iwtower::modpoly {

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse(const Integer& x, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("modpoly: leading coefficient not invertible");
  return r;
}

}  // namespace

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly reduce(const Poly& f, const Integer& m) {
  Poly r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(mod(c, m));
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Integer& m) {
  Poly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(r, m);
}

Poly sub(const Poly& a, const Poly& b, const Integer& m) {
  Poly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(r, m);
}

Poly mul(const Poly& a, const Poly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(r, m);
}

Poly scale(const Poly& a, const Integer& c, const Integer& m) {
  Poly r = a;
  for (auto& x : r) x *= c;
  return reduce(r, m);
}

void divmod(const Poly& a, const Poly& b, const Integer& m, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("modpoly: division by zero");
  r = reduce(a, m);
  const std::size_t db = b.size() - 1;
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - db, Integer(0));
  const Integer inv = inverse(b.back(), m);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Integer factor = mod(r[k] * inv, m);
    q[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = mod(r[k - db + j] - factor * b[j], m);
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Poly rem(const Poly& a, const Poly& b, const Integer& m) {
  Poly q, r;
  divmod(a, b, m, q, r);
  return r;
}

Poly powmod(Poly base, Integer e, const Poly& modulus, const Integer& m) {
  Poly result{Integer(1)};
  result = rem(result, modulus, m);
  base = rem(base, modulus, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base, m), modulus, m);
    e >>= 1;
    if (e > 0) base = rem(mul(base, base, m), modulus, m);
  }
  return result;
}

Poly make_monic(const Poly& f, const Integer& m) {
  if (f.empty()) return f;
  return scale(f, inverse(f.back(), m), m);
}

Poly gcd(Poly a, Poly b, const Integer& l) {
  a = reduce(a, l);
  b = reduce(b, l);
  while (!b.empty()) {
    Poly r = rem(a, b, l);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, l);
}

void xgcd_unit(const Poly& a, const Poly& b, const Integer& l, Poly& s, Poly& t) {
  Poly r0 = reduce(a, l), r1 = reduce(b, l);
  Poly s0{Integer(1)}, s1, t0, t1{Integer(1)};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, l, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, l), l);
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(t0, mul(q, t1, l), l);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::domain_error("modpoly: factors are not coprime");
  const Integer inv = inverse(r0[0], l);
  s = scale(s0, inv, l);
  t = scale(t0, inv, l);
}

std::vector<Poly> equal_degree_factor(const Poly& f0, std::size_t k, const Integer& l,
                                      std::uint64_t seed) {
  const Poly f = make_monic(reduce(f0, l), l);
  const std::size_t n = static_cast<std::size_t>(degree(f));
  if (k == 0 || n % k != 0) throw std::invalid_argument("equal_degree_factor: degree mismatch");
  if (n == k) return {f};

  std::mt19937_64 rng(seed);
  const Integer qk = ipow(l, static_cast<unsigned long>(k));
  const bool even_char = l == 2;
  std::vector<Poly> pending{f}, done;
  int failures = 0;
  while (!pending.empty()) {
    Poly g = pending.back();
    pending.pop_back();
    const std::size_t dg = static_cast<std::size_t>(degree(g));
    if (dg == k) {
      done.push_back(g);
      continue;
    }
    for (;;) {
      if (failures >= 64) throw std::runtime_error("equal_degree_factor: retry cap reached");
      Poly probe(dg, Integer(0));
      for (auto& c : probe) {
        Integer r;
        const unsigned long long x = rng();
        mpz_import(r.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
        c = mod(r, l);
      }
      trim(probe);
      if (degree(probe) < 1) {
        ++failures;
        continue;
      }
      Poly w;
      if (even_char) {
        // Trace map to F_2: w = probe + probe^2 + ... + probe^(2^(k-1)).
        Poly term = rem(probe, g, l);
        w = term;
        for (std::size_t i = 1; i < k; ++i) {
          term = rem(mul(term, term, l), g, l);
          w = add(w, term, l);
        }
      } else {
        w = powmod(probe, (qk - 1) / 2, g, l);
        w = sub(w, Poly{Integer(1)}, l);
      }
      Poly h = gcd(g, w, l);
      const long dh = degree(h);
      if (dh > 0 && dh < static_cast<long>(dg)) {
        Poly q, r;
        divmod(g, h, l, q, r);
        pending.push_back(h);
        pending.push_back(make_monic(q, l));
        break;
      }
      ++failures;
    }
  }
  std::sort(done.begin(), done.end());
  return done;
}

Poly hensel_lift_factor(const Poly& f, const Poly& g0, const Poly& h0, const Integer& l,
                        unsigned long k) {
  Poly s, t;
  xgcd_unit(g0, h0, l, s, t);
  Poly g = reduce(g0, l), h = reduce(h0, l);
  Integer m = l;
  unsigned long prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    const Integer m2 = ipow(l, prec);
    // Quadratic Hensel step with h monic; see von zur Gathen and Gerhard, Alg. 15.10.
    Poly e = sub(f, mul(g, h, m2), m2);
    Poly q, r;
    divmod(mul(s, e, m2), h, m2, q, r);
    Poly g_new = add(add(g, mul(t, e, m2), m2), mul(q, g, m2), m2);
    Poly h_new = add(h, r, m2);
    Poly b = sub(add(mul(s, g_new, m2), mul(t, h_new, m2), m2), Poly{Integer(1)}, m2);
    Poly c, dpoly;
    divmod(mul(s, b, m2), h_new, m2, c, dpoly);
    s = sub(s, dpoly, m2);
    t = sub(sub(t, mul(t, b, m2), m2), mul(c, g_new, m2), m2);
    g = std::move(g_new);
    h = std::move(h_new);
    m = m2;
  }
  return h;
}

}  // namespace iwtower::modpoly
