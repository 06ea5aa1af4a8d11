#include "iwtower/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "iwtower/modpoly.hpp"

namespace iwtower {

namespace {

std::size_t dim_of(unsigned long p, unsigned n) {
  return static_cast<std::size_t>(phi_prime_power(static_cast<std::int64_t>(p), n));
}

std::int64_t modulus_of(unsigned long p, unsigned n) {
  return ipow64(static_cast<std::int64_t>(p), n);
}

// Reduces v in place modulo Phi_{p^n} and truncates it to phi(p^n) entries.
void reduce_mod_phi(unsigned long p, unsigned n, std::vector<Rational>& v) {
  const std::size_t phi = dim_of(p, n);
  if (n == 0) {
    Rational s = 0;
    for (const auto& c : v) s += c;
    v.assign(1, s);
    return;
  }
  const std::size_t q = static_cast<std::size_t>(modulus_of(p, n - 1));
  // x^phi = -(1 + x^q + ... + x^{(p-2)q}).
  for (std::size_t k = v.size(); k-- > phi;) {
    if (v[k] == 0) continue;
    const Rational c = v[k];
    v[k] = 0;
    for (std::size_t j = 0; j + 1 < p; ++j) v[k - phi + j * q] -= c;
  }
  v.resize(phi, Rational(0));
}

}  // namespace

QPoly cyclotomic_polynomial(unsigned long p, unsigned level) {
  if (level == 0) return QPoly(std::vector<Rational>{Rational(-1), Rational(1)});
  const std::size_t q = static_cast<std::size_t>(modulus_of(p, level - 1));
  std::vector<Rational> c(q * (p - 1) + 1, Rational(0));
  for (std::size_t j = 0; j < p; ++j) c[j * q] = 1;
  return QPoly(std::move(c));
}

// ---- CycloElement ----

CycloElement::CycloElement(unsigned long p, unsigned level)
    : p_(p), n_(level), c_(dim_of(p, level), Rational(0)) {}

CycloElement::CycloElement(unsigned long p, unsigned level, const Rational& c)
    : CycloElement(p, level) {
  c_[0] = c;
}

CycloElement CycloElement::from_coeffs(unsigned long p, unsigned level, std::vector<Rational> coeffs) {
  CycloElement e(p, level);
  reduce_mod_phi(p, level, coeffs);
  e.c_ = std::move(coeffs);
  return e;
}

CycloElement CycloElement::zeta_power(unsigned long p, unsigned level, std::int64_t k) {
  const std::int64_t N = modulus_of(p, level);
  std::vector<Rational> v(static_cast<std::size_t>(mod_floor(k, N)) + 1, Rational(0));
  v.back() = 1;
  return from_coeffs(p, level, std::move(v));
}

bool CycloElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool CycloElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

bool CycloElement::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

void CycloElement::check(const CycloElement& o) const {
  if (p_ != o.p_ || n_ != o.n_)
    throw std::invalid_argument("cyclotomic elements live in different fields");
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  a.check(b);
  const std::size_t n = a.c_.size();
  std::vector<Rational> v(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b.c_[j] != 0) v[i + j] += a.c_[i] * b.c_[j];
  }
  reduce_mod_phi(a.p_, a.n_, v);
  CycloElement r(a.p_, a.n_);
  r.c_ = std::move(v);
  return r;
}

CycloElement& CycloElement::operator*=(const CycloElement& o) { return *this = *this * o; }

CycloElement& CycloElement::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

CycloElement CycloElement::operator-() const {
  CycloElement r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  return a.p_ == b.p_ && a.n_ == b.n_ && a.c_ == b.c_;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
  if (n_ == 0) return CycloElement(p_, 0, 1 / c_[0]);
  const QXgcd g = xgcd(rep(), cyclotomic_polynomial(p_, n_));
  if (g.g.degree() != 0) throw std::logic_error("cyclotomic polynomial is not irreducible?");
  return from_coeffs(p_, n_, g.s.coeffs());
}

CycloElement CycloElement::galois(std::int64_t k) const {
  if (n_ == 0) return *this;
  if (mod_floor(k, static_cast<std::int64_t>(p_)) == 0)
    throw std::invalid_argument("Galois exponent must be prime to p");
  const std::int64_t N = modulus_of(p_, n_);
  std::vector<Rational> v(static_cast<std::size_t>(N), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) v[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) * k, N))] += c_[i];
  return from_coeffs(p_, n_, std::move(v));
}

std::string CycloElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) out << "-";
    first = false;
    const Rational mag = abs(c_[i]);
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i > 0 && mag != 1) out << "*";
    if (i > 0) out << "z";
    if (i > 1) out << "^" << i;
  }
  return first ? "0" : out.str();
}

CycloElement divide_exact(const CycloElement& e, long k) {
  if (k == 0) throw std::domain_error("division by zero");
  return e * Rational(1, k);
}

// ---- Characters and orbits ----

Character Character::trivial(unsigned long p, std::size_t d) {
  Character w;
  w.p = p;
  w.d = d;
  w.level = 0;
  w.exponents.assign(d, 0);
  return w;
}

bool Character::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](auto c) { return c == 0; });
}

unsigned Character::order_level() const {
  if (is_trivial()) return 0;
  unsigned min_v = level;
  const std::int64_t pp = static_cast<std::int64_t>(p);
  for (std::int64_t c : exponents) {
    if (c == 0) continue;
    unsigned v = 0;
    while (c % pp == 0) {
      c /= pp;
      ++v;
    }
    min_v = std::min(min_v, v);
  }
  return level - min_v;
}

Character Character::primitive() const {
  const unsigned m = order_level();
  Character w;
  w.p = p;
  w.d = d;
  w.level = m;
  const std::int64_t shrink = ipow64(static_cast<std::int64_t>(p), level - m);
  for (std::int64_t c : exponents) w.exponents.push_back(c / shrink);
  return w;
}

Character Character::scaled(std::int64_t k) const {
  Character w = *this;
  const std::int64_t N = ipow64(static_cast<std::int64_t>(p), level);
  for (auto& c : w.exponents) c = static_cast<std::int64_t>(mod_floor(static_cast<std::int64_t>((static_cast<__int128>(c) * k) % N), N));
  return w;
}

std::string Character::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) out << (i ? "," : "") << exponents[i];
  out << ")/" << p << "^" << level;
  return out.str();
}

std::vector<Character> all_characters(unsigned long p, std::size_t d, unsigned n) {
  const std::int64_t N = modulus_of(p, n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(N);
  std::vector<Character> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    Character w;
    w.p = p;
    w.d = d;
    w.level = n;
    w.exponents.assign(d, 0);
    std::size_t x = code;
    for (std::size_t i = d; i-- > 0;) {
      w.exponents[i] = static_cast<std::int64_t>(x % static_cast<std::size_t>(N));
      x /= static_cast<std::size_t>(N);
    }
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

std::vector<GaloisOrbit> orbits_under(unsigned long p, std::size_t d, unsigned n, unsigned long l) {
  std::set<std::pair<unsigned, std::vector<std::int64_t>>> seen;
  std::vector<GaloisOrbit> result;
  for (const Character& w : all_characters(p, d, n)) {
    const Character prim = w.primitive();
    if (seen.count({prim.level, prim.exponents})) continue;
    const std::int64_t M = modulus_of(p, prim.level);
    std::vector<std::int64_t> multipliers;
    if (prim.level == 0) {
      multipliers = {1};
    } else if (l == 0) {
      for (std::int64_t k = 1; k < M; ++k)
        if (k % static_cast<std::int64_t>(p) != 0) multipliers.push_back(k);
    } else {
      std::int64_t k = 1;
      do {
        multipliers.push_back(k);
        k = static_cast<std::int64_t>((static_cast<__int128>(k) * static_cast<std::int64_t>(l % M)) % M);
      } while (k != 1);
    }
    Character best = prim;
    for (std::int64_t k : multipliers) {
      Character c = prim.scaled(k);
      seen.insert({c.level, c.exponents});
      if (c.exponents < best.exponents) best = c;
    }
    GaloisOrbit orbit;
    orbit.l = l;
    orbit.level = prim.level;
    orbit.representative = best;
    orbit.orbit_size = multipliers.size();
    orbit.local_degree = multipliers.size();
    result.push_back(std::move(orbit));
  }
  std::sort(result.begin(), result.end(), [](const GaloisOrbit& a, const GaloisOrbit& b) {
    return std::tie(a.level, a.representative.exponents) < std::tie(b.level, b.representative.exponents);
  });
  return result;
}

}  // namespace

std::vector<GaloisOrbit> enumerate_orbits(unsigned long p, std::size_t d, unsigned n, unsigned long l) {
  if (l == p) throw std::invalid_argument("ramified case unsupported here");
  if (!is_prime(static_cast<std::int64_t>(l))) throw std::invalid_argument("l must be prime");
  return orbits_under(p, d, n, l);
}

std::vector<GaloisOrbit> enumerate_rational_orbits(unsigned long p, std::size_t d, unsigned n) {
  return orbits_under(p, d, n, 0);
}

CycloElement char_eval(const LaurentPolyZ& f, const Character& w) {
  if (f.num_vars() != w.d) throw std::invalid_argument("character and polynomial disagree on d");
  const std::int64_t N = modulus_of(w.p, w.level);
  std::vector<Rational> v(static_cast<std::size_t>(N), Rational(0));
  for (const auto& [exps, c] : f.terms()) {
    __int128 s = 0;
    for (std::size_t i = 0; i < w.d; ++i) s = (s + static_cast<__int128>(exps[i]) * w.exponents[i]) % N;
    v[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(s), N))] += Rational(c);
  }
  return CycloElement::from_coeffs(w.p, w.level, std::move(v));
}

Rational norm_to_Q(const CycloElement& e) {
  if (e.level() == 0) return e.coeffs()[0];
  if (e.is_zero()) return 0;
  return resultant(cyclotomic_polynomial(e.p(), e.level()), e.rep());
}

// ---- Local valuations ----

namespace {

struct LocalFactor {
  modpoly::Poly phi;       // Phi_{p^m} over Z
  modpoly::Poly h0;        // chosen factor mod l
  modpoly::Poly cofactor;  // Phi / h0 mod l
};

std::mutex cache_mutex;
std::map<std::tuple<unsigned long, unsigned, unsigned long>, LocalFactor> factor_cache;
std::map<std::tuple<unsigned long, unsigned, unsigned long, unsigned long>, modpoly::Poly> lift_cache;

const LocalFactor& local_factor(unsigned long p, unsigned m, unsigned long l, std::size_t f) {
  const auto key = std::make_tuple(p, m, l);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = factor_cache.find(key);
    if (it != factor_cache.end()) return it->second;
  }
  LocalFactor lf;
  const QPoly phi = cyclotomic_polynomial(p, m);
  for (const auto& c : phi.coeffs()) lf.phi.push_back(c.get_num());
  const Integer L = l;
  const std::uint64_t seed = 0x9e3779b97f4a7c15ULL ^ (p * 1000003ULL + m * 7919ULL + l);
  auto factors = modpoly::equal_degree_factor(lf.phi, f, L, seed);
  lf.h0 = factors.front();
  modpoly::Poly r;
  modpoly::divmod(modpoly::reduce(lf.phi, L), lf.h0, L, lf.cofactor, r);
  if (!r.empty()) throw std::logic_error("factor does not divide the cyclotomic polynomial");
  std::lock_guard<std::mutex> lock(cache_mutex);
  return factor_cache.emplace(key, std::move(lf)).first->second;
}

modpoly::Poly lifted_factor(unsigned long p, unsigned m, unsigned long l, std::size_t f, unsigned long k) {
  const auto key = std::make_tuple(p, m, l, k);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = lift_cache.find(key);
    if (it != lift_cache.end()) return it->second;
  }
  const LocalFactor& lf = local_factor(p, m, l, f);
  modpoly::Poly h = modpoly::hensel_lift_factor(lf.phi, lf.cofactor, lf.h0, Integer(l), k);
  std::lock_guard<std::mutex> lock(cache_mutex);
  lift_cache.emplace(key, h);
  return h;
}

// Smallest k with l^k >= x (x >= 1).
unsigned long ceil_log(const Integer& x, unsigned long l) {
  unsigned long k = 0;
  Integer acc = 1;
  while (acc < x) {
    acc *= l;
    ++k;
  }
  return k;
}

// v_l(Res(h, e)) truncated at k, where h lifts the factor to l^k.
long valuation_at_precision(const std::vector<Rational>& e, unsigned long p, unsigned m, unsigned long l,
                            std::size_t f, unsigned long k) {
  const modpoly::Poly h = lifted_factor(p, m, l, f, k);
  const Rational res = resultant(QPoly::from_integers(h), QPoly(e));
  if (res == 0) return static_cast<long>(k);
  return std::min(valuation(res, l), static_cast<long>(k));
}

}  // namespace

long local_valuation(const CycloElement& e, unsigned long l, const GaloisOrbit& orbit,
                     std::optional<unsigned long> precision) {
  if (l == e.p()) throw std::domain_error("ramified case unsupported here");
  if (e.is_zero()) throw std::domain_error("infinite valuation");
  if (e.level() != orbit.level || e.p() != orbit.representative.p)
    throw std::invalid_argument("element is not evaluated at the orbit's level");
  if (e.level() == 0) return valuation(e.coeffs()[0], l);

  // Clear denominators: the denominator is a rational integer, whose ord is its l-adic valuation.
  const Integer den = e.rep().common_denominator();
  std::vector<Rational> num = e.coeffs();
  for (auto& c : num) c *= den;
  const long den_val = den == 1 ? 0 : valuation(den, l);

  const unsigned m = e.level();
  const std::size_t f = static_cast<std::size_t>(
      multiplicative_order(static_cast<std::int64_t>(l), ipow64(static_cast<std::int64_t>(e.p()), m)));

  auto to_ord = [&](long v) {
    if (v % static_cast<long>(f) != 0)
      throw std::logic_error("local valuation: resultant valuation not divisible by the local degree");
    return v / static_cast<long>(f) - den_val;
  };

  if (precision) return to_ord(valuation_at_precision(num, e.p(), m, l, f, *precision));

  // |N(e)| <= (sum |c_i|)^phi bounds the valuation of every local component.
  Integer l1 = 0;
  for (const auto& c : num) l1 += abs(c.get_num());
  const unsigned long k0 = 20 + ceil_log(l1, l) * e.dim();
  unsigned long k = k0;
  long prev = valuation_at_precision(num, e.p(), m, l, f, k);
  for (int round = 0; round < 16; ++round) {
    k *= 2;
    const long cur = valuation_at_precision(num, e.p(), m, l, f, k);
    if (cur == prev && cur < static_cast<long>(k / 2)) return to_ord(cur);
    prev = cur;
  }
  throw std::runtime_error("local valuation: precision did not stabilize");
}

// ---- CycloPoly ----

CycloPoly::CycloPoly(unsigned long p, unsigned level, std::vector<CycloElement> coeffs)
    : p_(p), n_(level), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.p() != p_ || c.level() != n_) throw std::invalid_argument("CycloPoly coefficient field mismatch");
  trim();
}

void CycloPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloElement CycloPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : CycloElement(p_, n_);
}

CycloElement CycloPoly::operator()(const CycloElement& u) const {
  CycloElement acc(p_, n_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

CycloElement CycloPoly::operator()(const Rational& u) const {
  CycloElement acc(p_, n_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= u;
    acc += *it;
  }
  return acc;
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
  if (a.p_ != b.p_ || a.n_ != b.n_) throw std::invalid_argument("CycloPoly field mismatch");
  if (a.is_zero() || b.is_zero()) return CycloPoly(a.p_, a.n_);
  std::vector<CycloElement> v(a.c_.size() + b.c_.size() - 1, CycloElement(a.p_, a.n_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return CycloPoly(a.p_, a.n_, std::move(v));
}

CycloPoly CycloPoly::galois(std::int64_t k) const {
  std::vector<CycloElement> v;
  for (const auto& c : c_) v.push_back(c.galois(k));
  return CycloPoly(p_, n_, std::move(v));
}

std::size_t root_multiplicity_at_one(const CycloPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
  std::vector<CycloElement> c = f.coeffs();
  std::size_t k = 0;
  for (;;) {
    if (c.size() == 1) return k;
    std::vector<CycloElement> q(c.size() - 1, CycloElement(f.p(), f.level()));
    CycloElement acc(f.p(), f.level());
    for (std::size_t i = c.size(); i-- > 0;) {
      acc += c[i];
      if (i > 0) q[i - 1] = acc;
    }
    if (!acc.is_zero()) return k;
    c = std::move(q);
    ++k;
  }
}

IntPoly orbit_norm(const CycloPoly& f) {
  if (f.is_zero()) return IntPoly();
  const std::size_t phi = dim_of(f.p(), f.level());
  const std::size_t bound = static_cast<std::size_t>(f.degree()) * phi;
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= bound; ++i) {
    xs.emplace_back(static_cast<long>(i));
    ys.push_back(norm_to_Q(f(Rational(static_cast<long>(i)))));
  }
  const QPoly q = interpolate(xs, ys);
  std::vector<Integer> out;
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) throw std::logic_error("orbit norm is not integral");
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

std::size_t rank(const Matrix<CycloElement>& input) {
  Matrix<CycloElement> a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    a.swap_rows(r, piv);
    const CycloElement inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const CycloElement factor = a(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace iwtower
