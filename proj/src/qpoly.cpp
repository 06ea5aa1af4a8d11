#include "iwtower/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace iwtower {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * Rational(1 / c_.back());
}

Integer QPoly::common_denominator() const {
  Integer den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  return den;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const Rational& c) {
  if (c == 0) return QPoly();
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

std::string QPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[k].get_str() << ")";
    if (k > 0) out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> q(r.size() - db, Rational(0));
  const Rational inv_lead = 1 / b.leading();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Rational factor = r[k] * inv_lead;
    q[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= factor * b.coeffs()[j];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QXgcd xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
  const Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Rational resultant(const QPoly& a0, const QPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  QPoly a = a0, b = b0;
  Rational acc = 1;
  for (;;) {
    const long da = a.degree(), db = b.degree();
    if (db == 0) {
      Rational p = 1;
      for (long i = 0; i < da; ++i) p *= b.leading();
      return acc * p;
    }
    if (da == 0) {
      Rational p = 1;
      for (long i = 0; i < db; ++i) p *= a.leading();
      return acc * p;
    }
    // Res(a,b) = (-1)^{da*db} lc(b)^{da - deg r} Res(b, r), r = a mod b.
    QPoly r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    if ((da * db) % 2) acc = -acc;
    for (long i = 0; i < da - r.degree(); ++i) acc *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      if (xs[i] == xs[i - k]) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
    }
  QPoly result;
  for (std::size_t k = n; k-- > 0;) {
    // Horner on the Newton form: result = result * (x - xs[k]) + dd[k].
    result = result * QPoly(std::vector<Rational>{-xs[k], Rational(1)}) + QPoly::constant(dd[k]);
  }
  return result;
}

}  // namespace iwtower
