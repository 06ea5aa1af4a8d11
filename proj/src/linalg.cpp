#include "iwtower/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace iwtower {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly IntPoly::reversed(std::size_t formal_degree) const {
  if (degree() > static_cast<long>(formal_degree))
    throw std::invalid_argument("reversed: formal degree below actual degree");
  std::vector<Integer> v(formal_degree + 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[formal_degree - i] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k > 0) out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

SnfResult smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t limit = std::min(rows, cols);
  std::size_t t = 0;

  auto place_min_pivot = [&](std::size_t t0) -> bool {
    std::size_t bi = rows, bj = cols;
    Integer best;
    for (std::size_t i = t0; i < rows; ++i)
      for (std::size_t j = t0; j < cols; ++j) {
        const Integer& x = a(i, j);
        if (x == 0) continue;
        if (bi == rows || abs(x) < best) {
          best = abs(x);
          bi = i;
          bj = j;
          if (best == 1) goto found;
        }
      }
  found:
    if (bi == rows) return false;
    a.swap_rows(t0, bi);
    a.swap_cols(t0, bj);
    return true;
  };

  Integer q;
  for (; t < limit; ++t) {
    if (!place_min_pivot(t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j)
            if (a(t, j) != 0) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i)
            if (a(i, t) != 0) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (clean) break;
      // Remainders are strictly smaller than the pivot: move the smallest one into place.
      std::size_t bi = t, bj = t;
      Integer best = abs(a(t, t));
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a(i, t) != 0 && abs(a(i, t)) < best) {
          best = abs(a(i, t));
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(t, j) != 0 && abs(a(t, j)) < best) {
          best = abs(a(t, j));
          bi = t;
          bj = j;
        }
      a.swap_rows(t, bi);
      a.swap_cols(t, bj);
    }
  }

  SnfResult result;
  result.rank = t;
  result.cokernel_rank = rows - t;
  std::vector<Integer> d;
  d.reserve(t);
  for (std::size_t i = 0; i < t; ++i) d.push_back(abs(a(i, i)));
  Integer g;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[j] = d[i] / g * d[j];
      d[i] = g;
    }
  result.invariant_factors = std::move(d);
  return result;
}

Integer det_exact(const IntMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Integer(-a(n - 1, n - 1));
}

std::size_t rank_exact(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

IntPoly char_poly(const IntMatrix& m) {
  return IntPoly(faddeev_leverrier(m, Integer(0), Integer(1)));
}

std::size_t root_multiplicity_at_one(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
  std::vector<Integer> c = f.coeffs();
  std::size_t k = 0;
  for (;;) {
    // Synthetic division by (x - 1): the remainder is f(1).
    std::vector<Integer> q(c.size() - 1, Integer(0));
    Integer acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc += c[i];
      if (i > 0) q[i - 1] = acc;
    }
    if (acc != 0 || c.size() == 1) return k;
    c = std::move(q);
    ++k;
  }
}

}  // namespace iwtower
