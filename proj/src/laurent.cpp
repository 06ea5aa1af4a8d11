#include "iwtower/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace iwtower {

LaurentPolyZ LaurentPolyZ::constant(std::size_t d, const Integer& c) {
  LaurentPolyZ f(d);
  f.add_term(ExponentVector(d, 0), c);
  return f;
}

LaurentPolyZ LaurentPolyZ::monomial(const ExponentVector& exps, const Integer& c) {
  LaurentPolyZ f(exps.size());
  f.add_term(exps, c);
  return f;
}

LaurentPolyZ LaurentPolyZ::variable(std::size_t d, std::size_t i) {
  if (i >= d) throw std::out_of_range("LaurentPolyZ::variable index");
  ExponentVector e(d, 0);
  e[i] = 1;
  return monomial(e);
}

Integer LaurentPolyZ::coeff(const ExponentVector& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolyZ::add_term(const ExponentVector& exps, const Integer& c) {
  if (exps.size() != d_) throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPolyZ::augmentation() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

ExponentVector LaurentPolyZ::min_exponents() const {
  if (terms_.empty()) throw std::domain_error("min_exponents of zero polynomial");
  ExponentVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < d_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

LaurentPolyZ LaurentPolyZ::shifted(const ExponentVector& shift) const {
  if (shift.size() != d_) throw std::invalid_argument("shift length mismatch");
  LaurentPolyZ r(d_);
  for (const auto& [e, c] : terms_) {
    ExponentVector x = e;
    for (std::size_t i = 0; i < d_; ++i) x[i] += shift[i];
    r.terms_.emplace(std::move(x), c);
  }
  return r;
}

void LaurentPolyZ::check_compatible(const LaurentPolyZ& o) const {
  if (d_ != o.d_) throw std::invalid_argument("Laurent polynomials in different variable counts");
}

LaurentPolyZ& LaurentPolyZ::operator+=(const LaurentPolyZ& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolyZ& LaurentPolyZ::operator-=(const LaurentPolyZ& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolyZ operator*(const LaurentPolyZ& a, const LaurentPolyZ& b) {
  a.check_compatible(b);
  LaurentPolyZ r(a.d_);
  ExponentVector x(a.d_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.d_; ++i) x[i] = ea[i] + eb[i];
      r.add_term(x, ca * cb);
    }
  return r;
}

LaurentPolyZ& LaurentPolyZ::operator*=(const LaurentPolyZ& o) { return *this = *this * o; }

LaurentPolyZ& LaurentPolyZ::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPolyZ LaurentPolyZ::operator-() const {
  LaurentPolyZ r = *this;
  for (auto& [e, x] : r.terms_) x = -x;
  return r;
}

std::string LaurentPolyZ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant_term = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    Integer mag = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    if (constant_term || mag != 1) out << mag.get_str();
    bool need_sep = !constant_term && mag != 1;
    for (std::size_t i = 0; i < d_; ++i) {
      if (e[i] == 0) continue;
      if (need_sep) out << "*";
      out << (d_ == 1 ? std::string("T") : "T" + std::to_string(i + 1));
      if (e[i] != 1) out << "^" << e[i];
      need_sep = true;
    }
  }
  return out.str();
}

LaurentPolyZ divide_exact(const LaurentPolyZ& f, long k) {
  LaurentPolyZ r(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k)))
      throw std::logic_error("divide_exact: Laurent coefficient not divisible");
    Integer q = c / k;
    r.add_term(e, q);
  }
  return r;
}

}  // namespace iwtower
