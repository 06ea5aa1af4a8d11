#include "iwtower/groups.hpp"

#include <sstream>
#include <stdexcept>

namespace iwtower {

Integer AbGroupPresentation::torsion_size() const {
  Integer s = 1;
  for (const auto& d : torsion_factors) s *= d;
  return s;
}

long AbGroupPresentation::torsion_valuation(unsigned long l) const {
  long v = 0;
  for (const auto& d : torsion_factors) v += valuation(d, l);
  return v;
}

std::string AbGroupPresentation::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion_factors) {
    out << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  return first ? "0" : out.str();
}

AbGroupPresentation cokernel(const IntMatrix& m) {
  const SnfResult snf = smith_normal_form(m);
  AbGroupPresentation g;
  g.free_rank = snf.cokernel_rank;
  for (const auto& d : snf.invariant_factors)
    if (d != 1) g.torsion_factors.push_back(d);
  return g;
}

const char* to_string(GroupKind k) { return k == GroupKind::picard ? "pic" : "bf"; }

IntMatrix relation_matrix(const Digraph& x, GroupKind which) {
  const IntMatrix a = adjacency_matrix(x);
  if (which == GroupKind::picard) return degree_matrix(x) - a;
  return IntMatrix::identity(x.vertex_count(), Integer(0), Integer(1)) - a;
}

AbGroupPresentation picard_group(const Digraph& x) {
  AbGroupPresentation g = cokernel(relation_matrix(x, GroupKind::picard));
  if (g.free_rank != connectivity(x).reach_count)
    throw std::logic_error("Picard rank differs from the number of reaches");
  return g;
}

AbGroupPresentation bowen_franks_group(const Digraph& x) { return cokernel(relation_matrix(x, GroupKind::bowen_franks)); }

IntMatrix level_relation_matrix(const Digraph& x, const VoltageAssignment& a, unsigned n, GroupKind which) {
  a.validate(x);
  const LevelGroup G(a.p, a.d, n);
  const std::size_t N = G.order, size = x.vertex_count() * N;
  IntMatrix m(size, size, Integer(0));
  for (std::size_t v = 0; v < x.vertex_count(); ++v)
    for (std::size_t g = 0; g < N; ++g) {
      const std::size_t i = v * N + g;
      m(i, i) = which == GroupKind::picard ? Integer(static_cast<unsigned long>(x.out_degree(v))) : Integer(1);
    }
  for (const Edge& e : x.edges())
    for (std::size_t g = 0; g < N; ++g) m(e.dst * N + G.shift(g, a.values[e.id]), e.src * N + g) -= 1;
  return m;
}

AbGroupPresentation level_groups(const Digraph& x, const VoltageAssignment& a, unsigned n, GroupKind which,
                                 std::size_t budget) {
  check_budget(x, a.p, a.d, n, budget);
  const IntMatrix m = level_relation_matrix(x, a, n, which);
  const Digraph derived = derived_digraph(x, a, n).derived;
  if (!(m == relation_matrix(derived, which)))
    throw std::logic_error("blockwise level matrix disagrees with the derived digraph");
  AbGroupPresentation g = cokernel(m);
  if (which == GroupKind::picard && g.free_rank != connectivity(derived).reach_count)
    throw std::logic_error("Picard rank differs from the number of reaches");
  return g;
}

bool control_check(const Digraph& x, const VoltageAssignment& a, unsigned m, unsigned n, GroupKind which,
                   std::size_t budget) {
  if (m < n) throw std::invalid_argument("control_check needs m >= n");
  check_budget(x, a.p, a.d, m, budget);
  const IntMatrix big = level_relation_matrix(x, a, m, which);
  const LevelGroup G(a.p, a.d, m);
  const std::size_t rows = big.rows();
  // One column (gamma_i^{p^n} - 1) b for every generator i and basis vector b.
  const std::size_t extra = m == n ? 0 : rows * a.d;
  IntMatrix aug(rows, rows + extra, Integer(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) aug(i, j) = big(i, j);
  if (extra) {
    const std::int64_t step = ipow64(static_cast<std::int64_t>(a.p), n);
    std::size_t col = rows;
    for (std::size_t gen = 0; gen < a.d; ++gen) {
      ExponentVector h(a.d, 0);
      h[gen] = step;
      for (std::size_t v = 0; v < x.vertex_count(); ++v)
        for (std::size_t g = 0; g < G.order; ++g, ++col) {
          aug(v * G.order + G.shift(g, h), col) += 1;
          aug(v * G.order + g, col) -= 1;
        }
    }
  }
  return cokernel(aug) == cokernel(level_relation_matrix(x, a, n, which));
}

}  // namespace iwtower
