#include "gkz/labeled.hpp"

namespace gkz {

CMat specialize(const GMat& m, const std::vector<Cplx>& h) {
  for (const auto& z : h)
    if (std::abs(z) == 0) throw ZeroCoordinate("specialization point has a zero coordinate");
  RingOps<Cplx> ops;
  CMat r(m.row_labels(), m.col_labels(), ops);
  for (size_t i = 0; i < m.nrows(); ++i)
    for (size_t j = 0; j < m.ncols(); ++j) r.at(i, j) = m.at(i, j).eval(h);
  return r;
}

CMat specialize_alpha(const GMat& m, const std::vector<Cplx>& alpha) {
  RingOps<Cplx> ops;
  CMat r(m.row_labels(), m.col_labels(), ops);
  for (size_t i = 0; i < m.nrows(); ++i)
    for (size_t j = 0; j < m.ncols(); ++j) r.at(i, j) = m.at(i, j).eval_alpha(alpha);
  return r;
}

GroupRingElement det(const GMat& m) {
  if (m.nrows() != m.ncols()) throw ShapeMismatch("det of non-square matrix");
  std::vector<std::vector<GroupRingElement>> rows(m.nrows(),
                                                  std::vector<GroupRingElement>(m.ncols()));
  for (size_t i = 0; i < m.nrows(); ++i)
    for (size_t j = 0; j < m.ncols(); ++j) rows[i][j] = m.at(i, j);
  return det(rows);
}

Cplx det(const CMat& m) {
  if (m.nrows() != m.ncols()) throw ShapeMismatch("det of non-square matrix");
  size_t n = m.nrows();
  std::vector<std::vector<Cplx>> a(n, std::vector<Cplx>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  Cplx d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t i = c + 1; i < n; ++i)
      if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
    if (std::abs(a[piv][c]) == 0) return 0;
    if (piv != c) { std::swap(a[piv], a[c]); d = -d; }
    d *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      Cplx f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

}  // namespace gkz
