#include "gkz/intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace gkz {

std::string label_str(const Label& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  size_t r = rows.size(), c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeMismatch("ragged row list");
    for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape");
  IntMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

VecI IntMatrix::mul(const VecI& v) const {
  if (cols_ != v.size()) throw ShapeMismatch("matrix-vector shape");
  VecI r(rows_, Int(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

VecI IntMatrix::mul_left(const VecI& v) const {
  if (rows_ != v.size()) throw ShapeMismatch("vector-matrix shape");
  VecI r(cols_, Int(0));
  for (size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < cols_; ++j) r[j] += v[i] * at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::row_slice(size_t r0, size_t r1) const {
  IntMatrix r(r1 - r0, cols_);
  for (size_t i = r0; i < r1; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i - r0, j) = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : e_) if (x != 0) return false;
  return true;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

std::vector<long> IntMatrix::row_i64(size_t i) const {
  std::vector<long> r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = to_i64(at(i, j));
  return r;
}

Label IntMatrix::col_label(size_t j) const {
  Label r(rows_);
  for (size_t i = 0; i < rows_; ++i) r[i] = to_i64(at(i, j));
  return r;
}

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, size_t a) {
  for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

// row[a] <- p*row[a] + q*row[b]; row[b] <- r*row[a0] + s*row[b0]
void combine_rows(IntMatrix& m, size_t a, size_t b, const Int& p, const Int& q, const Int& r, const Int& s) {
  for (size_t j = 0; j < m.cols(); ++j) {
    Int ma = m.at(a, j), mb = m.at(b, j);
    m.at(a, j) = p * ma + q * mb;
    m.at(b, j) = r * ma + s * mb;
  }
}

void combine_cols(IntMatrix& m, size_t a, size_t b, const Int& p, const Int& q, const Int& r, const Int& s) {
  for (size_t i = 0; i < m.rows(); ++i) {
    Int ma = m.at(i, a), mb = m.at(i, b);
    m.at(i, a) = p * ma + q * mb;
    m.at(i, b) = r * ma + s * mb;
  }
}

void addmul_row(IntMatrix& m, size_t dst, size_t src, const Int& c) {
  if (c == 0) return;
  for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
}

struct XGcd {
  Int g, p, q;  // g = p*a + q*b
};

XGcd xgcd(const Int& a, const Int& b) {
  XGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.p.get_mpz_t(), r.q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// eliminate m(i, col) against the pivot m(piv, col) with a unimodular pair
// of row operations applied to both m and u
void row_gcd_step(IntMatrix& m, IntMatrix& u, size_t piv, size_t i, size_t col) {
  const Int a = m.at(piv, col), b = m.at(i, col);
  if (b == 0) return;
  if (a != 0 && b % a == 0) {
    Int q = -(b / a);
    addmul_row(m, i, piv, q);
    addmul_row(u, i, piv, q);
    return;
  }
  XGcd x = xgcd(a, b);
  Int ag = a / x.g, bg = b / x.g;
  combine_rows(m, piv, i, x.p, x.q, -bg, ag);
  combine_rows(u, piv, i, x.p, x.q, -bg, ag);
}

void col_gcd_step(IntMatrix& m, IntMatrix& v, size_t piv, size_t j, size_t row) {
  const Int a = m.at(row, piv), b = m.at(row, j);
  if (b == 0) return;
  if (a != 0 && b % a == 0) {
    Int q = -(b / a);
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) += q * m.at(i, piv);
    for (size_t i = 0; i < v.rows(); ++i) v.at(i, j) += q * v.at(i, piv);
    return;
  }
  XGcd x = xgcd(a, b);
  Int ag = a / x.g, bg = b / x.g;
  combine_cols(m, piv, j, x.p, x.q, -bg, ag);
  combine_cols(v, piv, j, x.p, x.q, -bg, ag);
}

}  // namespace

HermiteResult hermite_form(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  size_t pr = 0;
  for (size_t pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
    size_t piv = pr;
    while (piv < m.rows() && h.at(piv, pc) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != pr) { swap_rows(h, pr, piv); swap_rows(u, pr, piv); }
    for (size_t i = pr + 1; i < m.rows(); ++i) row_gcd_step(h, u, pr, i, pc);
    if (h.at(pr, pc) < 0) { negate_row(h, pr); negate_row(u, pr); }
    for (size_t i = 0; i < pr; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, pc).get_mpz_t(), h.at(pr, pc).get_mpz_t());
      addmul_row(h, i, pr, -q);
      addmul_row(u, i, pr, -q);
    }
    ++pr;
  }
  res.rank = pr;
  return res;
}

SmithResult smith_form(const IntMatrix& m) {
  SmithResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& s = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  size_t n = std::min(m.rows(), m.cols());
  auto col_swap = [&](IntMatrix& a, size_t x, size_t y) {
    for (size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, x), a.at(i, y));
  };
  for (size_t t = 0; t < n; ++t) {
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < s.rows() && !found; ++i)
      for (size_t j = t; j < s.cols() && !found; ++j)
        if (s.at(i, j) != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    if (pi != t) { swap_rows(s, t, pi); swap_rows(u, t, pi); }
    if (pj != t) { col_swap(s, t, pj); col_swap(v, t, pj); }
    // alternate clearing; the pivot gcd strictly shrinks whenever a pass
    // reintroduces entries, so this terminates
    for (;;) {
      for (size_t i = t + 1; i < s.rows(); ++i) row_gcd_step(s, u, t, i, t);
      bool row_clean = true;
      for (size_t j = t + 1; j < s.cols(); ++j)
        if (s.at(t, j) != 0) row_clean = false;
      if (!row_clean)
        for (size_t j = t + 1; j < s.cols(); ++j) col_gcd_step(s, v, t, j, t);
      bool col_clean = true;
      for (size_t i = t + 1; i < s.rows(); ++i)
        if (s.at(i, t) != 0) col_clean = false;
      if (col_clean) {
        bool div_ok = true;
        for (size_t i = t + 1; i < s.rows() && div_ok; ++i)
          for (size_t j = t + 1; j < s.cols() && div_ok; ++j)
            if (s.at(i, j) % s.at(t, t) != 0) {
              addmul_row(s, t, i, Int(1));
              addmul_row(u, t, i, Int(1));
              div_ok = false;
            }
        if (div_ok) break;
      }
    }
    if (s.at(t, t) < 0) { negate_row(s, t); negate_row(u, t); }
  }
  size_t r = 0;
  for (size_t t = 0; t < n; ++t) if (s.at(t, t) != 0) ++r;
  res.rank = r;
  return res;
}

IntMatrix kernel_lattice(const IntMatrix& m) {
  // m x = 0 over columns: use Smith u m v = s, kernel basis = columns of v
  // past the rank; HNF-canonicalize rows for determinism.
  SmithResult sf = smith_form(m);
  size_t d = m.cols(), r = sf.rank;
  IntMatrix basis(d - r, d);
  for (size_t k = r; k < d; ++k)
    for (size_t i = 0; i < d; ++i) basis.at(k - r, i) = sf.v.at(i, k);
  HermiteResult h = hermite_form(basis);
  return h.h.row_slice(0, h.rank);
}

bool has_unit_invariants(const IntMatrix& m) {
  SmithResult sf = smith_form(m);
  size_t n = std::min(m.rows(), m.cols());
  for (size_t t = 0; t < n; ++t) {
    const Int& dt = sf.s.at(t, t);
    if (dt != 0 && dt != 1) return false;
  }
  return true;
}

std::optional<VecI> solve_integer(const IntMatrix& m, const VecI& b) {
  SmithResult sf = smith_form(m);
  VecI ub = sf.u.mul(b);
  VecI y(m.cols(), Int(0));
  size_t n = std::min(m.rows(), m.cols());
  for (size_t t = 0; t < n; ++t) {
    const Int& dt = sf.s.at(t, t);
    if (dt == 0) {
      if (ub[t] != 0) return std::nullopt;
    } else {
      if (ub[t] % dt != 0) return std::nullopt;
      y[t] = ub[t] / dt;
    }
  }
  for (size_t t = n; t < m.rows(); ++t)
    if (ub[t] != 0) return std::nullopt;
  return sf.v.mul(y);
}

std::optional<VecQ> solve_rational(const IntMatrix& m, const VecQ& b) {
  size_t R = m.rows(), C = m.cols();
  std::vector<VecQ> a(R, VecQ(C + 1, Rat(0)));
  for (size_t i = 0; i < R; ++i) {
    for (size_t j = 0; j < C; ++j) a[i][j] = rat_of(m.at(i, j));
    a[i][C] = b[i];
  }
  size_t pr = 0;
  std::vector<long> pivot_col(R, -1);
  for (size_t pc = 0; pc < C && pr < R; ++pc) {
    size_t piv = pr;
    while (piv < R && a[piv][pc] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[pr], a[piv]);
    Rat inv = a[pr][pc];
    for (size_t j = pc; j <= C; ++j) a[pr][j] /= inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == pr || a[i][pc] == 0) continue;
      Rat f = a[i][pc];
      for (size_t j = pc; j <= C; ++j) a[i][j] -= f * a[pr][j];
    }
    pivot_col[pr] = static_cast<long>(pc);
    ++pr;
  }
  for (size_t i = pr; i < R; ++i)
    if (a[i][C] != 0) return std::nullopt;
  VecQ x(C, Rat(0));
  for (size_t i = 0; i < pr; ++i) x[pivot_col[i]] = a[i][C];
  return x;
}

size_t rank_rational(const IntMatrix& m) { return smith_form(m).rank; }

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("det of non-square matrix");
  size_t n = m.rows();
  if (n == 0) return 1;
  // fraction-free via rational elimination on a copy
  std::vector<VecQ> a(n, VecQ(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = rat_of(m.at(i, j));
  Rat d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) { std::swap(a[piv], a[c]); d = -d; }
    d *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("non-integral determinant");
  return d.get_num();
}

Int content(const VecI& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

VecI primitive(const VecI& v) {
  Int g = content(v);
  if (g == 0) return v;
  VecI r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

std::optional<VecI> primitive_kernel_vector(const IntMatrix& m) {
  IntMatrix k = kernel_lattice(m);
  if (k.rows() != 1) return std::nullopt;
  VecI v(m.cols());
  for (size_t j = 0; j < m.cols(); ++j) v[j] = k.at(0, j);
  return primitive(v);
}

}  // namespace gkz
