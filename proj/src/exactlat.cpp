#include "gkz/exactlat.hpp"

#include <map>

namespace gkz {

Label WeightConfig::t_part(Label chi) const {
  VecI v(chi.begin(), chi.end());
  VecI r = B.mul(v);
  Label out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = to_i64(r[i]);
  return out;
}

Label WeightConfig::h_part(Label chi) const {
  VecI v(chi.begin(), chi.end());
  VecI r = P.mul(v);
  Label out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = to_i64(r[i]);
  return out;
}

NormalForms normal_forms(const IntMatrix& m) {
  NormalForms r;
  HermiteResult h = hermite_form(m);
  SmithResult s = smith_form(m);
  r.hermite = h.h;
  r.hermite_u = h.u;
  r.smith = s.s;
  r.smith_u = s.u;
  r.smith_v = s.v;
  return r;
}

IntMatrix gale_dual(const IntMatrix& b) {
  if (!has_unit_invariants(b))
    throw NotSaturated("row lattice of B is not saturated in Z^n");
  return kernel_lattice(b);
}

Splittings choose_splittings(const IntMatrix& b, const IntMatrix& a) {
  size_t n = b.rows(), d = b.cols(), m = a.rows();
  if (a.cols() != d || n + m != d) throw ShapeMismatch("B/A shapes inconsistent");
  Splittings sp;
  // Si column k: minimal-index integer solution of B s = e_k, made canonical
  // through the Hermite transform of B^T.
  sp.si = IntMatrix(d, n);
  for (size_t k = 0; k < n; ++k) {
    VecI ek(n, Int(0));
    ek[k] = 1;
    auto s = solve_integer(b, ek);
    if (!s) throw NotSaturated("no integral section of B");
    for (size_t i = 0; i < d; ++i) sp.si.at(i, k) = (*s)[i];
  }
  // K is pinned uniquely by A K = I_m, Si^T K = 0: the stacked matrix
  // [A; Si^T] is unimodular with inverse [K | B^T].
  IntMatrix stacked(d, d);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < d; ++j) stacked.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j) stacked.at(m + i, j) = sp.si.at(j, i);
  sp.k = IntMatrix(d, m);
  for (size_t c = 0; c < m; ++c) {
    VecI rhs(d, Int(0));
    rhs[c] = 1;
    auto s = solve_integer(stacked, rhs);
    if (!s) throw NotSaturated("splitting system has no integral solution");
    for (size_t i = 0; i < d; ++i) sp.k.at(i, c) = (*s)[i];
  }
  sp.p = sp.k.transpose();
  return sp;
}

namespace {

// Group column indices of B by the line through the origin spanned by the
// column; key = primitive direction with canonical sign.
std::map<Label, std::vector<size_t>> group_by_line(const IntMatrix& b) {
  std::map<Label, std::vector<size_t>> lines;
  for (size_t j = 0; j < b.cols(); ++j) {
    VecI col(b.rows());
    for (size_t i = 0; i < b.rows(); ++i) col[i] = b.at(i, j);
    VecI p = primitive(col);
    // canonical sign: first nonzero positive
    for (const auto& x : p) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : p) y = -y;
        break;
      }
    }
    Label key(p.size());
    for (size_t i = 0; i < p.size(); ++i) key[i] = to_i64(p[i]);
    lines[key].push_back(j);
  }
  return lines;
}

}  // namespace

WeightConfig validate_config(const IntMatrix& b) {
  WeightConfig cfg;
  cfg.n = b.rows();
  cfg.d = b.cols();
  cfg.B = b;
  for (size_t j = 0; j < cfg.d; ++j) {
    bool zero = true;
    for (size_t i = 0; i < cfg.n; ++i)
      if (b.at(i, j) != 0) zero = false;
    if (zero) throw ZeroColumn("column " + std::to_string(j + 1) + " of B is zero");
  }
  if (!has_unit_invariants(b))
    throw NotSaturated("ZB != Z^n (Smith invariants not all 1)");
  cfg.lattice_surjective = true;

  for (auto& [line, idx] : group_by_line(b)) {
    VecI sum(cfg.n, Int(0));
    for (size_t j : idx)
      for (size_t i = 0; i < cfg.n; ++i) sum[i] += b.at(i, j);
    for (const auto& s : sum)
      if (s != 0) {
        std::string cols;
        for (size_t j : idx) cols += (cols.empty() ? "" : ",") + std::to_string(j + 1);
        throw QuasiSymmetryViolation("columns {" + cols + "} on line " + label_str(line) +
                                     " sum to a nonzero vector");
      }
  }
  cfg.quasi_symmetric = true;

  VecI total(cfg.n, Int(0));
  for (size_t j = 0; j < cfg.d; ++j)
    for (size_t i = 0; i < cfg.n; ++i) total[i] += b.at(i, j);
  for (const auto& s : total)
    if (s != 0) throw ZeroSumViolation("column sum of B nonzero");
  cfg.zero_sum = true;

  cfg.A = gale_dual(b);
  cfg.m = cfg.A.rows();
  Splittings sp = choose_splittings(cfg.B, cfg.A);
  cfg.Si = sp.si;
  cfg.K = sp.k;
  cfg.P = sp.p;

  // h with <h, a_i> = 1 for all i; pick the Hermite-canonical solution.
  if (cfg.m > 0) {
    IntMatrix at = cfg.A.transpose();  // d x m
    VecI ones(cfg.d, Int(1));
    auto h = solve_integer(at, ones);
    if (!h) throw ZeroSumViolation("no integral h with <h, a_i> = 1");
    cfg.h_cov = *h;
  }
  return cfg;
}

}  // namespace gkz
