#include "gkz/simplex.hpp"

namespace gkz {

namespace {

// Dense simplex tableau over Q.  Rows: constraints then objective.
struct Tableau {
  size_t m, n;  // constraints, variables (incl. artificials)
  std::vector<VecQ> t;  // (m+1) x (n+1), last column = rhs
  std::vector<size_t> basis;

  Rat& at(size_t i, size_t j) { return t[i][j]; }

  void pivot(size_t pr, size_t pc) {
    Rat inv = t[pr][pc];
    for (size_t j = 0; j <= n; ++j) t[pr][j] /= inv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == pr || t[i][pc] == 0) continue;
      Rat f = t[i][pc];
      for (size_t j = 0; j <= n; ++j) t[i][j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  }

  // Bland: entering = lowest index with positive reduced cost (row m holds
  // the objective to MAXIMIZE, stored as c - z so positive means improving).
  bool step() {
    size_t pc = n;
    for (size_t j = 0; j < n; ++j)
      if (t[m][j] > 0) { pc = j; break; }
    if (pc == n) return false;  // optimal
    size_t pr = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][pc] <= 0) continue;
      Rat ratio = t[i][n] / t[i][pc];
      if (pr == m || ratio < best || (ratio == best && basis[i] < basis[pr])) {
        pr = i;
        best = ratio;
      }
    }
    if (pr == m) throw Infeasible("unbounded objective");  // caller maps this
    pivot(pr, pc);
    return true;
  }
};

}  // namespace

LPResult lp_max(const std::vector<VecQ>& a, const VecQ& b, const VecQ& c) {
  size_t m = a.size(), n = m ? a[0].size() : c.size();
  Tableau tb;
  tb.m = m;
  tb.n = n + m;  // artificials appended
  tb.t.assign(m + 1, VecQ(tb.n + 1, Rat(0)));
  tb.basis.resize(m);
  for (size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (size_t j = 0; j < n; ++j) tb.t[i][j] = flip ? -a[i][j] : a[i][j];
    tb.t[i][tb.n] = flip ? -b[i] : b[i];
    tb.t[i][n + i] = 1;
    tb.basis[i] = n + i;
  }
  // phase 1: maximize -sum(artificials)
  for (size_t j = n; j < tb.n; ++j) tb.t[m][j] = -1;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= tb.n; ++j) tb.t[m][j] += tb.t[i][j];
  for (size_t j = n; j < tb.n; ++j) tb.t[m][j] = 0;
  while (tb.step()) {}
  if (tb.t[m][tb.n] != 0) return {LPStatus::Infeasible, Rat(0), {}};
  // drive artificials out of the basis where possible
  for (size_t i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    size_t pc = n;
    for (size_t j = 0; j < n; ++j)
      if (tb.t[i][j] != 0) { pc = j; break; }
    if (pc < n) tb.pivot(i, pc);
    // else the row is all-zero on structural variables: redundant, leave it
  }
  // phase 2 objective
  for (size_t j = 0; j <= tb.n; ++j) tb.t[m][j] = 0;
  for (size_t j = 0; j < n; ++j) tb.t[m][j] = c[j];
  for (size_t i = 0; i < m; ++i) {
    if (tb.basis[i] >= n) continue;
    Rat f = tb.t[m][tb.basis[i]];
    if (f == 0) continue;
    for (size_t j = 0; j <= tb.n; ++j) tb.t[m][j] -= f * tb.t[i][j];
  }
  // forbid artificials from re-entering
  for (size_t j = n; j < tb.n; ++j) tb.t[m][j] = Rat(-1);
  try {
    while (tb.step()) {}
  } catch (const Infeasible&) {
    return {LPStatus::Unbounded, Rat(0), {}};
  }
  LPResult res;
  res.status = LPStatus::Optimal;
  res.x.assign(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.t[i][tb.n];
  res.value = Rat(0);
  for (size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

bool strict_feasible(const std::vector<VecQ>& a, const VecQ& b,
                     const std::vector<bool>& strict) {
  // x = x' + delta * 1_strict with x' >= 0, delta >= 0, delta + s = 1.
  size_t m = a.size(), n = m ? a[0].size() : strict.size();
  std::vector<VecQ> aa(m + 1, VecQ(n + 2, Rat(0)));
  VecQ bb(m + 1, Rat(0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) {
      aa[i][j] = a[i][j];
      if (strict[j]) aa[i][n] += a[i][j];
    }
    bb[i] = b[i];
  }
  aa[m][n] = 1;
  aa[m][n + 1] = 1;
  bb[m] = 1;
  VecQ c(n + 2, Rat(0));
  c[n] = 1;
  LPResult r = lp_max(aa, bb, c);
  return r.status == LPStatus::Optimal && r.value > 0;
}

}  // namespace gkz
