#include "gkz/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "gkz/simplex.hpp"

namespace gkz {

namespace {

// all primitive directions orthogonal to (m-1)-subsets of the a_i; each is
// a candidate ray of sigma^vee / facet normal of sigma
std::vector<Label> candidate_directions(const WeightConfig& cfg) {
  size_t m = cfg.m, d = cfg.d;
  std::set<Label> dirs;
  if (m == 0) return {};
  if (m == 1) {
    dirs.insert({1});
    dirs.insert({-1});
  } else {
    std::vector<size_t> idx(m - 1);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
      if (pos == m - 1) {
        IntMatrix sub(m - 1, m);
        for (size_t r = 0; r + 1 < m; ++r)
          for (size_t c = 0; c < m; ++c) sub.at(r, c) = cfg.A.at(c, idx[r]);
        auto ker = primitive_kernel_vector(sub);
        if (ker) {
          Label v(m);
          for (size_t i = 0; i < m; ++i) v[i] = to_i64((*ker)[i]);
          dirs.insert(v);
          dirs.insert(neg(v));
        }
        return;
      }
      for (size_t j = start; j + (m - 1 - pos) <= d; ++j) {
        idx[pos] = j;
        rec(pos + 1, j + 1);
      }
    };
    rec(0, 0);
  }
  return {dirs.begin(), dirs.end()};
}

int64_t pair_with_col(const Label& v, const IntMatrix& mat, size_t col) {
  int64_t s = 0;
  for (size_t i = 0; i < mat.rows(); ++i) s += v[i] * to_i64(mat.at(i, col));
  return s;
}

}  // namespace

std::vector<Label> dual_cone_rays(const WeightConfig& cfg) {
  if (cfg.m == 0) return {};
  if (rank_rational(cfg.A) != cfg.m) throw NotFullDimensional("cone of A not full dimensional");
  std::vector<Label> rays;
  for (const auto& v : candidate_directions(cfg)) {
    bool feasible = true;
    size_t tight = 0;
    std::vector<std::vector<long>> tight_rows;
    for (size_t j = 0; j < cfg.d && feasible; ++j) {
      int64_t s = pair_with_col(v, cfg.A, j);
      if (s < 0) feasible = false;
      if (s == 0) {
        ++tight;
        std::vector<long> row(cfg.m);
        for (size_t i = 0; i < cfg.m; ++i) row[i] = to_i64(cfg.A.at(i, j));
        tight_rows.push_back(row);
      }
    }
    if (!feasible) continue;
    // extreme ray: tight constraints span a hyperplane
    bool extreme;
    if (cfg.m == 1) extreme = true;
    else extreme = !tight_rows.empty() && rank_rational(IntMatrix::from_rows(tight_rows)) == cfg.m - 1;
    if (extreme) rays.push_back(v);
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

ConeDescription cone_of_A(const WeightConfig& cfg) {
  ConeDescription cd;
  cd.dim = cfg.m;
  for (const auto& v : candidate_directions(cfg)) {
    // facet normal of sigma: every a_j on the nonnegative side, tight set
    // spans a hyperplane
    bool feasible = true;
    std::vector<std::vector<long>> tight_rows;
    for (size_t j = 0; j < cfg.d && feasible; ++j) {
      int64_t s = pair_with_col(v, cfg.A, j);
      if (s < 0) feasible = false;
      if (s == 0) {
        std::vector<long> row(cfg.m);
        for (size_t i = 0; i < cfg.m; ++i) row[i] = to_i64(cfg.A.at(i, j));
        tight_rows.push_back(row);
      }
    }
    if (!feasible) continue;
    bool facet;
    if (cfg.m == 1) facet = true;
    else facet = !tight_rows.empty() && rank_rational(IntMatrix::from_rows(tight_rows)) == cfg.m - 1;
    if (facet) cd.facet_normals.push_back(v);
  }
  // the rays of sigma are a subset of the generators a_i (extreme ones)
  for (size_t j = 0; j < cfg.d; ++j) {
    VecI col(cfg.m);
    for (size_t i = 0; i < cfg.m; ++i) col[i] = cfg.A.at(i, j);
    VecI p = primitive(col);
    size_t tight = 0;
    std::vector<std::vector<long>> tight_rows;
    for (const auto& nf : cd.facet_normals) {
      int64_t s = 0;
      for (size_t i = 0; i < cfg.m; ++i) s += nf[i] * to_i64(p[i]);
      if (s == 0) {
        ++tight;
        tight_rows.push_back(std::vector<long>(nf.begin(), nf.end()));
      }
    }
    bool extreme = cfg.m == 1 ||
                   (tight >= cfg.m - 1 && rank_rational(IntMatrix::from_rows(tight_rows)) == cfg.m - 1);
    if (extreme) {
      Label l(cfg.m);
      for (size_t i = 0; i < cfg.m; ++i) l[i] = to_i64(p[i]);
      cd.rays.push_back(l);
    }
  }
  std::sort(cd.rays.begin(), cd.rays.end());
  cd.rays.erase(std::unique(cd.rays.begin(), cd.rays.end()), cd.rays.end());
  std::sort(cd.facet_normals.begin(), cd.facet_normals.end());
  return cd;
}

bool is_integral_complex(const Cplx& z, const NonResonancePolicy& pol) {
  if (std::abs(z.imag()) > pol.tol) return false;
  double r = z.real();
  return std::abs(r - std::round(r)) <= pol.tol;
}

namespace {

bool pairings_nonintegral(const std::vector<Label>& covs, const std::vector<Cplx>& alpha,
                          const NonResonancePolicy& pol) {
  for (const auto& v : covs) {
    Cplx s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += static_cast<double>(v[i]) * alpha[i];
    if (is_integral_complex(s, pol)) return false;
  }
  return true;
}

bool pairings_nonintegral_rat(const std::vector<Label>& covs, const VecQ& alpha) {
  for (const auto& v : covs) {
    Rat s(0);
    for (size_t i = 0; i < v.size(); ++i) s += Rat(static_cast<long>(v[i])) * alpha[i];
    s.canonicalize();
    if (s.get_den() == 1) return false;
  }
  return true;
}

// primitive normals of all hyperplanes spanned by subsets of the a_i
std::vector<Label> span_normals(const WeightConfig& cfg) {
  std::set<Label> out;
  for (const auto& v : candidate_directions(cfg)) {
    // keep only directions orthogonal to a spanning subset
    std::vector<std::vector<long>> rows;
    for (size_t j = 0; j < cfg.d; ++j)
      if (pair_with_col(v, cfg.A, j) == 0) {
        std::vector<long> row(cfg.m);
        for (size_t i = 0; i < cfg.m; ++i) row[i] = to_i64(cfg.A.at(i, j));
        rows.push_back(row);
      }
    bool spanning = cfg.m == 1 || (!rows.empty() && rank_rational(IntMatrix::from_rows(rows)) == cfg.m - 1);
    if (spanning) {
      Label canon = v;
      for (auto x : canon) {
        if (x != 0) {
          if (x < 0) canon = neg(canon);
          break;
        }
      }
      out.insert(canon);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

bool is_nonresonant(const WeightConfig& cfg, const std::vector<Cplx>& alpha,
                    const NonResonancePolicy& pol) {
  return pairings_nonintegral(dual_cone_rays(cfg), alpha, pol);
}

bool is_nonresonant_direct(const WeightConfig& cfg, const std::vector<Cplx>& alpha,
                           const NonResonancePolicy& pol) {
  return pairings_nonintegral(cone_of_A(cfg).facet_normals, alpha, pol);
}

bool is_totally_nonresonant(const WeightConfig& cfg, const std::vector<Cplx>& alpha,
                            const NonResonancePolicy& pol) {
  return pairings_nonintegral(span_normals(cfg), alpha, pol);
}

bool is_nonresonant_rat(const WeightConfig& cfg, const VecQ& alpha) {
  return pairings_nonintegral_rat(dual_cone_rays(cfg), alpha);
}

bool is_totally_nonresonant_rat(const WeightConfig& cfg, const VecQ& alpha) {
  return pairings_nonintegral_rat(span_normals(cfg), alpha);
}

bool re_in_negative_cone(const WeightConfig& cfg, const VecQ& re_alpha) {
  // Re(alpha) = sum c_i a_i with all c_i < 0
  size_t m = cfg.m, d = cfg.d;
  std::vector<VecQ> a(m, VecQ(d, Rat(0)));
  VecQ b(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < d; ++j) a[i][j] = rat_of(cfg.A.at(i, j));
    b[i] = -re_alpha[i];
  }
  return strict_feasible(a, b, std::vector<bool>(d, true));
}

namespace {

// normalized volume of the convex hull of integer points, measured in the
// saturated lattice of their affine span; recursion over facets
Int lattice_volume(std::vector<Label> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return 1;
  size_t amb = pts[0].size();
  // re-coordinatize into the saturated lattice of the affine span
  IntMatrix diffs(pts.size() - 1, amb);
  for (size_t i = 1; i < pts.size(); ++i)
    for (size_t j = 0; j < amb; ++j) diffs.at(i - 1, j) = pts[i][j] - pts[0][j];
  HermiteResult h = hermite_form(diffs);
  size_t k = h.rank;
  if (k == 0) return 1;
  IntMatrix basis = h.h.row_slice(0, k);  // rows: lattice basis of the span (saturated: HNF of differences
  // may be non-saturated; saturate via the kernel trick)
  {
    IntMatrix kern = kernel_lattice(basis);            // (amb-k) x amb
    IntMatrix sat = kern.rows() ? kernel_lattice(kern) // k x amb, saturated
                                : IntMatrix::identity(amb);
    basis = sat;
  }
  // coordinates of pts in the basis.  Solve basis^T y = p - p0.
  IntMatrix bt = basis.transpose();
  std::vector<Label> coords;
  for (const auto& p : pts) {
    VecI rhs(amb);
    for (size_t j = 0; j < amb; ++j) rhs[j] = p[j] - pts[0][j];
    auto y = solve_integer(bt, rhs);
    if (!y) throw std::logic_error("point outside saturated span lattice");
    Label c(k);
    for (size_t i = 0; i < k; ++i) c[i] = to_i64((*y)[i]);
    coords.push_back(c);
  }
  // now full-dimensional in Z^k
  std::function<Int(const std::vector<Label>&, size_t)> vol =
      [&](const std::vector<Label>& q, size_t dim) -> Int {
    if (dim == 0) return 1;
    if (dim == 1) {
      int64_t lo = q[0][0], hi = q[0][0];
      for (const auto& p : q) {
        lo = std::min(lo, p[0]);
        hi = std::max(hi, p[0]);
      }
      return Int(hi - lo);
    }
    // enumerate facet hyperplanes: primitive (normal, offset) with all
    // points on one side and a spanning tight set
    std::set<std::pair<Label, int64_t>> facets;
    std::vector<size_t> idx(dim);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
      if (pos == dim) {
        IntMatrix m(dim - 1, dim);
        for (size_t r = 1; r < dim; ++r)
          for (size_t c = 0; c < dim; ++c) m.at(r - 1, c) = q[idx[r]][c] - q[idx[0]][c];
        auto nrm = primitive_kernel_vector(m);
        if (!nrm) return;
        Label nl(dim);
        for (size_t i = 0; i < dim; ++i) nl[i] = to_i64((*nrm)[i]);
        int64_t off = dot(nl, q[idx[0]]);
        bool pos_side = true, neg_side = true;
        for (const auto& p : q) {
          int64_t s = dot(nl, p) - off;
          if (s > 0) neg_side = false;
          if (s < 0) pos_side = false;
        }
        if (pos_side == neg_side) return;  // both: degenerate, neither: not a facet
        if (neg_side) {  // flip so the polytope sits on the >= side
          nl = neg(nl);
          off = -off;
        }
        facets.insert({nl, off});
        return;
      }
      for (size_t j = start; j + (dim - pos) <= q.size(); ++j) {
        idx[pos] = j;
        rec(pos + 1, j + 1);
      }
    };
    rec(0, 0);
    // pyramid decomposition from q[0]; facets through the apex contribute 0
    Int total = 0;
    for (const auto& [nl, off] : facets) {
      int64_t height = dot(nl, q[0]) - off;  // >= 0 by inward normalization
      if (height == 0) continue;
      std::vector<Label> fpts;
      for (const auto& p : q)
        if (dot(nl, p) == off) fpts.push_back(p);
      total += Int(height) * lattice_volume(fpts);
    }
    return total;
  };
  return vol(coords, k);
}

}  // namespace

Int normalized_volume(const WeightConfig& cfg) {
  std::vector<Label> pts;
  for (size_t j = 0; j < cfg.d; ++j) pts.push_back(cfg.a_col(j));
  return lattice_volume(pts);
}

GroupRingElement F_element(const WeightConfig& cfg) {
  GroupRingElement f = GroupRingElement::one(cfg.m);
  for (const auto& r : dual_cone_rays(cfg)) {
    GroupRingElement factor = GroupRingElement::one(cfg.m) - GroupRingElement::monomial(r);
    f = f * factor;
  }
  return f;
}

}  // namespace gkz
