#include "gkz/arrangement.hpp"

#include <algorithm>
#include <functional>

#include "gkz/simplex.hpp"

namespace gkz {

namespace {

Rat dotq(const VecI& a, const VecQ& x) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += rat_of(a[i]) * x[i];
  return s;
}

Rat dotq(const Label& a, const VecQ& x) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += Rat(static_cast<long>(a[i])) * x[i];
  return s;
}

VecI lex_canonical_sign(VecI v) {
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  }
  return v;
}

Rat frac(const Rat& q) { return q - rat_of(ifloor(q)); }

}  // namespace

bool Zonotope::contains(const VecQ& p) const {
  for (const auto& f : facets)
    if (dotq(f.normal, p) > f.offset) return false;
  return true;
}

bool Zonotope::on_facet(const VecQ& p, size_t facet) const {
  return dotq(facets[facet].normal, p) == facets[facet].offset;
}

Zonotope zonotope(const WeightConfig& cfg) {
  Zonotope z;
  z.n = cfg.n;
  auto h_of = [&](const VecI& lam) {
    Rat h(0);
    for (size_t j = 0; j < cfg.d; ++j) {
      Rat s(0);
      for (size_t i = 0; i < cfg.n; ++i) s += rat_of(lam[i] * cfg.B.at(i, j));
      if (s < 0) h += -s / 2;
    }
    return h;
  };
  // candidate facet normals: primitive kernels of (n-1)-subsets of columns
  std::set<std::vector<long>> normals;
  size_t k = cfg.n - 1;
  std::vector<size_t> idx(k);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
    if (pos == k) {
      IntMatrix sub(k, cfg.n);
      for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < cfg.n; ++c) sub.at(r, c) = cfg.B.at(c, idx[r]);
      auto ker = primitive_kernel_vector(sub);
      if (ker) {
        VecI lam = lex_canonical_sign(*ker);
        // facet iff the generators orthogonal to lam span the hyperplane
        IntMatrix orth(0, 0);
        std::vector<std::vector<long>> rows;
        for (size_t j = 0; j < cfg.d; ++j) {
          Int s = 0;
          for (size_t i = 0; i < cfg.n; ++i) s += lam[i] * cfg.B.at(i, j);
          if (s == 0) {
            std::vector<long> row(cfg.n);
            for (size_t i = 0; i < cfg.n; ++i) row[i] = to_i64(cfg.B.at(i, j));
            rows.push_back(row);
          }
        }
        bool facet = cfg.n == 1;  // empty span is the 0-dim hyperplane of R^1
        if (!facet && !rows.empty())
          facet = rank_rational(IntMatrix::from_rows(rows)) == cfg.n - 1;
        if (facet) {
          std::vector<long> key(cfg.n);
          for (size_t i = 0; i < cfg.n; ++i) key[i] = to_i64(lam[i]);
          normals.insert(key);
        }
      }
      return;
    }
    for (size_t j = start; j + (k - pos) <= cfg.d; ++j) {
      idx[pos] = j;
      rec(pos + 1, j + 1);
    }
  };
  if (cfg.n == 1) {
    normals.insert({1});
  } else {
    rec(0, 0);
  }
  if (normals.empty()) throw DegenerateArrangement("no zonotope facets");
  for (const auto& key : normals) {
    VecI lam(key.begin(), key.end());
    VecI neg(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) neg[i] = -lam[i];
    z.facets.push_back({lam, h_of(lam)});
    z.facets.push_back({neg, h_of(neg)});
  }
  z.box_halfwidth.assign(cfg.n, Rat(0));
  for (size_t i = 0; i < cfg.n; ++i) {
    VecI e(cfg.n, Int(0));
    e[i] = 1;
    z.box_halfwidth[i] = h_of(e);
  }
  z.diam_bound = Rat(0);
  for (const auto& h : z.box_halfwidth) z.diam_bound += 2 * h;
  if (z.diam_bound == 0) throw DegenerateArrangement("zonotope has empty interior");
  return z;
}

int FaceComplex::sign_of(const VecQ& p, size_t h) const {
  Rat v = dotq(hyps[h].normal, p) - hyps[h].offset;
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::vector<int8_t> FaceComplex::sign_vector(const VecQ& p) const {
  std::vector<int8_t> s(hyps.size());
  for (size_t h = 0; h < hyps.size(); ++h) s[h] = static_cast<int8_t>(sign_of(p, h));
  return s;
}

bool FaceComplex::leq(size_t a, size_t b) const {
  for (size_t h = 0; h < hyps.size(); ++h) {
    int8_t sa = faces[a].sign[h], sb = faces[b].sign[h];
    if (sa != 0 && sa != sb) return false;
  }
  return true;
}

int FaceComplex::find_by_sign(const std::vector<int8_t>& s) const {
  auto it = sign_index.find(s);
  return it == sign_index.end() ? -1 : static_cast<int>(it->second);
}

int FaceComplex::find_face(const VecQ& p) const { return find_by_sign(sign_vector(p)); }

std::vector<size_t> FaceComplex::chambers() const { return chamber_cache; }

std::vector<size_t> FaceComplex::chambers_above(size_t f) const {
  std::vector<size_t> out;
  for (size_t c : chambers())
    if (leq(f, c)) out.push_back(c);
  return out;
}

std::vector<FaceComplex::Wall> FaceComplex::walls() const {
  std::vector<Wall> out;
  for (size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].dim != static_cast<int>(n) - 1) continue;
    auto ch = chambers_above(f);
    if (ch.size() == 2) out.push_back({f, ch[0], ch[1]});
  }
  return out;
}

int FaceComplex::translate_face(size_t f, const Label& mu) const {
  VecQ p = faces[f].rep;
  for (size_t i = 0; i < n; ++i) p[i] += Rat(static_cast<long>(mu[i]));
  return find_face(p);
}

namespace {

struct Builder {
  const WeightConfig& cfg;
  Zonotope zono;
  Rat fatten;
  FaceComplex fc;

  // work region: hyperplanes are collected on keep region widened by
  // 3*diam+1 so every kept face sees all hyperplanes that cut near it
  Rat keep_lo, keep_hi, work_lo, work_hi;

  explicit Builder(const WeightConfig& c, const Rat& fat) : cfg(c), zono(zonotope(c)), fatten(fat) {
    fc.n = cfg.n;
    fc.fatten = fatten;
    keep_lo = -fatten;
    keep_hi = Rat(1) + fatten;
    // faces kept have closures within keep + diam; hyperplanes cutting near
    // those closures lie within another diam
    Rat margin = 2 * zono.diam_bound + 1;
    work_lo = keep_lo - margin;
    work_hi = keep_hi + margin;
  }

  void collect_hyperplanes() {
    std::map<Label, std::set<Rat>> residues;
    for (const auto& f : zono.facets) {
      VecI lam = lex_canonical_sign(f.normal);
      Rat c = f.offset;
      if (lam != f.normal) c = -c;  // flipped orientation
      Label key(lam.size());
      for (size_t i = 0; i < lam.size(); ++i) key[i] = to_i64(lam[i]);
      residues[key].insert(frac(c));
      residues[key].insert(frac(-c));
    }
    for (const auto& [lam, res] : residues) {
      // range of <lam, x> over the work box
      Rat lo(0), hi(0);
      for (size_t i = 0; i < cfg.n; ++i) {
        Rat a = Rat(static_cast<long>(lam[i])) * work_lo;
        Rat b = Rat(static_cast<long>(lam[i])) * work_hi;
        lo += std::min(a, b);
        hi += std::max(a, b);
      }
      for (const Rat& r : res) {
        for (Int k = iceil(lo - r); rat_of(k) + r <= hi; ++k)
          fc.hyps.push_back({lam, r + rat_of(k)});
      }
    }
    std::sort(fc.hyps.begin(), fc.hyps.end(), [](const Hyperplane& a, const Hyperplane& b) {
      if (a.normal != b.normal) return a.normal < b.normal;
      return a.offset < b.offset;
    });
    fc.hyps.erase(std::unique(fc.hyps.begin(), fc.hyps.end(),
                              [](const Hyperplane& a, const Hyperplane& b) {
                                return a.normal == b.normal && a.offset == b.offset;
                              }),
                  fc.hyps.end());
  }

  bool in_box(const VecQ& p, const Rat& lo, const Rat& hi) const {
    for (const auto& x : p)
      if (x < lo || x > hi) return false;
    return true;
  }

  std::vector<VecQ> vertices() const {
    std::vector<VecQ> vs;
    if (cfg.n == 1) {
      for (const auto& h : fc.hyps) vs.push_back({h.offset / rat_of(h.normal[0])});
      return vs;
    }
    // n == 2: pairwise intersections
    std::set<std::pair<Rat, Rat>> seen;
    for (size_t i = 0; i < fc.hyps.size(); ++i)
      for (size_t j = i + 1; j < fc.hyps.size(); ++j) {
        const auto& a = fc.hyps[i];
        const auto& b = fc.hyps[j];
        Rat det = Rat(static_cast<long>(a.normal[0])) * Rat(static_cast<long>(b.normal[1])) -
                  Rat(static_cast<long>(a.normal[1])) * Rat(static_cast<long>(b.normal[0]));
        if (det == 0) continue;
        Rat x = (a.offset * Rat(static_cast<long>(b.normal[1])) -
                 Rat(static_cast<long>(a.normal[1])) * b.offset) / det;
        Rat y = (Rat(static_cast<long>(a.normal[0])) * b.offset -
                 a.offset * Rat(static_cast<long>(b.normal[0]))) / det;
        VecQ p{x, y};
        if (!in_box(p, keep_lo - zono.diam_bound - 1, keep_hi + zono.diam_bound + 1)) continue;
        if (seen.insert({x, y}).second) vs.push_back(p);
      }
    return vs;
  }

  void build() {
    if (cfg.n > 2)
      throw UnsupportedDimension("face enumeration implemented for n <= 2");
    collect_hyperplanes();
    std::vector<VecQ> vs = vertices();
    std::vector<Face> out;

    Rat keepx_lo = keep_lo - zono.diam_bound, keepx_hi = keep_hi + zono.diam_bound;
    auto keepable = [&](const std::vector<VecQ>& verts) {
      for (const auto& v : verts)
        if (in_box(v, keepx_lo, keepx_hi)) return true;
      return false;
    };

    for (const auto& v : vs) {
      if (!keepable({v})) continue;
      Face f;
      f.dim = 0;
      f.rep = v;
      f.verts = {v};
      out.push_back(std::move(f));
    }

    if (cfg.n == 1) {
      std::vector<Rat> xs;
      for (const auto& v : vs) xs.push_back(v[0]);
      std::sort(xs.begin(), xs.end());
      for (size_t i = 0; i + 1 < xs.size(); ++i) {
        Face f;
        f.dim = 1;
        f.rep = {(xs[i] + xs[i + 1]) / 2};
        f.verts = {{xs[i]}, {xs[i + 1]}};
        if (!keepable(f.verts)) continue;
        out.push_back(std::move(f));
      }
    } else {
      // edges: consecutive vertices on each line
      std::set<std::vector<int8_t>> chamber_signs;
      std::vector<Face> chambers;
      for (size_t h = 0; h < fc.hyps.size(); ++h) {
        const auto& hp = fc.hyps[h];
        std::vector<std::pair<Rat, VecQ>> on_line;
        VecQ dir{Rat(-static_cast<long>(hp.normal[1])), Rat(static_cast<long>(hp.normal[0]))};
        for (const auto& v : vs)
          if (dotq(hp.normal, v) == hp.offset) on_line.push_back({dir[0] * v[0] + dir[1] * v[1], v});
        std::sort(on_line.begin(), on_line.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 0; i + 1 < on_line.size(); ++i) {
          if (on_line[i].first == on_line[i + 1].first) continue;
          Face f;
          f.dim = 1;
          f.rep = {(on_line[i].second[0] + on_line[i + 1].second[0]) / 2,
                   (on_line[i].second[1] + on_line[i + 1].second[1]) / 2};
          f.verts = {on_line[i].second, on_line[i + 1].second};
          if (!keepable(f.verts)) continue;
          // chamber seeds on both sides of the midpoint
          for (int side : {+1, -1}) {
            VecQ lamq{Rat(static_cast<long>(hp.normal[0]) * side), Rat(static_cast<long>(hp.normal[1]) * side)};
            // first crossing along rep + t*lamq
            Rat tmin(0);
            bool have = false;
            for (const auto& g : fc.hyps) {
              Rat denom = dotq(g.normal, lamq);
              if (denom == 0) continue;
              Rat t = (g.offset - dotq(g.normal, f.rep)) / denom;
              if (t > 0 && (!have || t < tmin)) { tmin = t; have = true; }
            }
            Rat step = have ? tmin / 2 : Rat(1, 2);
            VecQ s{f.rep[0] + step * lamq[0], f.rep[1] + step * lamq[1]};
            if (!in_box(s, work_lo, work_hi)) continue;
            auto sg = [&] {
              std::vector<int8_t> r(fc.hyps.size());
              for (size_t k = 0; k < fc.hyps.size(); ++k) {
                Rat v = dotq(fc.hyps[k].normal, s) - fc.hyps[k].offset;
                r[k] = static_cast<int8_t>(v > 0 ? 1 : (v < 0 ? -1 : 0));
              }
              return r;
            }();
            bool strict = true;
            for (auto x : sg) if (x == 0) strict = false;
            if (!strict) continue;
            if (chamber_signs.insert(sg).second) {
              Face c;
              c.dim = 2;
              c.rep = s;
              c.sign = sg;
              chambers.push_back(std::move(c));
            }
          }
          out.push_back(std::move(f));
        }
      }
      // chamber vertices: sign-compatible arrangement vertices
      for (auto& c : chambers) {
        for (const auto& v : vs) {
          bool ok = true;
          for (size_t k = 0; k < fc.hyps.size() && ok; ++k) {
            Rat val = dotq(fc.hyps[k].normal, v) - fc.hyps[k].offset;
            int sv = val > 0 ? 1 : (val < 0 ? -1 : 0);
            if (sv != 0 && sv != c.sign[k]) ok = false;
          }
          if (ok) c.verts.push_back(v);
        }
        std::sort(c.verts.begin(), c.verts.end());
        if (!c.verts.empty() && keepable(c.verts)) out.push_back(std::move(c));
      }
    }

    // chambers for n == 1
    if (cfg.n == 1) {
      // already added as dim-1 faces above
    }

    for (auto& f : out)
      if (f.sign.empty()) f.sign = sign_vector_of(f.rep);

    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
      if (a.dim != b.dim) return a.dim < b.dim;
      return a.sign < b.sign;
    });
    fc.faces = std::move(out);
    for (size_t f = 0; f < fc.faces.size(); ++f) {
      fc.sign_index[fc.faces[f].sign] = f;
      if (fc.faces[f].dim == static_cast<int>(cfg.n)) fc.chamber_cache.push_back(f);
    }
    assign_classes();
    if (fc.chambers().empty()) throw DegenerateArrangement("no chambers found");
  }

  std::vector<int8_t> sign_vector_of(const VecQ& p) const {
    std::vector<int8_t> s(fc.hyps.size());
    for (size_t h = 0; h < fc.hyps.size(); ++h) {
      Rat v = dotq(fc.hyps[h].normal, p) - fc.hyps[h].offset;
      s[h] = static_cast<int8_t>(v > 0 ? 1 : (v < 0 ? -1 : 0));
    }
    return s;
  }

  void assign_classes() {
    // canonical key: closure vertices shifted so the lex-min vertex lands
    // in [0,1)^n
    std::map<std::vector<std::pair<Rat, Rat>>, std::vector<size_t>> classes;
    std::vector<Label> shifts(fc.faces.size());
    std::vector<std::vector<std::pair<Rat, Rat>>> keys(fc.faces.size());
    for (size_t f = 0; f < fc.faces.size(); ++f) {
      const auto& vmin = *std::min_element(fc.faces[f].verts.begin(), fc.faces[f].verts.end());
      Label mu(cfg.n);
      for (size_t i = 0; i < cfg.n; ++i) mu[i] = to_i64(ifloor(vmin[i]));
      std::vector<std::pair<Rat, Rat>> key;
      key.push_back({Rat(fc.faces[f].dim), Rat(0)});
      for (const auto& v : fc.faces[f].verts)
        for (size_t i = 0; i < cfg.n; ++i)
          key.push_back({v[i] - Rat(static_cast<long>(mu[i])), Rat(0)});
      keys[f] = key;
      shifts[f] = mu;
      classes[key].push_back(f);
    }
    size_t cid = 0;
    for (auto& [key, members] : classes) {
      // representative: member with zero shift if present, else smallest
      size_t rep = members[0];
      for (size_t f : members)
        if (is_zero(shifts[f])) rep = f;
      fc.class_reps.push_back(rep);
      for (size_t f : members) {
        fc.faces[f].cls = cid;
        fc.faces[f].shift = sub(shifts[f], shifts[rep]);
      }
      ++cid;
    }
  }
};

}  // namespace

FaceComplex face_complex(const WeightConfig& cfg, const Rat& fatten) {
  Builder b(cfg, fatten);
  b.build();
  return b.fc;
}

FaceComplex face_complex(const WeightConfig& cfg) {
  Zonotope z = zonotope(cfg);
  return face_complex(cfg, z.diam_bound + 1);
}

std::vector<Label> lattice_points_at(const WeightConfig& cfg, const VecQ& nu) {
  Zonotope z = zonotope(cfg);
  std::vector<Label> out;
  std::vector<Int> lo(cfg.n), hi(cfg.n);
  for (size_t i = 0; i < cfg.n; ++i) {
    lo[i] = iceil(nu[i] - z.box_halfwidth[i]);
    hi[i] = ifloor(nu[i] + z.box_halfwidth[i]);
  }
  Label cur(cfg.n);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cfg.n) {
      VecQ diff(cfg.n);
      for (size_t i = 0; i < cfg.n; ++i) diff[i] = Rat(static_cast<long>(cur[i])) - nu[i];
      for (const auto& f : z.facets) {
        Rat s(0);
        for (size_t i = 0; i < cfg.n; ++i) s += rat_of(f.normal[i]) * diff[i];
        if (s > f.offset) return;
      }
      out.push_back(cur);
      return;
    }
    for (Int v = lo[k]; v <= hi[k]; ++v) {
      cur[k] = to_i64(v);
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> lattice_points_LC(const WeightConfig& cfg, const FaceComplex& fc, size_t face) {
  const Face& f = fc.faces[face];
  auto pts = lattice_points_at(cfg, f.rep);
  // independence of the interior point: blend the representative toward the
  // closure barycenter and recompute
  VecQ bary(cfg.n, Rat(0));
  for (const auto& v : f.verts)
    for (size_t i = 0; i < cfg.n; ++i) bary[i] += v[i];
  VecQ nu2(cfg.n);
  for (size_t i = 0; i < cfg.n; ++i) {
    bary[i] /= Rat(static_cast<long>(f.verts.size()));
    nu2[i] = (f.rep[i] * 2 + bary[i]) / 3;
  }
  if (lattice_points_at(cfg, nu2) != pts)
    throw DegenerateArrangement("lattice point set depends on the representative");
  return pts;
}

std::vector<size_t> wall_set_J(const WeightConfig& cfg, const FaceComplex& fc,
                               size_t wall, size_t chamber) {
  const Face& w = fc.faces[wall];
  const Face& c = fc.faces[chamber];
  if (w.dim != static_cast<int>(cfg.n) - 1 || c.dim != static_cast<int>(cfg.n) || !fc.leq(wall, chamber))
    throw NotAWallPair("need an incident (facet, chamber) pair");
  size_t h = fc.hyps.size();
  for (size_t k = 0; k < fc.hyps.size(); ++k)
    if (w.sign[k] == 0) { h = k; break; }
  if (h == fc.hyps.size()) throw NotAWallPair("wall has no spanning hyperplane");
  int orient = c.sign[h];
  std::vector<size_t> out;
  for (size_t j = 0; j < cfg.d; ++j) {
    Int s = 0;
    for (size_t i = 0; i < cfg.n; ++i) s += Int(static_cast<long>(fc.hyps[h].normal[i])) * cfg.B.at(i, j) * orient;
    if (s > 0) out.push_back(j);
  }
  return out;
}

bool is_collinear(const FaceComplex& fc, size_t c1, size_t c2, size_t c3) {
  bool common = false;
  for (size_t f = 0; f < fc.faces.size() && !common; ++f)
    if (fc.leq(f, c1) && fc.leq(f, c2) && fc.leq(f, c3)) common = true;
  if (!common) return false;
  if (c1 == c2 || c2 == c3) return true;
  if (c1 == c3) return false;
  // exact witness: c2-point = (1-t) c1-point + t c3-point with everything in
  // relative interiors; barycentric variables p (over V1), q (over V3),
  // mu (over V2), all strictly positive
  const auto& v1 = fc.faces[c1].verts;
  const auto& v2 = fc.faces[c2].verts;
  const auto& v3 = fc.faces[c3].verts;
  size_t n = fc.n;
  size_t nv = v1.size() + v3.size() + v2.size();
  std::vector<VecQ> a(n + 2, VecQ(nv, Rat(0)));
  VecQ b(n + 2, Rat(0));
  size_t col = 0;
  for (const auto& v : v1) {
    for (size_t i = 0; i < n; ++i) a[i][col] = v[i];
    a[n][col] = 1;
    ++col;
  }
  for (const auto& v : v3) {
    for (size_t i = 0; i < n; ++i) a[i][col] = v[i];
    a[n][col] = 1;
    ++col;
  }
  for (const auto& v : v2) {
    for (size_t i = 0; i < n; ++i) a[i][col] = -v[i];
    a[n + 1][col] = 1;
    ++col;
  }
  b[n] = 1;
  b[n + 1] = 1;
  return strict_feasible(a, b, std::vector<bool>(nv, true));
}

std::vector<CollinearTriple> collinear_triples(const WeightConfig& cfg, const FaceComplex& fc,
                                               const Rat& radius, bool anchor_core) {
  Zonotope z = zonotope(cfg);
  if (radius < z.diam_bound && !anchor_core)
    throw DomainError("RadiusTooSmall", "radius must be at least the zonotope diameter bound");
  Rat lo = -radius, hi = Rat(1) + radius;
  auto in_range = [&](size_t f) {
    for (const auto& v : fc.faces[f].verts)
      for (const auto& x : v)
        if (x < lo || x > hi) return false;
    return true;
  };
  std::vector<size_t> cs;
  for (size_t c : fc.chambers())
    if (in_range(c)) cs.push_back(c);

  // group triples through common lower faces to prune
  std::vector<size_t> anchors;
  for (size_t f = 0; f < fc.faces.size(); ++f) {
    if (anchor_core) {
      bool touches = false;
      for (const auto& v : fc.faces[f].verts) {
        bool ok = true;
        for (const auto& x : v)
          if (x < Rat(-1) || x > Rat(2)) ok = false;
        if (ok) touches = true;
      }
      if (!touches) continue;
    }
    anchors.push_back(f);
  }
  std::set<std::tuple<size_t, size_t, size_t>> cand;
  for (size_t f : anchors) {
    std::vector<size_t> above;
    for (size_t c : cs)
      if (fc.leq(f, c)) above.push_back(c);
    for (size_t x : above)
      for (size_t y : above)
        for (size_t w : above) cand.insert({x, y, w});
  }
  std::vector<CollinearTriple> out;
  for (const auto& [x, y, w] : cand)
    if (is_collinear(fc, x, y, w)) out.push_back({x, y, w});
  return out;
}

ZetaData compute_zeta(const WeightConfig& cfg) {
  ZetaData zd;
  zd.exp_value.assign(cfg.n, Rat(1));
  for (size_t j = 0; j < cfg.d; ++j) {
    VecI col(cfg.n);
    for (size_t i = 0; i < cfg.n; ++i) col[i] = cfg.B.at(i, j);
    Int nj = content(col);  // |n_j| for b_j = n_j * primitive generator
    Label bj = cfg.b_col(j);
    zd.weights.push_back({nj, bj});
    if (nj != 1) {
      for (size_t k = 0; k < cfg.n; ++k) {
        long e = static_cast<long>(bj[k]);
        Rat f;
        if (e >= 0) {
          Int p;
          mpz_pow_ui(p.get_mpz_t(), nj.get_mpz_t(), static_cast<unsigned long>(e));
          f = rat_of(p);
        } else {
          Int p;
          mpz_pow_ui(p.get_mpz_t(), nj.get_mpz_t(), static_cast<unsigned long>(-e));
          f = Rat(1) / rat_of(p);
        }
        zd.exp_value[k] *= f;
      }
    }
  }
  return zd;
}

bool is_generic(const WeightConfig& cfg, const VecQ& rho) {
  // generic iff rho avoids every hyperplane spanned by the b_i; it is
  // enough to test the primitive normals of (n-1)-subsets
  size_t k = cfg.n - 1;
  std::vector<size_t> idx(k);
  bool generic = true;
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
    if (!generic) return;
    if (pos == k) {
      IntMatrix sub(k, cfg.n);
      for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < cfg.n; ++c) sub.at(r, c) = cfg.B.at(c, idx[r]);
      auto ker = primitive_kernel_vector(sub);
      if (ker) {
        Rat s(0);
        for (size_t i = 0; i < cfg.n; ++i) s += rat_of((*ker)[i]) * rho[i];
        if (s == 0) generic = false;
      }
      return;
    }
    for (size_t j = start; j + (k - pos) <= cfg.d; ++j) {
      idx[pos] = j;
      rec(pos + 1, j + 1);
    }
  };
  if (cfg.n == 1) {
    bool nz = false;
    for (const auto& x : rho)
      if (x != 0) nz = true;
    return nz;
  }
  rec(0, 0);
  return generic;
}

bool union_check(const WeightConfig& cfg, const FaceComplex& fc, size_t face) {
  if (fc.faces[face].dim == static_cast<int>(cfg.n))
    throw NotAWallPair("union check applies to non-chamber faces");
  auto lc = lattice_points_LC(cfg, fc, face);
  std::set<Label> uni;
  for (size_t c : fc.chambers_above(face))
    for (const auto& p : lattice_points_LC(cfg, fc, c)) uni.insert(p);
  return std::set<Label>(lc.begin(), lc.end()) == uni;
}

}  // namespace gkz
