#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace gkz;

namespace {

const WeightConfig& gauss() { return fixtures::config("gauss"); }
const WeightConfig& two11() { return fixtures::config("two11"); }
const WeightConfig& minimal() { return fixtures::config("minimal"); }
const WeightConfig& squarecross() { return fixtures::config("squarecross"); }

Rat q(long num, long den = 1) { return Rat(num, den); }

}  // namespace

TEST_CASE("zonotope of Gauss is [-1,1]") {
  Zonotope z = zonotope(gauss());
  CHECK(z.box_halfwidth[0] == 1);
  CHECK(z.contains({q(1)}));
  CHECK(z.contains({q(-1)}));
  CHECK(!z.contains({q(11, 10)}));
}

TEST_CASE("zonotope of [2,-1,-1] is [-1,1]") {
  Zonotope z = zonotope(two11());
  CHECK(z.box_halfwidth[0] == 1);
}

TEST_CASE("zonotope of squarecross is the hexagon") {
  Zonotope z = zonotope(squarecross());
  // facet normal classes: +-(1,0), +-(0,1), +-(1,-1)
  std::set<Label> normals;
  for (const auto& f : z.facets) {
    Label l(2);
    l[0] = to_i64(f.normal[0]);
    l[1] = to_i64(f.normal[1]);
    normals.insert(l);
  }
  CHECK(normals == std::set<Label>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}});
  CHECK(z.contains({q(1), q(1)}));
  CHECK(z.contains({q(1), q(0)}));
  CHECK(!z.contains({q(1), q(-1)}));
}

TEST_CASE("Gauss face complex: two classes") {
  const WeightConfig& cfg = gauss();
  const FaceComplex& fc = fixtures::complex("gauss");
  CHECK(fc.num_classes() == 2);
  for (size_t f : fc.chambers()) CHECK(fc.faces[f].dim == 1);
  // canonical representatives inside [0,1)
  for (size_t r : fc.class_reps) {
    VecQ p = fc.faces[r].rep;
    VecQ canon(p.size());
    for (size_t i = 0; i < p.size(); ++i) canon[i] = p[i] - rat_of(ifloor(p[i]));
    for (const auto& x : canon) {
      CHECK(x >= 0);
      CHECK(x < 1);
    }
  }
}

TEST_CASE("squarecross face complex: 2 chamber classes, 3 edge classes, 1 vertex class") {
  const WeightConfig& cfg = squarecross();
  const FaceComplex& fc = fixtures::complex("squarecross");
  std::map<int, std::set<size_t>> classes_by_dim;
  for (const auto& f : fc.faces) classes_by_dim[f.dim].insert(f.cls);
  CHECK(classes_by_dim[2].size() == 2);
  CHECK(classes_by_dim[1].size() == 3);
  CHECK(classes_by_dim[0].size() == 1);
}

TEST_CASE("Gauss lattice sets match the worked example") {
  const WeightConfig& cfg = gauss();
  const FaceComplex& fc = fixtures::complex("gauss");
  for (size_t f = 0; f < fc.faces.size(); ++f) {
    const Face& face = fc.faces[f];
    if (face.dim == 1) {
      Rat lo = face.verts[0][0];
      long a = to_i64(ifloor(lo));
      auto lc = lattice_points_LC(cfg, fc, f);
      REQUIRE(lc.size() == 2);
      CHECK(lc[0] == Label{a});
      CHECK(lc[1] == Label{a + 1});
    } else {
      long a = to_i64(ifloor(face.rep[0]));
      auto lc = lattice_points_LC(cfg, fc, f);
      REQUIRE(lc.size() == 3);
      CHECK(lc[0] == Label{a - 1});
      CHECK(lc[1] == Label{a});
      CHECK(lc[2] == Label{a + 1});
    }
  }
}

TEST_CASE("squarecross chambers carry 3 lattice points") {
  const WeightConfig& cfg = squarecross();
  const FaceComplex& fc = fixtures::complex("squarecross");
  for (size_t c : fc.chambers()) CHECK(lattice_points_LC(cfg, fc, c).size() == 3);
}

TEST_CASE("monotonicity: L_C shrinks upward") {
  for (const char* name : {"gauss", "squarecross"}) {
    const WeightConfig& cfg = fixtures::config(name);
    const FaceComplex& fc = fixtures::complex(name);
    for (size_t a = 0; a < fc.faces.size(); ++a)
      for (size_t b = 0; b < fc.faces.size(); ++b) {
        if (a == b || !fc.leq(a, b)) continue;
        auto la = lattice_points_LC(cfg, fc, a);
        auto lb = lattice_points_LC(cfg, fc, b);
        for (const auto& p : lb)
          CHECK(std::binary_search(la.begin(), la.end(), p));
      }
  }
}

TEST_CASE("Gauss wall sets") {
  const WeightConfig& cfg = gauss();
  const FaceComplex& fc = fixtures::complex("gauss");
  // the vertex {0} and its two chambers
  for (const auto& w : fc.walls()) {
    if (fc.faces[w.wall].rep != VecQ{q(0)}) continue;
    size_t cpos = fc.faces[w.lo].rep[0] > 0 ? w.lo : w.hi;
    size_t cneg = cpos == w.lo ? w.hi : w.lo;
    CHECK(wall_set_J(cfg, fc, w.wall, cpos) == std::vector<size_t>{0, 1});
    CHECK(wall_set_J(cfg, fc, w.wall, cneg) == std::vector<size_t>{2, 3});
  }
}

TEST_CASE("squarecross wall set through y=0") {
  const WeightConfig& cfg = squarecross();
  const FaceComplex& fc = fixtures::complex("squarecross");
  bool seen = false;
  for (const auto& w : fc.walls()) {
    const Face& wall = fc.faces[w.wall];
    if (wall.rep[1] != 0) continue;
    // equation y = 0, chamber above
    size_t above = fc.faces[w.lo].rep[1] > 0 ? w.lo : w.hi;
    if (fc.faces[above].rep[1] <= 0) continue;
    CHECK(wall_set_J(cfg, fc, w.wall, above) == std::vector<size_t>{2, 4});
    seen = true;
  }
  CHECK(seen);
}

TEST_CASE("wall complement structure") {
  // J, its mirror, and the wall-parallel set partition {1..d}; the
  // parallel part sums to zero
  for (const char* name : {"gauss", "squarecross"}) {
    const WeightConfig& cfg = fixtures::config(name);
    const FaceComplex& fc = fixtures::complex(name);
    for (const auto& w : fc.walls()) {
      auto jlo = wall_set_J(cfg, fc, w.wall, w.lo);
      auto jhi = wall_set_J(cfg, fc, w.wall, w.hi);
      std::set<size_t> seen(jlo.begin(), jlo.end());
      for (size_t i : jhi) {
        CHECK(!seen.count(i));
        seen.insert(i);
      }
      VecI parallel_sum(cfg.n, Int(0));
      for (size_t j = 0; j < cfg.d; ++j) {
        if (seen.count(j)) continue;
        for (size_t i = 0; i < cfg.n; ++i) parallel_sum[i] += cfg.B.at(i, j);
      }
      for (const auto& s : parallel_sum) CHECK(s == 0);
    }
  }
}

TEST_CASE("label containment across walls") {
  // chi in L_C0 \ L_C2 moved by any nonempty subset of J lands in L_C2
  for (const char* name : {"gauss", "two11", "minimal", "squarecross"}) {
    const WeightConfig& cfg = fixtures::config(name);
    const FaceComplex& fc = fixtures::complex(name);
    for (const auto& w : fc.walls()) {
      for (size_t c2 : {w.lo, w.hi}) {
        auto j = wall_set_J(cfg, fc, w.wall, c2);
        auto l0 = lattice_points_LC(cfg, fc, w.wall);
        auto l2 = lattice_points_LC(cfg, fc, c2);
        std::set<Label> l2set(l2.begin(), l2.end());
        for (const auto& chi : l0) {
          if (l2set.count(chi)) continue;
          for (size_t mask = 1; mask < (1u << j.size()); ++mask) {
            Label moved = chi;
            for (size_t bit = 0; bit < j.size(); ++bit)
              if (mask & (1u << bit)) moved = add(moved, cfg.b_col(j[bit]));
            CHECK(l2set.count(moved));
          }
        }
      }
    }
  }
}

TEST_CASE("boundary labels sit on the parallel facet") {
  // L_C0 \ L_C2 lies in rho0 + relint F for the facet F of Delta parallel
  // to the wall
  for (const char* name : {"gauss", "squarecross"}) {
    const WeightConfig& cfg = fixtures::config(name);
    const FaceComplex& fc = fixtures::complex(name);
    Zonotope z = zonotope(cfg);
    for (const auto& w : fc.walls()) {
      for (size_t c2 : {w.lo, w.hi}) {
        auto l0 = lattice_points_LC(cfg, fc, w.wall);
        auto l2 = lattice_points_LC(cfg, fc, c2);
        std::set<Label> l2set(l2.begin(), l2.end());
        const VecQ& rho0 = fc.faces[w.wall].rep;
        // wall normal oriented positive on c2
        size_t h = 0;
        for (size_t k = 0; k < fc.hyps.size(); ++k)
          if (fc.faces[w.wall].sign[k] == 0) { h = k; break; }
        int orient = fc.faces[c2].sign[h];
        for (const auto& chi : l0) {
          if (l2set.count(chi)) continue;
          // delta := chi - rho0 must lie on the facet of Delta minimizing
          // the oriented normal, strictly inside every other facet
          VecQ delta(cfg.n);
          for (size_t i = 0; i < cfg.n; ++i)
            delta[i] = Rat(static_cast<long>(chi[i])) - rho0[i];
          int tight = 0;
          for (const auto& fct : z.facets) {
            Rat s(0);
            for (size_t i = 0; i < cfg.n; ++i) s += rat_of(fct.normal[i]) * delta[i];
            REQUIRE(s <= fct.offset);
            if (s == fct.offset) {
              ++tight;
              // the tight facet is the one whose normal is the wall normal
              // oriented away from c2
              for (size_t i = 0; i < cfg.n; ++i)
                CHECK(fct.normal[i] == -orient * fc.hyps[h].normal[i]);
            }
          }
          CHECK(tight == 1);
        }
      }
    }
  }
}

TEST_CASE("face complex agrees with a point-location oracle") {
  std::mt19937_64 rng(23);
  for (const char* name : {"gauss", "squarecross"}) {
    const WeightConfig& cfg = fixtures::config(name);
    const FaceComplex& fc = fixtures::complex(name);
    std::uniform_int_distribution<long> num(-300, 300);
    size_t trials = cfg.n == 1 ? 4000 : 6000;
    for (size_t t = 0; t < trials; ++t) {
      VecQ p(cfg.n);
      for (auto& x : p) x = Rat(num(rng), 211);
      int f = fc.find_face(p);
      REQUIRE(f >= 0);
      auto sv = fc.sign_vector(p);
      CHECK(fc.faces[f].sign == sv);
      int zeros = 0;
      for (auto s : sv)
        if (s == 0) ++zeros;
      if (zeros == 0) CHECK(fc.faces[f].dim == static_cast<int>(cfg.n));
    }
  }
}

TEST_CASE("every non-chamber face lies under at least two chambers") {
  for (const char* name : {"gauss", "squarecross"}) {
    const WeightConfig& cfg = fixtures::config(name);
    const FaceComplex& fc = fixtures::complex(name);
    Rat lo = -fc.fatten + 1, hi = fc.fatten;  // interior faces only
    for (size_t f = 0; f < fc.faces.size(); ++f) {
      if (fc.faces[f].dim == static_cast<int>(cfg.n)) continue;
      bool interior = true;
      for (const auto& v : fc.faces[f].verts)
        for (const auto& x : v)
          if (x < lo || x > hi) interior = false;
      if (!interior) continue;
      CHECK(fc.chambers_above(f).size() >= 2);
    }
  }
}

TEST_CASE("union of chamber lattice sets over a lower face") {
  for (const char* name : {"gauss", "two11", "squarecross"}) {
    const WeightConfig& cfg = fixtures::config(name);
    const FaceComplex& fc = fixtures::complex(name);
    Rat lo = -fc.fatten + 1, hi = fc.fatten;
    for (size_t f = 0; f < fc.faces.size(); ++f) {
      if (fc.faces[f].dim == static_cast<int>(cfg.n)) continue;
      bool interior = true;
      for (const auto& v : fc.faces[f].verts)
        for (const auto& x : v)
          if (x < lo || x > hi) interior = false;
      if (!interior) continue;
      CHECK(union_check(cfg, fc, f));
    }
  }
}

TEST_CASE("zeta: primitive columns give zeta = 0") {
  CHECK(compute_zeta(gauss()).exp_value == VecQ{q(1)});
  CHECK(compute_zeta(squarecross()).exp_value == VecQ{q(1), q(1)});
}

TEST_CASE("zeta of [2,-1,-1] is 4") {
  CHECK(compute_zeta(two11()).exp_value == VecQ{q(4)});
}

TEST_CASE("genericity") {
  CHECK(is_generic(gauss(), {q(1)}));
  CHECK(!is_generic(gauss(), {q(0)}));
  CHECK(!is_generic(squarecross(), {q(1), q(0)}));
  CHECK(!is_generic(squarecross(), {q(1), q(1)}));
  CHECK(is_generic(squarecross(), {q(2), q(1)}));
}

TEST_CASE("collinear triples agree with a 1-d oracle") {
  const WeightConfig& cfg = gauss();
  const FaceComplex& fc = fixtures::complex("gauss");
  Rat radius = zonotope(cfg).diam_bound;
  auto triples = collinear_triples(cfg, fc, radius);
  std::set<std::tuple<size_t, size_t, size_t>> got;
  for (const auto& t : triples) got.insert({t.c1, t.c2, t.c3});

  // oracle: brute force over rational sample grids inside each chamber
  std::vector<size_t> cs;
  for (size_t c : fc.chambers()) {
    bool in = true;
    for (const auto& v : fc.faces[c].verts)
      if (v[0] < -radius || v[0] > Rat(1) + radius) in = false;
    if (in) cs.push_back(c);
  }
  std::set<std::tuple<size_t, size_t, size_t>> expect;
  for (size_t a : cs)
    for (size_t b : cs)
      for (size_t c : cs) {
        bool common = false;
        for (size_t f = 0; f < fc.faces.size() && !common; ++f)
          if (fc.leq(f, a) && fc.leq(f, b) && fc.leq(f, c)) common = true;
        if (!common) continue;
        bool coll = false;
        auto lo = [&](size_t ch) { return fc.faces[ch].verts[0][0]; };
        for (int i = 1; i < 8 && !coll; ++i)
          for (int j = 1; j < 8 && !coll; ++j)
            for (int k = 1; k < 8 && !coll; ++k) {
              Rat pa = lo(a) + Rat(i, 8), pb = lo(b) + Rat(j, 8), pc = lo(c) + Rat(k, 8);
              if ((pa <= pb && pb <= pc) || (pc <= pb && pb <= pa)) coll = true;
            }
        if (coll) expect.insert({a, b, c});
      }
  CHECK(got == expect);
}

TEST_CASE("collinear triples in the plane: crossing a vertex") {
  const WeightConfig& cfg = squarecross();
  const FaceComplex& fc = fixtures::complex("squarecross");
  // the two triangles of the unit square and the opposite triangle across
  // the vertex (1,1): a generic segment through the vertex crosses them
  int t1 = fc.find_face({q(2, 3), q(1, 3)});
  int vx = fc.find_face({q(1), q(1)});
  int t2 = fc.find_face({q(4, 3), q(5, 3)});
  REQUIRE(t1 >= 0);
  REQUIRE(vx >= 0);
  REQUIRE(t2 >= 0);
  CHECK(fc.leq(vx, t1));
  CHECK(fc.leq(vx, t2));
  CHECK(is_collinear(fc, static_cast<size_t>(t1), static_cast<size_t>(t1), static_cast<size_t>(t2)));
  // segment witness through the shared vertex
  CHECK(is_collinear(fc, static_cast<size_t>(t1), static_cast<size_t>(vx) == 0 ? 0 : static_cast<size_t>(t1), static_cast<size_t>(t2)));
}

TEST_CASE("collinearity is decided exactly for adjacent chambers") {
  const WeightConfig& cfg = gauss();
  const FaceComplex& fc = fixtures::complex("gauss");
  int c0 = fc.find_face({q(1, 2)});
  int c1 = fc.find_face({q(3, 2)});
  int c2 = fc.find_face({q(5, 2)});
  REQUIRE(c0 >= 0);
  REQUIRE(c1 >= 0);
  REQUIRE(c2 >= 0);
  CHECK(is_collinear(fc, c0, c0, c1));
  CHECK(is_collinear(fc, c0, c1, c1));
  CHECK(!is_collinear(fc, c0, c1, c0));
  // no common face below all three of (0,1),(1,2),(2,3)
  CHECK(!is_collinear(fc, c0, c1, c2));
}
