#include <random>

#include "doctest.h"
#include "gkz/exactlat.hpp"

using namespace gkz;

namespace {

IntMatrix gauss_b() { return IntMatrix::from_rows({{1, 1, -1, -1}}); }

bool is_unimodular(const IntMatrix& u) {
  Int d = det(u);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("normal forms: identity") {
  NormalForms nf = normal_forms(IntMatrix::identity(3));
  CHECK(nf.hermite == IntMatrix::identity(3));
  CHECK(nf.smith == IntMatrix::identity(3));
}

TEST_CASE("normal forms: row vector") {
  NormalForms nf = normal_forms(gauss_b());
  CHECK(nf.smith.at(0, 0) == 1);
  for (size_t j = 1; j < 4; ++j) CHECK(nf.smith.at(0, j) == 0);
}

TEST_CASE("normal forms: diag(2,3) -> diag(1,6)") {
  NormalForms nf = normal_forms(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(nf.smith.at(0, 0) == 1);
  CHECK(nf.smith.at(1, 1) == 6);
}

TEST_CASE("normal form transforms are unimodular and exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    NormalForms nf = normal_forms(m);
    CHECK(nf.hermite_u.mul(m) == nf.hermite);
    CHECK(nf.smith_u.mul(m).mul(nf.smith_v) == nf.smith);
    CHECK(is_unimodular(nf.hermite_u));
    CHECK(is_unimodular(nf.smith_u));
    CHECK(is_unimodular(nf.smith_v));
    // divisibility chain
    size_t n = std::min(r, c);
    for (size_t t = 0; t + 1 < n; ++t) {
      if (nf.smith.at(t + 1, t + 1) != 0) {
        REQUIRE(nf.smith.at(t, t) != 0);
        CHECK(nf.smith.at(t + 1, t + 1) % nf.smith.at(t, t) == 0);
      }
    }
  }
}

TEST_CASE("gale dual of the Gauss weights") {
  IntMatrix a = gale_dual(gauss_b());
  REQUIRE(a.rows() == 3);
  REQUIRE(a.cols() == 4);
  CHECK(a.mul(gauss_b().transpose()).is_zero());
  CHECK(has_unit_invariants(a));
  // kernel of A = row lattice of B
  IntMatrix back = gale_dual(a);
  CHECK(hermite_form(back).h == hermite_form(gauss_b()).h);
}

TEST_CASE("gale dual: B = I_n has empty dual") {
  IntMatrix a = gale_dual(IntMatrix::identity(3));
  CHECK(a.rows() == 0);
}

TEST_CASE("gale dual of [2,-1,-1]") {
  IntMatrix b = IntMatrix::from_rows({{2, -1, -1}});
  IntMatrix a = gale_dual(b);
  REQUIRE(a.rows() == 2);
  CHECK(a.mul(b.transpose()).is_zero());
  CHECK(has_unit_invariants(a));
}

TEST_CASE("gale dual rejects non-saturated input") {
  CHECK_THROWS_AS(gale_dual(IntMatrix::from_rows({{2, 0}, {0, 2}})), NotSaturated);
}

TEST_CASE("splittings satisfy the defining identities") {
  for (auto rows : {std::vector<std::vector<long>>{{1, 1, -1, -1}},
                    {{2, -1, -1}},
                    {{1, -1, 0, 0, 1, -1}, {0, 0, 1, -1, 1, -1}}}) {
    IntMatrix b = IntMatrix::from_rows(rows);
    IntMatrix a = gale_dual(b);
    Splittings sp = choose_splittings(b, a);
    CHECK(b.mul(sp.si) == IntMatrix::identity(b.rows()));
    CHECK(a.mul(sp.k) == IntMatrix::identity(a.rows()));
    CHECK(sp.si.transpose().mul(sp.k).is_zero());
    CHECK(sp.p.mul(a.transpose()) == IntMatrix::identity(a.rows()));
    CHECK(sp.p.mul(sp.si).is_zero());
  }
}

TEST_CASE("Gauss canonical section picks the first coordinate") {
  IntMatrix b = gauss_b();
  Splittings sp = choose_splittings(b, gale_dual(b));
  CHECK(sp.si.at(0, 0) == 1);
  CHECK(sp.si.at(1, 0) == 0);
  CHECK(sp.si.at(2, 0) == 0);
  CHECK(sp.si.at(3, 0) == 0);
}

TEST_CASE("projection reconstructs every lattice vector") {
  WeightConfig cfg = validate_config(gauss_b());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int t = 0; t < 1000; ++t) {
    VecI chi(cfg.d);
    for (auto& x : chi) x = dist(rng);
    VecI lhs = cfg.Si.mul(cfg.B.mul(chi));
    VecI rhs = cfg.A.transpose().mul(cfg.P.mul(chi));
    for (size_t i = 0; i < cfg.d; ++i) CHECK(lhs[i] + rhs[i] == chi[i]);
  }
}

TEST_CASE("validate_config accepts the corpus") {
  for (auto rows : {std::vector<std::vector<long>>{{1, 1, -1, -1}},
                    {{2, -1, -1}},
                    {{1, -1}},
                    {{1, -1, 0, 0, 1, -1}, {0, 0, 1, -1, 1, -1}}}) {
    WeightConfig cfg = validate_config(IntMatrix::from_rows(rows));
    CHECK(cfg.quasi_symmetric);
    CHECK(cfg.lattice_surjective);
    CHECK(cfg.zero_sum);
    // <h, a_i> = 1
    for (size_t j = 0; j < cfg.d; ++j) {
      Int s = 0;
      for (size_t i = 0; i < cfg.m; ++i) s += cfg.h_cov[i] * cfg.A.at(i, j);
      CHECK(s == 1);
    }
  }
}

TEST_CASE("validate_config rejects [1,-2]") {
  CHECK_THROWS_AS(validate_config(IntMatrix::from_rows({{1, -2}})), QuasiSymmetryViolation);
}

TEST_CASE("validate_config rejects zero columns") {
  CHECK_THROWS_AS(validate_config(IntMatrix::from_rows({{1, -1, 0}})), ZeroColumn);
}

TEST_CASE("three-line example is quasi-symmetric") {
  WeightConfig cfg = validate_config(
      IntMatrix::from_rows({{1, -1, 0, 0, 1, -1}, {0, 0, 1, -1, 1, -1}}));
  CHECK(cfg.m == 4);
}
