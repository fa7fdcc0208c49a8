#include <random>

#include "doctest.h"
#include "gkz/groupring.hpp"

using namespace gkz;

namespace {
GroupRingElement u(std::initializer_list<int64_t> e) { return GroupRingElement::monomial(Label(e)); }
}

TEST_CASE("ring arithmetic basics") {
  GroupRingElement a = u({1, 0}) + u({0, 1});
  GroupRingElement b = u({1, 0}) - u({0, 1});
  CHECK(a * b == u({2, 0}) - u({0, 2}));
  CHECK((a - a).is_zero());
  CHECK(a + (-a) == GroupRingElement::zero(2));
}

TEST_CASE("tau is an involution and a ring map") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-3, 3), c(-5, 5);
  for (int t = 0; t < 50; ++t) {
    GroupRingElement a(2), b(2);
    for (int k = 0; k < 4; ++k) {
      a.add_term({e(rng), e(rng)}, c(rng));
      b.add_term({e(rng), e(rng)}, c(rng));
    }
    CHECK(a.tau().tau() == a);
    CHECK((a * b).tau() == a.tau() * b.tau());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-3, 3), c(-5, 5);
  std::vector<Cplx> h{{0.4, 0.3}, {-1.2, 0.7}};
  for (int t = 0; t < 30; ++t) {
    GroupRingElement a(2), b(2);
    for (int k = 0; k < 3; ++k) {
      a.add_term({e(rng), e(rng)}, c(rng));
      b.add_term({e(rng), e(rng)}, c(rng));
    }
    Cplx lhs = (a * b).eval(h);
    Cplx rhs = a.eval(h) * b.eval(h);
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("exact Laurent division") {
  GroupRingElement f = (u({1, 0}) + u({0, 1})) * (u({-1, 0}) - GroupRingElement::constant(2, Int(3)));
  auto q = laurent_div(f, u({1, 0}) + u({0, 1}));
  REQUIRE(q.has_value());
  CHECK(*q == u({-1, 0}) - GroupRingElement::constant(2, Int(3)));
  CHECK(!laurent_div(f + GroupRingElement::one(2), u({1, 0}) + u({0, 1})).has_value());
}

TEST_CASE("determinant of a Laurent matrix") {
  std::vector<std::vector<GroupRingElement>> m = {
      {u({1}) + GroupRingElement::one(1), GroupRingElement::one(1)},
      {-u({1}), GroupRingElement::zero(1)}};
  CHECK(det(m) == u({1}));
}
