#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kstar/poly.hpp"
#include "kstar/random_gen.hpp"

using namespace kstar;

TEST_CASE("parse monomials and sums") {
  Poly u3 = Poly::parse("u3", 3);
  CHECK(u3 == Poly::variable(3, 3));

  Poly p = Poly::parse("1/2*u1^2 - u2", 2);
  CHECK(p.term_count() == 2);
  Poly expected(2);
  expected.add_term({2, 0}, Rational(1, 2));
  expected.add_term({0, 1}, -1);
  CHECK(p == expected);

  CHECK(Poly::parse("2*(u1 + u2)^2", 2) ==
        Poly::parse("2*u1^2 + 4*u1*u2 + 2*u2^2", 2));
  CHECK(Poly::parse("-u1 + u1", 1).is_zero());
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(Poly::parse("u4", 3), ParseError);
  try {
    Poly::parse("u1 + u4", 3);
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
  CHECK_THROWS_AS(Poly::parse("1 +", 2), ParseError);
  CHECK_THROWS_AS(Poly::parse("(u1", 2), ParseError);
  CHECK_THROWS_AS(Poly::parse("1/0", 2), ParseError);
  CHECK_THROWS_AS(Poly::parse("u", 2), ParseError);
  CHECK_THROWS_AS(Poly::parse("u1 u2", 2), ParseError);
}

TEST_CASE("partial derivatives") {
  Poly p = Poly::parse("u1^2*u2", 2);
  CHECK(p.diff(1) == Poly::parse("2*u1*u2", 2));
  CHECK(Poly::parse("u1", 2).diff(2).is_zero());
  CHECK(Poly::parse("u1*u2*u3", 3).diff(3) == Poly::parse("u1*u2", 3));
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(7);
  for (int it = 0; it < 30; ++it) {
    int dim = rng.uniform(1, 3);
    Poly a = random_poly(rng, dim, 2);
    Poly b = random_poly(rng, dim, 2);
    Poly c = random_poly(rng, dim, 2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("derivatives commute and satisfy the Leibniz rule") {
  Rng rng(11);
  for (int it = 0; it < 30; ++it) {
    int dim = rng.uniform(2, 3);
    Poly p = random_poly(rng, dim);
    Poly q = random_poly(rng, dim);
    int i = rng.uniform(1, dim), j = rng.uniform(1, dim);
    CHECK(p.diff(i).diff(j) == p.diff(j).diff(i));
    CHECK((p * q).diff(i) == p.diff(i) * q + p * q.diff(i));
  }
}

TEST_CASE("emitter round-trips up to term order") {
  Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    int dim = rng.uniform(1, 3);
    Poly p = random_poly(rng, dim);
    CHECK(Poly::parse(p.to_string(), dim) == p);
  }
  CHECK(Poly(2).to_string() == "0");
  CHECK(Poly::parse("0", 2).is_zero());
}

TEST_CASE("affine substitution") {
  Poly p = Poly::parse("u1^2", 1);
  CHECK(p.compose_affine({{Rational(2)}}, {Rational(1)}) ==
        Poly::parse("4*u1^2 + 4*u1 + 1", 1));

  Rng rng(17);
  for (int it = 0; it < 10; ++it) {
    int dim = rng.uniform(1, 3);
    AffineMap map = random_affine(rng, dim);
    AffineMap inv = map.inverse();
    Poly p = random_poly(rng, dim, 2);
    Poly round =
        p.compose_affine(map.matrix, map.shift).compose_affine(inv.matrix, inv.shift);
    CHECK(round == p);
  }
}
