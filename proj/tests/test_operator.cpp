#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kstar/consequences.hpp"
#include "kstar/evaluate.hpp"
#include "kstar/star.hpp"
#include "test_util.hpp"

using namespace kstar;
using kstar::testutil::random_graph;

namespace {

PoissonStructure constant_symplectic_2d() {
  return PoissonStructure(2, {{1, 2, Poly::constant(2, 1)}});
}

}  // namespace

TEST_CASE("wedge realizes the Poisson bracket") {
  Graph wedge = parse_graph("2 1 ; 0 1");
  PoissonStructure flat = constant_symplectic_2d();
  Poly u1 = Poly::variable(2, 1), u2 = Poly::variable(2, 2);
  CHECK(evaluate_graph(wedge, flat, {u1, u2}) == Poly::constant(2, 1));

  PoissonStructure rot = PoissonStructure::so3();
  CHECK(evaluate_graph(wedge, rot,
                       {Poly::variable(3, 1), Poly::variable(3, 2)}) ==
        Poly::variable(3, 3));
}

TEST_CASE("stacked wedge against a hand-rolled index sum") {
  // Independent oracle: expand sum over all 2^4 index assignments of
  // P^{i1 j1} P^{i2 j2} d_{i1} d_{i2} f * d_{j1} d_{j2} g with plain
  // polynomial arithmetic, no graph machinery.
  PoissonStructure flat = constant_symplectic_2d();
  Poly f = Poly::parse("u1^2", 2), g = Poly::parse("u2^2", 2);
  Poly expected(2);
  for (int i1 = 1; i1 <= 2; ++i1)
    for (int j1 = 1; j1 <= 2; ++j1)
      for (int i2 = 1; i2 <= 2; ++i2)
        for (int j2 = 1; j2 <= 2; ++j2)
          expected += flat.entry(i1, j1) * flat.entry(i2, j2) *
                      f.diff(i1).diff(i2) * g.diff(j1).diff(j2);

  Poly got = evaluate_graph(parse_graph("2 2 ; 0 1 ; 0 1"), flat, {f, g});
  CHECK(got == expected);
  CHECK(got == Poly::constant(2, 4));  // frozen from the oracle
}

TEST_CASE("bare product and tadpole semantics") {
  PoissonStructure rot = PoissonStructure::so3();
  Poly f = Poly::parse("u1*u2", 3), g = Poly::parse("u3^2", 3);
  CHECK(evaluate_graph(parse_graph("2 0"), rot, {f, g}) == f * g);

  // A double self-edge reads d_i d_j P^{ij}, identically zero.
  CHECK(evaluate_graph(parse_graph("1 1 ; 1 1"), rot, {f}).is_zero());

  // Single tadpole: d_i P^{ij} d_j(arg); the rotation structure is
  // divergence-free.
  CHECK(evaluate_graph(parse_graph("1 1 ; 1 0"), rot, {f}).is_zero());
  // ... but d_1(u1) d_2(u2) survives for P12 = u1.
  PoissonStructure div(2, {{1, 2, Poly::parse("u1", 2)}});
  CHECK(evaluate_graph(parse_graph("1 1 ; 1 0"), div,
                       {Poly::variable(2, 2)}) ==
        Poly::constant(2, 1));
}

TEST_CASE("multilinearity in each argument") {
  Rng rng(31);
  PoissonStructure rot = PoissonStructure::so3();
  for (int it = 0; it < 20; ++it) {
    Graph g = random_graph(rng, 2, rng.uniform(1, 2), true);
    Poly a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2),
         c = random_poly(rng, 3, 2);
    CHECK(evaluate_graph(g, rot, {a + b, c}) ==
          evaluate_graph(g, rot, {a, c}) + evaluate_graph(g, rot, {b, c}));
    CHECK(evaluate_graph(g, rot, {a, b + c}) ==
          evaluate_graph(g, rot, {a, b}) + evaluate_graph(g, rot, {a, c}));
  }
}

TEST_CASE("swapping one vertex's edge pair negates the value") {
  Rng rng(37);
  PoissonStructure rot = PoissonStructure::so3();
  for (int it = 0; it < 20; ++it) {
    int k = rng.uniform(1, 2);
    Graph g = random_graph(rng, 2, k, true);
    Graph swapped = g;
    int v = rng.uniform(0, k - 1);
    std::swap(swapped.targets[v].first, swapped.targets[v].second);
    Poly a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2);
    CHECK(evaluate_graph(g, rot, {a, b}) ==
          -evaluate_graph(swapped, rot, {a, b}));
  }
}

TEST_CASE("evaluation factors through the canonical form") {
  Rng rng(41);
  PoissonStructure rot = PoissonStructure::so3();
  for (int it = 0; it < 30; ++it) {
    Graph g = random_graph(rng, 2, rng.uniform(1, 2), rng.uniform(0, 1) == 1);
    SignedGraph c = canonical_form(g);
    Poly a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2);
    Poly direct = evaluate_graph(g, rot, {a, b});
    if (c.sign == 0) {
      CHECK(direct.is_zero());
    } else {
      CHECK(direct == Rational(c.sign) * evaluate_graph(c.graph, rot, {a, b}));
    }
  }
}

TEST_CASE("series evaluation and unitality") {
  GraphSeries star = star_product();
  PoissonStructure rot = PoissonStructure::so3();
  Rng rng(43);
  Poly f = random_poly(rng, 3), g = random_poly(rng, 3);
  auto coeffs = evaluate_series(star, rot, {f, g});
  CHECK(coeffs[0] == f * g);

  Poly one = Poly::constant(3, 1);
  auto right = evaluate_series(star, rot, {f, one});
  auto left = evaluate_series(star, rot, {one, f});
  CHECK(right[0] == f);
  CHECK(left[0] == f);
  for (int k = 1; k <= 3; ++k) {
    CHECK(right[k].is_zero());
    CHECK(left[k].is_zero());
  }

  auto bracket = evaluate_series(
      star, rot, {Poly::variable(3, 1), Poly::variable(3, 2)});
  CHECK(bracket[1] == Poly::variable(3, 3));
}

TEST_CASE("jacobi flag and the non-Poisson witness") {
  CHECK(PoissonStructure::so3().jacobi_verified());
  PoissonStructure witness = PoissonStructure::non_poisson_witness();
  CHECK_FALSE(witness.jacobi_verified());

  // Confirm by direct evaluation that the witness's Jacobiator is nonzero
  // on a coordinate triple.
  GraphSeries jac = jacobiator().series;
  Poly u1 = Poly::variable(3, 1), u2 = Poly::variable(3, 2),
       u3 = Poly::variable(3, 3);
  auto vals = evaluate_series(jac, witness, {u1, u2, u3});
  CHECK_FALSE(vals[2].is_zero());
  auto zero_vals = evaluate_series(jac, PoissonStructure::so3(), {u1, u2, u3});
  CHECK(zero_vals[2].is_zero());
}

TEST_CASE("jacobi flag agrees with the graph-level detector") {
  // Two independent routes: the constructor's bracket computation and the
  // Jacobiator graph sum evaluated on coordinate triples.
  Rng rng(109);
  GraphSeries jac = jacobiator().series;
  for (int it = 0; it < 8; ++it) {
    int dim = 3;
    std::vector<std::tuple<int, int, Poly>> upper;
    for (int i = 1; i <= dim; ++i)
      for (int j = i + 1; j <= dim; ++j)
        upper.emplace_back(i, j, random_poly(rng, dim, 1, 1));
    PoissonStructure p(dim, upper);

    bool graphs_vanish = true;
    for (int a = 1; a <= dim; ++a)
      for (int b = a + 1; b <= dim; ++b)
        for (int c = b + 1; c <= dim; ++c) {
          auto vals = evaluate_series(jac, p,
                                      {Poly::variable(dim, a),
                                       Poly::variable(dim, b),
                                       Poly::variable(dim, c)});
          graphs_vanish = graphs_vanish && vals[2].is_zero();
        }
    CHECK(p.jacobi_verified() == graphs_vanish);
  }
}

TEST_CASE("poisson json round trip and validation") {
  PoissonStructure rot = PoissonStructure::so3();
  PoissonStructure back = PoissonStructure::from_json_string(rot.to_json_string());
  CHECK(back.dim() == 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(back.entry(i, j) == rot.entry(i, j));
  CHECK(back.entry(2, 1) == -back.entry(1, 2));
  CHECK(back.entry(1, 1).is_zero());

  CHECK_THROWS_AS(PoissonStructure(2, {{2, 1, Poly(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(PoissonStructure(2, {{1, 1, Poly(2)}}), std::invalid_argument);
}

TEST_CASE("tri-differential normal form of the wedge") {
  PoissonStructure flat = constant_symplectic_2d();
  GraphSeries s(3);
  s.add(1, parse_graph("3 1 ; 0 1"));
  TriDiffOperator op = to_tridiff(s, 1, flat);
  REQUIRE(op.coeff.size() == 2);
  std::array<MultiIndex, 3> k1{MultiIndex{1, 0}, MultiIndex{0, 1},
                               MultiIndex{0, 0}};
  std::array<MultiIndex, 3> k2{MultiIndex{0, 1}, MultiIndex{1, 0},
                               MultiIndex{0, 0}};
  CHECK(op.coeff.at(k1) == Poly::constant(2, 1));
  CHECK(op.coeff.at(k2) == -Poly::constant(2, 1));
}

TEST_CASE("jacobiator's tri-differential form detects Poisson") {
  GraphSeries jac = jacobiator().series;
  CHECK(to_tridiff(jac, 2, PoissonStructure::so3()).is_zero());
  CHECK_FALSE(to_tridiff(jac, 2, PoissonStructure::non_poisson_witness()).is_zero());
}

TEST_CASE("tri-differential reconstruction matches evaluation") {
  Rng rng(47);
  GraphSeries red = reduce_skew(associator(star_product()));
  PoissonStructure witness = PoissonStructure::non_poisson_witness();
  for (int grade : {2, 3}) {
    TriDiffOperator op = to_tridiff(red, grade, witness);
    Poly f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2),
         h = random_poly(rng, 3, 2);
    auto direct = evaluate_series(red, witness, {f, g, h});
    CHECK(apply_tridiff(op, f, g, h) == direct[grade]);
  }
}

TEST_CASE("affine covariance of graph evaluation") {
  Rng rng(53);
  PoissonStructure rot = PoissonStructure::so3();
  AffineMap map = random_affine(rng, 3);
  AffineMap inv = map.inverse();
  PoissonStructure pushed = pushforward(rot, map);

  Poly f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2);
  std::vector<Poly> moved = {f.compose_affine(inv.matrix, inv.shift),
                             g.compose_affine(inv.matrix, inv.shift)};
  for (const char* enc : {"2 1 ; 0 1", "2 2 ; 0 3 ; 2 1", "2 2 ; 0 1 ; 0 2"}) {
    Graph gr = parse_graph(enc);
    Poly lhs = evaluate_graph(gr, pushed, moved);
    Poly rhs = evaluate_graph(gr, rot, {f, g})
                   .compose_affine(inv.matrix, inv.shift);
    CHECK(lhs == rhs);
  }
}
