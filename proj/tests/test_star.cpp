#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "kstar/consequences.hpp"
#include "kstar/evaluate.hpp"
#include "kstar/random_gen.hpp"
#include "kstar/star.hpp"
#include "test_util.hpp"

using namespace kstar;

TEST_CASE("star series shape") {
  GraphSeries star = star_product();
  CHECK(star.term_count(0) == 1);
  CHECK(star.term_count(1) == 1);
  CHECK(star.term_count(2) == 4);
  CHECK(star.term_count(3) == 13);

  CHECK(star.grade(1)[0].coeff == 1);
  CHECK(star.grade(1)[0].graph == parse_graph("2 1 ; 0 1"));

  std::multiset<Rational> grade2;
  for (const Term& t : star.grade(2)) grade2.insert(abs(t.coeff));
  CHECK(grade2 == std::multiset<Rational>{Rational(1, 2), Rational(1, 3),
                                          Rational(1, 3), Rational(1, 6)});
  std::multiset<Rational> grade3;
  for (const Term& t : star.grade(3)) grade3.insert(abs(t.coeff));
  CHECK(grade3.count(Rational(1, 6)) == 11);
  CHECK(grade3.count(Rational(1, 3)) == 2);

  for (int k = 0; k <= 3; ++k)
    for (const Term& t : star.grade(k)) {
      CHECK(t.graph.is_strict());
      SignedGraph c = canonical_form(t.graph);
      CHECK(c.sign == +1);
      CHECK(c.graph == t.graph);
    }
}

TEST_CASE("every star graph appears in the generated catalogue") {
  GraphSeries star = star_product();
  for (int k = 0; k <= 3; ++k) {
    auto all = generate_graphs(k, 2, true);
    for (const Term& t : star.grade(k))
      CHECK(std::find(all.begin(), all.end(), t.graph) != all.end());
  }
}

TEST_CASE("constant structure reduces the star-product to the Moyal series") {
  // With P12 = 1 every graph with an internal-to-internal edge vanishes, so
  // grade k must act as 1/k! times the k-th power of the bracket operator.
  // Cross-checks the 1/2! and 1/3! fan coefficients independently.
  PoissonStructure flat(2, {{1, 2, Poly::constant(2, 1)}});
  Rng rng(59);
  Poly f = random_poly(rng, 2), g = random_poly(rng, 2);
  auto coeffs = evaluate_series(star_product(), flat, {f, g});

  // fan(k, f, g) = sum over k index pairs of prod P^{i_t j_t} d_I f d_J g;
  // valid as written because the entries are constant.
  std::function<Poly(int, const Poly&, const Poly&)> fan =
      [&](int k, const Poly& df, const Poly& dg) -> Poly {
    if (k == 0) return df * dg;
    Poly acc(2);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        if (flat.entry(i, j).is_zero()) continue;
        acc += flat.entry(i, j) * fan(k - 1, df.diff(i), dg.diff(j));
      }
    return acc;
  };

  Rational factorial = 1;
  for (int k = 0; k <= 3; ++k) {
    if (k > 0) factorial *= k;
    CHECK(coeffs[k] == Rational(1) / factorial * fan(k, f, g));
  }
}

TEST_CASE("insertion spreads edges by the Leibniz rule") {
  Graph wedge = parse_graph("2 1 ; 0 1");
  Graph bare = parse_graph("2 0");

  auto nested = insert_graph(wedge, wedge, 0);
  CHECK(nested.size() == 3);  // the incoming edge picks any inner vertex
  for (const Graph& g : nested) {
    CHECK(g.sinks == 3);
    CHECK(g.internals == 2);
  }

  auto product_rule = insert_graph(bare, wedge, 0);
  CHECK(product_rule.size() == 2);

  auto no_edges = insert_graph(wedge, bare, 0);
  CHECK(no_edges.size() == 1);
  CHECK(no_edges[0] == parse_graph("3 1 ; 0 1"));
}

TEST_CASE("branch count follows the redistribution formula") {
  Rng rng(113);
  for (int it = 0; it < 40; ++it) {
    Graph outer = kstar::testutil::random_graph(rng, 2, rng.uniform(1, 2), true);
    Graph inner = kstar::testutil::random_graph(rng, 2, rng.uniform(0, 2), false);
    int sink = rng.uniform(0, 1);
    auto branches = insert_graph(inner, outer, sink);
    std::size_t expected = 1;
    for (int e = 0; e < outer.in_degree(sink); ++e)
      expected *= static_cast<std::size_t>(inner.vertex_count());
    CHECK(branches.size() == expected);
    for (const Graph& b : branches) {
      CHECK(b.sinks == 3);
      CHECK(b.internals == outer.internals + inner.internals);
      // redistribution cannot create tadpoles
      CHECK(b.has_tadpole() == (outer.has_tadpole() || inner.has_tadpole()));
    }
  }
}

TEST_CASE("raw associator term counts") {
  GraphSeries raw = associator(star_product());
  CHECK(raw.term_count(0) == 2);
  CHECK(raw.term_count(1) == 6);
  CHECK(raw.term_count(2) == 38);
  CHECK(raw.term_count(3) == 218);
}

TEST_CASE("reduction merges the associator down to the obstruction") {
  GraphSeries red = reduce_skew(associator(star_product()));
  CHECK(red.term_count(0) == 0);
  CHECK(red.term_count(1) == 0);
  CHECK(red.term_count(2) == 3);
  CHECK(red.term_count(3) == 39);

  GraphSeries jac = jacobiator().series;
  CHECK((grade_slice(red, 2) - Rational(2, 3) * jac).reduced().empty());
}

TEST_CASE("reduction is idempotent and evaluation-preserving") {
  GraphSeries raw = associator(star_product());
  GraphSeries red = reduce_skew(raw);
  CHECK(reduce_skew(red) == red);

  PoissonStructure witness = PoissonStructure::non_poisson_witness();
  Rng rng(61);
  std::vector<Poly> args = {random_poly(rng, 3, 2), random_poly(rng, 3, 2),
                            random_poly(rng, 3, 2)};
  auto raw_vals = evaluate_series(raw, witness, args);
  auto red_vals = evaluate_series(red, witness, args);
  for (int k = 0; k <= 3; ++k) CHECK(raw_vals[k] == red_vals[k]);
}

TEST_CASE("composed series against plain operator composition") {
  // Independent route: evaluate the two-sink star twice and subtract,
  // never touching the graph-insertion machinery.
  GraphSeries star = star_product();
  GraphSeries red = reduce_skew(associator(star));
  PoissonStructure witness = PoissonStructure::non_poisson_witness();
  Rng rng(67);
  Poly f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2),
       h = random_poly(rng, 3, 2);

  auto fg = evaluate_series(star, witness, {f, g});
  auto gh = evaluate_series(star, witness, {g, h});
  std::vector<Poly> numeric(4, Poly(3));
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) {
      auto left = evaluate_series(star, witness, {fg[b], h});
      auto right = evaluate_series(star, witness, {f, gh[b]});
      numeric[a + b] += left[a] - right[a];
    }
  }
  auto composed = evaluate_series(red, witness, {f, g, h});
  for (int k = 0; k <= 3; ++k) CHECK(numeric[k] == composed[k]);
}

TEST_CASE("restriction partitions the cubic associator") {
  GraphSeries red = reduce_skew(associator(star_product()));
  GraphSeries cubic = grade_slice(red, 3);

  CHECK(restrict_orders(cubic, {0, 0, 0}).empty());

  GraphSeries sum(3);
  for (const auto& o : orders_present(cubic, 3))
    sum = sum + restrict_orders(cubic, o);
  CHECK((sum - cubic).reduced().empty());
  CHECK(sum.term_count(3) == cubic.term_count(3));

  GraphSeries jac = jacobiator().series;
  CHECK(restrict_orders(jac, {1, 1, 1}) == jac);
}

TEST_CASE("series file round trip") {
  GraphSeries star = star_product();
  std::ostringstream out;
  write_series(out, star);
  std::istringstream in(out.str());
  GraphSeries back = read_series(in);
  CHECK(back == star);

  GraphSeries jback = series_from_json_string(series_to_json_string(star));
  CHECK(jback == star);
}

TEST_CASE("series file rejects malformed lines") {
  std::istringstream no_star("1/2 2 1 ; 0 1\n");
  CHECK_THROWS_AS(read_series(no_star), ParseError);
  std::istringstream bad_graph("1/2 * 2 1 ; 0 9\n");
  CHECK_THROWS_AS(read_series(bad_graph), ParseError);
  std::istringstream empty("\n  \n");
  CHECK_THROWS_AS(read_series(empty), std::invalid_argument);
  std::istringstream mixed_sinks("1 * 2 1 ; 0 1\n1 * 3 1 ; 0 1\n");
  CHECK_THROWS_AS(read_series(mixed_sinks), std::invalid_argument);
}
