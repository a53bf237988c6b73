#ifndef KSTAR_EVALUATE_HPP
#define KSTAR_EVALUATE_HPP

#include <array>
#include <map>

#include "kstar/graph_series.hpp"
#include "kstar/poisson.hpp"

namespace kstar {

// Reads the graph as a polydifferential operator: every internal vertex
// carries a copy of P, every sink carries the matching argument, and every
// edge differentiates the content of the vertex at its arrowhead. The sum
// runs over all assignments of an index 1..n to every edge. A self-edge
// differentiates its own vertex's P-entry after the vertex indices are fixed.
Poly evaluate_graph(const Graph& g, const PoissonStructure& p,
                    const std::vector<Poly>& args);

// Coefficients of hbar^0..hbar^order of the series applied to args.
std::vector<Poly> evaluate_series(const GraphSeries& s,
                                  const PoissonStructure& p,
                                  const std::vector<Poly>& args,
                                  int order = GraphSeries::max_grade);

// Tri-differential operator sum c^{IJK} d_I (x) d_J (x) d_K with polynomial
// coefficients; the normal form a three-sink graph sum expands to once the
// internal vertices are filled with a concrete P.
struct TriDiffOperator {
  int dim = 0;
  std::map<std::array<MultiIndex, 3>, Poly> coeff;

  bool is_zero() const { return coeff.empty(); }
};

TriDiffOperator to_tridiff(const GraphSeries& s, int grade,
                           const PoissonStructure& p);

Poly apply_tridiff(const TriDiffOperator& op, const Poly& f, const Poly& g,
                   const Poly& h);

}  // namespace kstar

#endif
