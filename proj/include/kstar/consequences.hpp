#ifndef KSTAR_CONSEQUENCES_HPP
#define KSTAR_CONSEQUENCES_HPP

#include <array>
#include <optional>
#include <string>

#include "kstar/graph_series.hpp"
#include "kstar/poisson.hpp"

namespace kstar {

// Which argument slot of (f, g, h) a consequence is built on.
enum class Slot { f = 0, g = 1, h = 2 };

// A graph sum that vanishes for every Poisson structure because it is a
// differential consequence of the Jacobi identity.
struct ConsequenceSum {
  std::string label;
  GraphSeries series;  // three sinks, single grade, reduced
};

// The cyclic sum {{f,g},h} + {{g,h},f} + {{h,f},g}, stored as three graphs
// with signs (+,-,-) once the bracket antisymmetry moves every inner wedge
// into the first slot of the outer one.
ConsequenceSum jacobiator();

// P^{ij} d_j Jac(.., d_i slot, ..): one extra vertex whose left edge lands
// on the slot sink and whose right edge is distributed by the Leibniz rule
// over every vertex of the Jacobiator graphs.
ConsequenceSum s_consequence(Slot slot);

// Jacobiator with a P-entry in the slot argument: the slot sink is replaced
// by a new internal vertex wired to a fresh sink, and the outer derivative
// distributes over the enclosed graph including the new vertex itself, which
// produces the tadpole terms.
struct IConsequence {
  ConsequenceSum full;
  GraphSeries tadpole;       // the self-edge branches, kept and reported
  GraphSeries tadpole_free;  // full minus tadpole
};

IConsequence i_consequence(Slot slot);

// P^{ij} Jac with two differentiated sinks; the restriction of the matching
// S-sum to its doubly-differentiated order.
ConsequenceSum wedged_jacobiator(Slot slot);

struct OrderIdentity {
  std::array<int, 3> order;
  std::string combination;   // human-readable right-hand side
  int eliminated = 0;        // terms of the associator matched at this order
  bool graph_equal = false;  // exact canonical graph-sum identity
  bool eval_equal = false;   // weaker check: equality after evaluation
};

struct ClaimReport {
  int associator_terms = 0;  // grade-3 term count after reduction
  std::vector<OrderIdentity> identities;
  std::vector<std::vector<int>> unexpected_orders;
  int total_eliminated = 0;
  bool pass = false;

  std::string to_text() const;
  std::string to_json_string() const;
};

// Checks the seven order-by-order identities that cancel the grade-3
// associator against S- and I-consequences, as exact canonical graph sums.
// The I-sums enter through their tadpole-free parts; the tadpole subsums are
// themselves vanishing consequences and are verified separately. The weaker
// evaluated check runs against the rotation structure on fixed arguments.
ClaimReport verify_claim(const GraphSeries& reduced_assoc);

struct SolveResult {
  bool feasible = false;
  std::vector<Rational> coefficients;
  std::string note;
};

// Exact rational solve of target = sum_i x_i * basis_i as canonical graph
// sums at the given grade; infeasibility comes with the offending graph.
SolveResult solve_combination(const GraphSeries& target,
                              const std::vector<GraphSeries>& basis,
                              int grade);

}  // namespace kstar

#endif
