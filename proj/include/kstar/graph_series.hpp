#ifndef KSTAR_GRAPH_SERIES_HPP
#define KSTAR_GRAPH_SERIES_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "kstar/graph.hpp"
#include "kstar/rational.hpp"

namespace kstar {

struct Term {
  Rational coeff;
  Graph graph;

  friend bool operator==(const Term&, const Term&) = default;
};

// Formal hbar-graded sum of (rational, graph) terms with a fixed sink count.
// The grade of a term equals its number of internal vertices (one bi-vector
// copy per power of hbar). Freshly composed series hold raw, unmerged terms;
// reduced() canonicalizes every graph, absorbs signs into coefficients,
// merges duplicates and drops zeros.
class GraphSeries {
 public:
  static constexpr int max_grade = 3;

  explicit GraphSeries(int sink_count) : sinks_(sink_count) {}

  int sinks() const { return sinks_; }

  void add(const Rational& coeff, const Graph& g);

  const std::vector<Term>& grade(int k) const { return grades_.at(k); }
  int term_count(int k) const { return static_cast<int>(grades_.at(k).size()); }
  int total_terms() const;
  bool empty() const { return total_terms() == 0; }

  GraphSeries reduced() const;

  friend bool operator==(const GraphSeries&, const GraphSeries&) = default;

  friend GraphSeries operator*(const Rational& c, const GraphSeries& s);
  friend GraphSeries operator+(const GraphSeries& a, const GraphSeries& b);
  friend GraphSeries operator-(const GraphSeries& a, const GraphSeries& b);

 private:
  int sinks_;
  std::array<std::vector<Term>, max_grade + 1> grades_;
};

// Keeps the terms whose sink in-degrees equal `orders`.
GraphSeries restrict_orders(const GraphSeries& s, const std::vector<int>& orders);

// The single-grade slice of a series.
GraphSeries grade_slice(const GraphSeries& s, int grade);

// All distinct sink in-degree triples present at the given grade.
std::vector<std::vector<int>> orders_present(const GraphSeries& s, int grade);

// One line per term: "coeff * encoding", grades in ascending order.
void write_series(std::ostream& out, const GraphSeries& s);
GraphSeries read_series(std::istream& in);

std::string series_to_json_string(const GraphSeries& s);
GraphSeries series_from_json_string(const std::string& text);

}  // namespace kstar

#endif
