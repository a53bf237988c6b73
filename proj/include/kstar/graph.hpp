#ifndef KSTAR_GRAPH_HPP
#define KSTAR_GRAPH_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "kstar/poly.hpp"

namespace kstar {

// Oriented graph with `sinks` argument vertices (labels 0..m-1, no out-edges)
// and `internals` vertices (labels m..m+k-1), each carrying an ordered
// (left, right) pair of out-edges. The pair order encodes the index order of
// the antisymmetric bi-vector sitting in the vertex.
struct Graph {
  int sinks = 0;
  int internals = 0;
  std::vector<std::pair<int, int>> targets;  // targets[i] is vertex sinks+i

  int vertex_count() const { return sinks + internals; }

  // No tadpoles and no double edges; the rules the star-product graphs obey.
  bool is_strict() const;

  bool has_tadpole() const;

  int in_degree(int vertex) const;
  std::vector<int> sink_in_degrees() const;

  // Text form "m k ; a0 b0 ; a1 b1 ; ...".
  std::string encode() const;

  friend auto operator<=>(const Graph&, const Graph&) = default;
};

// Throws ParseError on malformed input, out-of-range labels, or wrong pair
// count. With require_strict, tadpoles and double edges are also rejected.
Graph parse_graph(const std::string& text, bool require_strict = false);

struct SignedGraph {
  int sign = 0;  // +1, -1, or 0 when the graph equals minus itself
  Graph graph;   // canonical representative
};

// Minimizes the encoding over all relabelings of internal vertices combined
// with per-vertex (left,right) swaps; each swap contributes a factor -1.
// Sink labels are never permuted. sign = 0 iff both parities reach the
// minimum.
SignedGraph canonical_form(const Graph& g);

struct GraphClass {
  bool has_tadpole = false;
  bool has_eye = false;   // 2-cycle between internal vertices
  bool has_loop = false;  // any directed or undirected cycle among internals
  std::vector<int> sink_in_degrees;
};

GraphClass classify(const Graph& g);

// All canonical graphs with k internal vertices and m sinks, nonzero sign,
// every internal vertex of out-degree 2. Brute force; limited to k <= 4,
// m <= 3.
std::vector<Graph> generate_graphs(int k, int m, bool strict);

}  // namespace kstar

#endif
