#ifndef KSTAR_STAR_HPP
#define KSTAR_STAR_HPP

#include "kstar/graph_series.hpp"

namespace kstar {

// The two-sink star-product graph series through hbar^3, in canonical form:
// grade 0 the bare product, grade 1 the wedge, grade 2 one stacked wedge
// (1/2), two chains (1/3 each) and the eye (1/6), grade 3 thirteen graphs
// with weights 1/6 and 1/3.
GraphSeries star_product();

// Replaces `sink` of `outer` by a copy of `inner`. Each outer edge that
// pointed at the sink is redistributed by the Leibniz rule, one summand per
// choice of any inner vertex (sink or internal) as the new target. Inner
// sinks splice into the sink list at the insertion point; inner internal
// vertices are numbered before the outer ones. Returns all branches.
std::vector<Graph> insert_graph(const Graph& inner, const Graph& outer,
                                int sink);

// Grade-by-grade composition outer o_sink inner, truncated at hbar^3.
// The result is raw: one term per ordered pair of composed terms per
// Leibniz branch, exactly the bookkeeping behind the 6/38/218 term counts.
GraphSeries compose_at(const GraphSeries& outer, int sink,
                       const GraphSeries& inner);

// (star o_0 star) - (star o_1 star) on three sinks, truncated at hbar^3,
// not reduced. Callers read raw term counts off this, then reduce.
GraphSeries associator(const GraphSeries& star);

// Canonicalizes every term, absorbs signs, merges duplicates, drops
// zero-sign graphs and zero coefficients.
inline GraphSeries reduce_skew(const GraphSeries& s) { return s.reduced(); }

}  // namespace kstar

#endif
