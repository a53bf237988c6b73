#include "kstar/star.hpp"

namespace kstar {

// Numbering key for the hard-coded series: sinks are f = 0, g = 1 and
// internal vertices are listed bottom-up as 2, 3, 4. "A" is the wedge acting
// on the sinks, "B" and "C" sit above it. The eye is the 2-cycle
// A -> (f, B), B -> (A, g): each eye vertex sends its remaining edge to its
// own sink, the left vertex's sink edge being its Left edge and the right
// vertex's its Right edge. That orientation is calibrated, not a free
// choice: it is the one under which the skew-reduced grade-2 associator
// equals exactly 2/3 of the Jacobiator sum.
GraphSeries star_product() {
  GraphSeries s(2);
  auto add = [&](const char* coeff, const char* enc) {
    s.add(rational_from_string(coeff), parse_graph(enc, true));
  };

  add("1", "2 0");
  add("1", "2 1 ; 0 1");

  add("1/2", "2 2 ; 0 1 ; 0 1");  // stacked wedges
  add("1/3", "2 2 ; 0 1 ; 0 2");  // chain, top vertex on (f, A)
  add("1/3", "2 2 ; 0 1 ; 2 1");  // chain, top vertex on (A, g)
  add("1/6", "2 2 ; 0 3 ; 2 1");  // eye

  add("1/6", "2 3 ; 0 1 ; 0 1 ; 0 1");  // three stacked wedges
  add("1/6", "2 3 ; 0 3 ; 2 1 ; 2 3");  // wedge over the eye
  add("1/6", "2 3 ; 0 3 ; 2 1 ; 0 1");  // eye times a wedge
  add("1/6", "2 3 ; 0 1 ; 0 2 ; 3 2");  // C -> (B, A) over the left chain
  add("1/6", "2 3 ; 0 1 ; 2 1 ; 2 3");  // C -> (A, B) over the right chain
  add("1/6", "2 3 ; 0 1 ; 0 2 ; 0 2");  // two vertices on (f, A)
  add("1/6", "2 3 ; 0 1 ; 2 1 ; 2 1");  // two vertices on (A, g)
  add("1/3", "2 3 ; 0 1 ; 0 2 ; 0 1");  // left chain times a wedge
  add("1/3", "2 3 ; 0 1 ; 2 1 ; 0 1");  // right chain times a wedge
  add("1/6", "2 3 ; 0 3 ; 2 1 ; 0 3");  // eye with C -> (f, B)
  add("1/6", "2 3 ; 0 3 ; 2 1 ; 2 1");  // eye with C -> (A, g)
  add("1/6", "2 3 ; 0 1 ; 2 1 ; 0 3");  // right chain with C -> (f, B)
  add("1/6", "2 3 ; 0 1 ; 0 2 ; 3 1");  // left chain with C -> (B, g)

  return s.reduced();
}

std::vector<Graph> insert_graph(const Graph& inner, const Graph& outer,
                                int sink) {
  if (sink < 0 || sink >= outer.sinks)
    throw std::invalid_argument("insertion slot is not a sink of the outer graph");

  const int new_m = outer.sinks + inner.sinks - 1;
  const int new_k = outer.internals + inner.internals;

  auto map_inner = [&](int v) {
    return v < inner.sinks ? sink + v : new_m + (v - inner.sinks);
  };
  auto map_outer = [&](int v) {
    if (v < sink) return v;
    if (v < outer.sinks) return v + inner.sinks - 1;  // v != sink here
    return new_m + inner.internals + (v - outer.sinks);
  };

  // Outer edges aimed at the replaced sink, as (vertex, side) slots.
  std::vector<std::pair<int, int>> open_slots;
  for (int t = 0; t < outer.internals; ++t) {
    if (outer.targets[t].first == sink) open_slots.emplace_back(t, 0);
    if (outer.targets[t].second == sink) open_slots.emplace_back(t, 1);
  }

  Graph base{new_m, new_k, {}};
  base.targets.resize(new_k);
  for (int t = 0; t < inner.internals; ++t)
    base.targets[t] = {map_inner(inner.targets[t].first),
                       map_inner(inner.targets[t].second)};
  for (int t = 0; t < outer.internals; ++t) {
    auto [a, b] = outer.targets[t];
    base.targets[inner.internals + t] = {a == sink ? -1 : map_outer(a),
                                         b == sink ? -1 : map_outer(b)};
  }

  const int choices = inner.vertex_count();
  std::vector<Graph> out;
  std::vector<int> pick(open_slots.size(), 0);
  for (;;) {
    Graph g = base;
    for (std::size_t e = 0; e < open_slots.size(); ++e) {
      auto [t, side] = open_slots[e];
      int target = map_inner(pick[e]);
      auto& pair = g.targets[inner.internals + t];
      (side == 0 ? pair.first : pair.second) = target;
    }
    out.push_back(std::move(g));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

GraphSeries compose_at(const GraphSeries& outer, int sink,
                       const GraphSeries& inner) {
  GraphSeries out(outer.sinks() + inner.sinks() - 1);
  for (int a = 0; a <= GraphSeries::max_grade; ++a)
    for (int b = 0; a + b <= GraphSeries::max_grade; ++b)
      for (const Term& to : outer.grade(a))
        for (const Term& ti : inner.grade(b))
          for (Graph& g : insert_graph(ti.graph, to.graph, sink))
            out.add(to.coeff * ti.coeff, g);
  return out;
}

GraphSeries associator(const GraphSeries& star) {
  if (star.sinks() != 2)
    throw std::invalid_argument("the associator needs a two-sink product");
  return compose_at(star, 0, star) - compose_at(star, 1, star);
}

}  // namespace kstar
