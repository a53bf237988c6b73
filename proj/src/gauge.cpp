#include "kstar/gauge.hpp"

#include <fstream>

#include "json.hpp"
#include "kstar/star.hpp"

namespace kstar {

GaugeCoefficients GaugeCoefficients::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  GaugeCoefficients c;
  auto get = [&](const char* key, Rational& into) {
    if (j.contains(key)) into = rational_from_string(j.at(key).get<std::string>());
  };
  get("I_empty", c.i_empty);
  get("I_loop", c.i_loop);
  for (int k = 0; k < 8; ++k) get(("I" + std::to_string(k)).c_str(), c.i[k]);
  return c;
}

GaugeCoefficients GaugeCoefficients::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gauge file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json_string(text);
}

// Vertex numbering key for the built-in gauge graphs: the sink is 0 and
// internal vertices are 1, 2, 3. In the eye-on-sink, 1 is the left eye
// vertex (left edge to the sink), 2 the right one. In the cubic graphs, 1
// and 2 are the lower/outer vertices left to right and 3 the remaining one.
GaugeTransform::GaugeTransform(const GaugeCoefficients& c) : series_(1) {
  auto add = [&](const Rational& coeff, const char* enc) {
    if (coeff != 0) series_.add(coeff, parse_graph(enc));
  };
  series_.add(1, parse_graph("1 0"));
  add(c.i_empty, "1 1 ; 1 1");  // d_i d_j P^{ij}: identically zero
  add(c.i_loop, "1 1 ; 1 0");   // d_i P^{ij} d_j
  add(c.i[0], "1 2 ; 0 2 ; 1 0");           // eye on the sink
  add(c.i[1], "1 3 ; 3 2 ; 3 1 ; 1 2");     // triangle both ways, zero
  add(c.i[2], "1 3 ; 0 2 ; 3 1 ; 1 2");     // triangle with one sink edge
  add(c.i[3], "1 3 ; 3 0 ; 0 3 ; 1 2");     // mirror pair of sink wedges, zero
  add(c.i[4], "1 3 ; 3 0 ; 1 0 ; 1 2");
  add(c.i[5], "1 3 ; 0 2 ; 1 0 ; 1 2");     // wedge over the eye, zero
  add(c.i[6], "1 3 ; 0 2 ; 1 0 ; 0 1");     // eye plus a spectator wedge
  add(c.i[7], "1 3 ; 3 0 ; 0 1 ; 0 2");
}

GaugeTransform GaugeTransform::identity() {
  return GaugeTransform(GaugeCoefficients{});
}

GaugeTransform GaugeTransform::loop_removal() {
  GaugeCoefficients c;
  c.i[0] = Rational(1, 12);
  return GaugeTransform(c);
}

GaugeTransform gauge_invert(const GaugeTransform& t) {
  // With t = id + T1 + T2 + T3 (grade subscripts), the inverse grades solve
  // U1 = -T1, U2 = -T2 - U1 o T1, U3 = -T3 - U1 o T2 - U2 o T1.
  const GraphSeries& ts = t.series();
  if (ts.term_count(0) != 1 || ts.grade(0)[0].coeff != 1 ||
      ts.grade(0)[0].graph.internals != 0)
    throw std::invalid_argument("gauge transform must start with the identity");

  std::array<GraphSeries, 4> tg = {grade_slice(ts, 0), grade_slice(ts, 1),
                                   grade_slice(ts, 2), grade_slice(ts, 3)};
  std::array<GraphSeries, 4> ug = {tg[0], GraphSeries(1), GraphSeries(1),
                                   GraphSeries(1)};
  for (int c = 1; c <= 3; ++c) {
    GraphSeries acc = Rational(-1) * tg[c];
    for (int a = 1; a < c; ++a)
      acc = acc - compose_at(ug[a], 0, tg[c - a]);
    ug[c] = acc.reduced();
  }
  GraphSeries inv = ug[0] + ug[1] + ug[2] + ug[3];
  return GaugeTransform(inv.reduced());
}

GraphSeries gauge_star(const GraphSeries& star, const GaugeTransform& t) {
  GraphSeries dressed = compose_at(star, 0, t.series());
  dressed = compose_at(dressed, 1, t.series()).reduced();
  GaugeTransform inv = gauge_invert(t);
  return compose_at(inv.series(), 0, dressed).reduced();
}

}  // namespace kstar
