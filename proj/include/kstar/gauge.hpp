#ifndef KSTAR_GAUGE_HPP
#define KSTAR_GAUGE_HPP

#include <array>
#include <string>

#include "kstar/graph_series.hpp"

namespace kstar {

// Free coefficients of the one-argument gauge series
//   t(x) = x + hbar (I_empty * [div-div term] + I_loop * [tadpole term])
//        + hbar^2 I0 * [eye on the sink] + hbar^3 (I1..I7) * [...].
// All ten constants may be arbitrary rationals. The I_empty graph and three
// of the cubic graphs are identically zero by the antisymmetry of P; they
// are kept so every coefficient of the family stays addressable, and their
// vanishing is asserted by evaluation in the tests.
struct GaugeCoefficients {
  Rational i_empty = 0;
  Rational i_loop = 0;
  std::array<Rational, 8> i = {};  // I0..I7

  // { "I_empty": "p/q", "I_loop": "p/q", "I0": ..., ..., "I7": ... },
  // every key optional.
  static GaugeCoefficients from_json_string(const std::string& text);
  static GaugeCoefficients from_json_file(const std::string& path);
};

// One-sink graph series with the identity at grade 0.
class GaugeTransform {
 public:
  explicit GaugeTransform(const GaugeCoefficients& c);

  static GaugeTransform identity();
  // t = id + hbar^2/12 * (eye on the sink); removes the grade-2 eye from the
  // gauged star-product.
  static GaugeTransform loop_removal();

  const GraphSeries& series() const { return series_; }

 private:
  explicit GaugeTransform(GraphSeries s) : series_(std::move(s)) {}
  friend GaugeTransform gauge_invert(const GaugeTransform& t);

  GraphSeries series_;
};

// Formal series inverse: t_inv with t_inv(t(x)) = x through hbar^3,
// computed by graph insertion.
GaugeTransform gauge_invert(const GaugeTransform& t);

// f *' g = t_inv(t(f) * t(g)), skew-reduced, truncated at hbar^3.
GraphSeries gauge_star(const GraphSeries& star, const GaugeTransform& t);

}  // namespace kstar

#endif
