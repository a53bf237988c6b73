#ifndef KSTAR_RANDOM_GEN_HPP
#define KSTAR_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "kstar/poisson.hpp"
#include "kstar/poly.hpp"

namespace kstar {

// Deterministic source for test data. The mapping from engine output to
// small ranges is done by hand so seeded runs produce identical values on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// Dense polynomial of total degree <= max_degree with integer coefficients
// drawn uniformly from [-bound, bound].
Poly random_poly(Rng& rng, int dim, int max_degree = 3, int bound = 3);

// A single random entry P^{12}; in dimension two every bi-vector satisfies
// the Jacobi identity.
PoissonStructure random_poisson_2d(Rng& rng);

struct AffineMap {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> shift;

  AffineMap inverse() const;
};

// Invertible integer matrix plus shift, entries in [-3, 3].
AffineMap random_affine(Rng& rng, int dim);

// P~^{ab}(v) = sum_{ij} A_ai A_bj P^{ij}(u(v)) for v = A u + c.
PoissonStructure pushforward(const PoissonStructure& p, const AffineMap& map);

}  // namespace kstar

#endif
