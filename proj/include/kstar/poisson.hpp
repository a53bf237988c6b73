#ifndef KSTAR_POISSON_HPP
#define KSTAR_POISSON_HPP

#include <string>
#include <tuple>
#include <vector>

#include "kstar/poly.hpp"

namespace kstar {

// Antisymmetric n x n matrix of polynomial entries P^{ij}(u). Construction
// takes the i < j entries only and completes the rest by P^{ji} = -P^{ij};
// the diagonal is zero. Whether the matrix actually satisfies the Jacobi
// identity is recorded, not required: non-Poisson inputs are legal and used
// as negative controls.
class PoissonStructure {
 public:
  PoissonStructure(int dim,
                   const std::vector<std::tuple<int, int, Poly>>& upper);

  int dim() const { return dim_; }

  // 1-based indices; entry(i, i) is the zero polynomial.
  const Poly& entry(int i, int j) const;

  bool jacobi_verified() const { return jacobi_ok_; }

  // Rotation brackets on R^3: P12 = u3, P23 = u1, P31 = u2.
  static PoissonStructure so3();

  // n = 3, P12 = u3, P13 = u1*u2, P23 = 0; fails the Jacobi identity.
  static PoissonStructure non_poisson_witness();

  // JSON: { "dim": n, "entries": [ {"i": 1, "j": 2, "poly": "u3"}, ... ] }
  // listing only i < j entries.
  static PoissonStructure from_json_string(const std::string& text);
  static PoissonStructure from_json_file(const std::string& path);
  std::string to_json_string() const;

 private:
  int dim_;
  std::vector<Poly> entries_;  // row-major
  bool jacobi_ok_;
};

}  // namespace kstar

#endif
