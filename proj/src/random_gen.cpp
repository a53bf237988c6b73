#include "kstar/random_gen.hpp"

namespace kstar {

namespace {

void monomials_up_to(int dim, int max_degree, MultiIndex& current, int pos,
                     std::vector<MultiIndex>& out) {
  if (pos == dim) {
    out.push_back(current);
    return;
  }
  int used = order(current);
  for (int e = 0; e + used <= max_degree; ++e) {
    current[pos] = e;
    monomials_up_to(dim, max_degree, current, pos + 1, out);
  }
  current[pos] = 0;
}

}  // namespace

Poly random_poly(Rng& rng, int dim, int max_degree, int bound) {
  std::vector<MultiIndex> monos;
  MultiIndex scratch(dim, 0);
  monomials_up_to(dim, max_degree, scratch, 0, monos);
  Poly p(dim);
  for (const MultiIndex& m : monos) {
    int c = rng.uniform(-bound, bound);
    if (c != 0) p.add_term(m, c);
  }
  return p;
}

PoissonStructure random_poisson_2d(Rng& rng) {
  return PoissonStructure(2, {{1, 2, random_poly(rng, 2)}});
}

namespace {

Rational det(const std::vector<std::vector<Rational>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a = m;
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
    }
  }
  return d;
}

}  // namespace

AffineMap AffineMap::inverse() const {
  const int n = static_cast<int>(matrix.size());
  std::vector<std::vector<Rational>> a = matrix;
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("affine map is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational f = 1 / a[c][c];
    for (int cc = 0; cc < n; ++cc) {
      a[c][cc] *= f;
      inv[c][cc] *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational g = a[r][c];
      for (int cc = 0; cc < n; ++cc) {
        a[r][cc] -= g * a[c][cc];
        inv[r][cc] -= g * inv[c][cc];
      }
    }
  }
  // v = A u + c  =>  u = A^{-1} v - A^{-1} c
  AffineMap out;
  out.matrix = inv;
  out.shift.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.shift[i] -= inv[i][j] * shift[j];
  return out;
}

AffineMap random_affine(Rng& rng, int dim) {
  AffineMap map;
  map.matrix.assign(dim, std::vector<Rational>(dim, 0));
  map.shift.assign(dim, 0);
  do {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) map.matrix[i][j] = rng.uniform(-3, 3);
  } while (det(map.matrix) == 0);
  for (int i = 0; i < dim; ++i) map.shift[i] = rng.uniform(-3, 3);
  return map;
}

PoissonStructure pushforward(const PoissonStructure& p, const AffineMap& map) {
  const int n = p.dim();
  const AffineMap inv = map.inverse();
  std::vector<std::tuple<int, int, Poly>> upper;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Poly entry(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const Rational& fa = map.matrix[a - 1][i - 1];
          const Rational& fb = map.matrix[b - 1][j - 1];
          if (fa == 0 || fb == 0) continue;
          entry += (fa * fb) * p.entry(i, j);
        }
      // express in the new coordinates
      upper.emplace_back(a, b, entry.compose_affine(inv.matrix, inv.shift));
    }
  return PoissonStructure(n, upper);
}

}  // namespace kstar
