#ifndef KSTAR_POLY_HPP
#define KSTAR_POLY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kstar/rational.hpp"

namespace kstar {

// Exponent tuple (a_1, ..., a_n) for the monomial u1^a_1 * ... * un^a_n.
using MultiIndex = std::vector<int>;

inline int order(const MultiIndex& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

// Multivariate polynomial over Q in variables u1..un. Terms are kept in a
// sorted map with no zero coefficients, so operator== is structural equality.
class Poly {
 public:
  explicit Poly(int dim) : dim_(dim) {}

  static Poly constant(int dim, const Rational& c);
  static Poly variable(int dim, int i);  // u_i, 1-based

  // Grammar: rationals, u1..un, + - * ^, parentheses. Example input:
  // "1/2*u1^2 - u2". Throws ParseError with the offending position.
  static Poly parse(const std::string& text, int dim);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int degree() const;

  const std::map<MultiIndex, Rational>& terms() const { return terms_; }

  void add_term(const MultiIndex& exponents, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Partial derivative with respect to u_i (1-based).
  Poly diff(int i) const;

  // p(M*x + c): substitutes u_i = sum_j M[i][j]*x_j + c[i]. M is dim x dim.
  Poly compose_affine(const std::vector<std::vector<Rational>>& m,
                      const std::vector<Rational>& c) const;

  std::string to_string() const;

 private:
  int dim_;
  std::map<MultiIndex, Rational> terms_;
};

}  // namespace kstar

#endif
