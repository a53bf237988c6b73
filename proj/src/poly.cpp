#include "kstar/poly.hpp"

#include <cctype>
#include <sstream>

namespace kstar {

Poly Poly::constant(int dim, const Rational& c) {
  Poly p(dim);
  p.add_term(MultiIndex(dim, 0), c);
  return p;
}

Poly Poly::variable(int dim, int i) {
  if (i < 1 || i > dim)
    throw std::invalid_argument("variable index out of range");
  Poly p(dim);
  MultiIndex m(dim, 0);
  m[i - 1] = 1;
  p.add_term(m, 1);
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, order(m));
  return d;
}

void Poly::add_term(const MultiIndex& exponents, const Rational& c) {
  if (static_cast<int>(exponents.size()) != dim_)
    throw std::invalid_argument("exponent tuple has wrong length");
  if (c == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(dim_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  Poly r(a.dim_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MultiIndex m(a.dim_);
      for (int i = 0; i < a.dim_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r(p.dim_);
  if (c == 0) return r;
  for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
  return r;
}

Poly Poly::diff(int i) const {
  if (i < 1 || i > dim_)
    throw std::invalid_argument("derivative index out of range");
  Poly r(dim_);
  for (const auto& [m, c] : terms_) {
    if (m[i - 1] == 0) continue;
    MultiIndex d = m;
    d[i - 1] -= 1;
    r.add_term(d, c * m[i - 1]);
  }
  return r;
}

Poly Poly::compose_affine(const std::vector<std::vector<Rational>>& m,
                          const std::vector<Rational>& c) const {
  if (static_cast<int>(m.size()) != dim_ ||
      static_cast<int>(c.size()) != dim_)
    throw std::invalid_argument("affine map has wrong dimension");
  std::vector<Poly> image;
  image.reserve(dim_);
  for (int i = 0; i < dim_; ++i) {
    Poly li = Poly::constant(dim_, c[i]);
    for (int j = 0; j < dim_; ++j)
      li += m[i][j] * Poly::variable(dim_, j + 1);
    image.push_back(std::move(li));
  }
  Poly result(dim_);
  for (const auto& [mono, coeff] : terms_) {
    Poly term = Poly::constant(dim_, coeff);
    for (int i = 0; i < dim_; ++i)
      for (int e = 0; e < mono[i]; ++e) term = term * image[i];
    result += term;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = order(m) > 0;
    bool wrote_coeff = false;
    if (!has_vars || a != 1) {
      out << a.get_str();
      wrote_coeff = true;
    }
    for (int i = 0; i < dim_; ++i) {
      if (m[i] == 0) continue;
      if (wrote_coeff) out << "*";
      out << "u" << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
      wrote_coeff = true;
    }
  }
  return out.str();
}

namespace {

// Recursive-descent parser for the polynomial grammar.
class PolyParser {
 public:
  PolyParser(const std::string& text, int dim) : text_(text), dim_(dim) {}

  Poly parse() {
    Poly p = expression();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  Poly expression() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (take() == '-');
    Poly p = term();
    if (neg) p = -p;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      take();
      Poly t = term();
      if (c == '-')
        p -= t;
      else
        p += t;
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      take();
      p = p * factor();
    }
    return p;
  }

  Poly factor() {
    Poly base = primary();
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      std::size_t at = pos_;
      long e = integer();
      if (e < 0) throw ParseError("negative exponent", at);
      Poly r = Poly::constant(dim_, 1);
      for (long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      take();
      Poly p = expression();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      take();
      return p;
    }
    if (c == 'u') {
      std::size_t at = pos_;
      take();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected variable index after 'u'", pos_);
      long i = integer();
      if (i < 1 || i > dim_)
        throw ParseError("variable u" + std::to_string(i) +
                             " out of range for dimension " +
                             std::to_string(dim_),
                         at);
      return Poly::variable(dim_, static_cast<int>(i));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    throw ParseError("unexpected character", pos_);
  }

  Poly rational() {
    std::size_t at = pos_;
    std::string num = digits();
    if (peek() == '/') {
      take();
      std::string den = digits();
      if (den.empty()) throw ParseError("expected denominator", pos_);
      if (mpz_class(den) == 0) throw ParseError("zero denominator", at);
      return Poly::constant(dim_, rational_from_string(num + "/" + den));
    }
    return Poly::constant(dim_, rational_from_string(num));
  }

  long integer() {
    std::string d = digits();
    if (d.empty()) throw ParseError("expected number", pos_);
    return std::stol(d);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += take();
    return d;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  const std::string& text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(const std::string& text, int dim) {
  return PolyParser(text, dim).parse();
}

}  // namespace kstar
