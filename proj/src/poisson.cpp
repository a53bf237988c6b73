#include "kstar/poisson.hpp"

#include <fstream>

#include "json.hpp"

namespace kstar {

PoissonStructure::PoissonStructure(
    int dim, const std::vector<std::tuple<int, int, Poly>>& upper)
    : dim_(dim), entries_(dim * dim, Poly(dim)), jacobi_ok_(true) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  for (const auto& [i, j, p] : upper) {
    if (i < 1 || j < 1 || i > dim || j > dim || i >= j)
      throw std::invalid_argument("Poisson entries must have 1 <= i < j <= n");
    if (p.dim() != dim)
      throw std::invalid_argument("entry polynomial dimension mismatch");
    entries_[(i - 1) * dim + (j - 1)] = p;
    entries_[(j - 1) * dim + (i - 1)] = -p;
  }
  // Jacobi identity on coordinate triples:
  // sum_s d_s P^{ab} P^{sc} + cyclic(a,b,c) must vanish for all a < b < c.
  for (int a = 1; a <= dim && jacobi_ok_; ++a)
    for (int b = a + 1; b <= dim && jacobi_ok_; ++b)
      for (int c = b + 1; c <= dim && jacobi_ok_; ++c) {
        Poly jac(dim);
        for (int s = 1; s <= dim; ++s) {
          jac += entry(a, b).diff(s) * entry(s, c);
          jac += entry(b, c).diff(s) * entry(s, a);
          jac += entry(c, a).diff(s) * entry(s, b);
        }
        if (!jac.is_zero()) jacobi_ok_ = false;
      }
}

const Poly& PoissonStructure::entry(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_)
    throw std::invalid_argument("Poisson entry index out of range");
  return entries_[(i - 1) * dim_ + (j - 1)];
}

PoissonStructure PoissonStructure::so3() {
  return PoissonStructure(3, {{1, 2, Poly::parse("u3", 3)},
                              {2, 3, Poly::parse("u1", 3)},
                              {1, 3, -Poly::parse("u2", 3)}});
}

PoissonStructure PoissonStructure::non_poisson_witness() {
  return PoissonStructure(3, {{1, 2, Poly::parse("u3", 3)},
                              {1, 3, Poly::parse("u1*u2", 3)}});
}

PoissonStructure PoissonStructure::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int dim = j.at("dim").get<int>();
  std::vector<std::tuple<int, int, Poly>> upper;
  for (const auto& e : j.at("entries"))
    upper.emplace_back(e.at("i").get<int>(), e.at("j").get<int>(),
                       Poly::parse(e.at("poly").get<std::string>(), dim));
  return PoissonStructure(dim, upper);
}

PoissonStructure PoissonStructure::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Poisson file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json_string(text);
}

std::string PoissonStructure::to_json_string() const {
  nlohmann::json j;
  j["dim"] = dim_;
  j["entries"] = nlohmann::json::array();
  for (int i = 1; i <= dim_; ++i)
    for (int jj = i + 1; jj <= dim_; ++jj)
      if (!entry(i, jj).is_zero())
        j["entries"].push_back(
            {{"i", i}, {"j", jj}, {"poly", entry(i, jj).to_string()}});
  return j.dump(2);
}

}  // namespace kstar
