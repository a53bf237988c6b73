#include "kstar/graph_series.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace kstar {

void GraphSeries::add(const Rational& coeff, const Graph& g) {
  if (g.sinks != sinks_)
    throw std::invalid_argument("series sink count mismatch");
  if (g.internals > max_grade)
    throw std::invalid_argument("grade exceeds the hbar^3 truncation");
  if (coeff == 0) return;
  grades_[g.internals].push_back({coeff, g});
}

int GraphSeries::total_terms() const {
  int n = 0;
  for (const auto& g : grades_) n += static_cast<int>(g.size());
  return n;
}

GraphSeries GraphSeries::reduced() const {
  GraphSeries out(sinks_);
  for (int k = 0; k <= max_grade; ++k) {
    std::map<Graph, Rational> merged;
    for (const Term& t : grades_[k]) {
      SignedGraph c = canonical_form(t.graph);
      if (c.sign == 0) continue;
      merged[c.graph] += c.sign * t.coeff;
    }
    for (const auto& [g, c] : merged)
      if (c != 0) out.grades_[k].push_back({c, g});
  }
  return out;
}

GraphSeries operator*(const Rational& c, const GraphSeries& s) {
  GraphSeries out(s.sinks_);
  if (c == 0) return out;
  for (int k = 0; k <= GraphSeries::max_grade; ++k)
    for (const Term& t : s.grades_[k])
      out.grades_[k].push_back({c * t.coeff, t.graph});
  return out;
}

GraphSeries operator+(const GraphSeries& a, const GraphSeries& b) {
  if (a.sinks_ != b.sinks_)
    throw std::invalid_argument("series sink count mismatch");
  GraphSeries out = a;
  for (int k = 0; k <= GraphSeries::max_grade; ++k)
    out.grades_[k].insert(out.grades_[k].end(), b.grades_[k].begin(),
                          b.grades_[k].end());
  return out;
}

GraphSeries operator-(const GraphSeries& a, const GraphSeries& b) {
  return a + (Rational(-1) * b);
}

GraphSeries restrict_orders(const GraphSeries& s,
                            const std::vector<int>& orders) {
  GraphSeries out(s.sinks());
  for (int k = 0; k <= GraphSeries::max_grade; ++k)
    for (const Term& t : s.grade(k))
      if (t.graph.sink_in_degrees() == orders) out.add(t.coeff, t.graph);
  return out;
}

GraphSeries grade_slice(const GraphSeries& s, int grade) {
  GraphSeries out(s.sinks());
  for (const Term& t : s.grade(grade)) out.add(t.coeff, t.graph);
  return out;
}

std::vector<std::vector<int>> orders_present(const GraphSeries& s, int grade) {
  std::vector<std::vector<int>> seen;
  for (const Term& t : s.grade(grade)) {
    auto d = t.graph.sink_in_degrees();
    if (std::find(seen.begin(), seen.end(), d) == seen.end())
      seen.push_back(d);
  }
  return seen;
}

void write_series(std::ostream& out, const GraphSeries& s) {
  for (int k = 0; k <= GraphSeries::max_grade; ++k)
    for (const Term& t : s.grade(k))
      out << to_string(t.coeff) << " * " << t.graph.encode() << "\n";
}

GraphSeries read_series(std::istream& in) {
  std::vector<Term> terms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto star = line.find('*');
    if (star == std::string::npos)
      throw ParseError("series line " + std::to_string(lineno) +
                           ": expected 'coeff * graph'",
                       0);
    Rational c = rational_from_string(line.substr(0, star));
    Graph g = parse_graph(line.substr(star + 1));
    terms.push_back({c, g});
  }
  if (terms.empty()) throw std::invalid_argument("empty series file");
  GraphSeries s(terms.front().graph.sinks);
  for (const Term& t : terms) s.add(t.coeff, t.graph);
  return s;
}

std::string series_to_json_string(const GraphSeries& s) {
  nlohmann::json j;
  j["sinks"] = s.sinks();
  j["terms"] = nlohmann::json::array();
  for (int k = 0; k <= GraphSeries::max_grade; ++k)
    for (const Term& t : s.grade(k))
      j["terms"].push_back({{"coeff", to_string(t.coeff)},
                            {"grade", k},
                            {"graph", t.graph.encode()}});
  return j.dump(2);
}

GraphSeries series_from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  GraphSeries s(j.at("sinks").get<int>());
  for (const auto& t : j.at("terms"))
    s.add(rational_from_string(t.at("coeff").get<std::string>()),
          parse_graph(t.at("graph").get<std::string>()));
  return s;
}

}  // namespace kstar
