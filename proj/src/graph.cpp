#include "kstar/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace kstar {

bool Graph::is_strict() const {
  for (int i = 0; i < internals; ++i) {
    const auto& [a, b] = targets[i];
    int self = sinks + i;
    if (a == self || b == self || a == b) return false;
  }
  return true;
}

bool Graph::has_tadpole() const {
  for (int i = 0; i < internals; ++i)
    if (targets[i].first == sinks + i || targets[i].second == sinks + i)
      return true;
  return false;
}

int Graph::in_degree(int vertex) const {
  int d = 0;
  for (const auto& [a, b] : targets) {
    if (a == vertex) ++d;
    if (b == vertex) ++d;
  }
  return d;
}

std::vector<int> Graph::sink_in_degrees() const {
  std::vector<int> d(sinks, 0);
  for (const auto& [a, b] : targets) {
    if (a < sinks) ++d[a];
    if (b < sinks) ++d[b];
  }
  return d;
}

std::string Graph::encode() const {
  std::ostringstream out;
  out << sinks << " " << internals;
  for (const auto& [a, b] : targets) out << " ; " << a << " " << b;
  return out.str();
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  int number(const char* what) {
    skip_ws();
    std::size_t at = pos;
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(std::string("expected ") + what, at);
    long v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) throw ParseError("label too large", at);
      ++pos;
    }
    return static_cast<int>(v);
  }
  void expect_semicolon() {
    skip_ws();
    if (pos >= text.size() || text[pos] != ';')
      throw ParseError("expected ';'", pos);
    ++pos;
  }
};

}  // namespace

Graph parse_graph(const std::string& text, bool require_strict) {
  Cursor c{text};
  Graph g;
  g.sinks = c.number("sink count");
  g.internals = c.number("internal vertex count");
  int n = g.sinks + g.internals;
  for (int i = 0; i < g.internals; ++i) {
    c.expect_semicolon();
    c.skip_ws();
    std::size_t at = c.pos;
    int a = c.number("left target");
    int b = c.number("right target");
    if (a >= n || b >= n)
      throw ParseError("target label out of range", at);
    g.targets.emplace_back(a, b);
  }
  if (!c.at_end())
    throw ParseError("trailing input (wrong pair count?)", c.pos);
  if (require_strict && !g.is_strict())
    throw ParseError("graph violates the no-tadpole/no-double-edge rules", 0);
  return g;
}

SignedGraph canonical_form(const Graph& g) {
  const int m = g.sinks;
  const int k = g.internals;
  if (k == 0) return {+1, g};

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<std::pair<int, int>> best;
  bool best_set = false;
  bool seen_plus = false, seen_minus = false;

  std::vector<std::pair<int, int>> relabeled(k), candidate(k);
  do {
    // perm[i] = new position of internal vertex i
    for (int i = 0; i < k; ++i) {
      auto map = [&](int v) { return v < m ? v : m + perm[v - m]; };
      relabeled[perm[i]] = {map(g.targets[i].first),
                            map(g.targets[i].second)};
    }
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      int sign = (std::popcount(mask) % 2 == 0) ? +1 : -1;
      for (int i = 0; i < k; ++i) {
        candidate[i] = (mask >> i) & 1
                           ? std::pair(relabeled[i].second, relabeled[i].first)
                           : relabeled[i];
      }
      if (!best_set || candidate < best) {
        best = candidate;
        best_set = true;
        seen_plus = sign > 0;
        seen_minus = sign < 0;
      } else if (candidate == best) {
        (sign > 0 ? seen_plus : seen_minus) = true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Graph out{m, k, best};
  if (seen_plus && seen_minus) return {0, out};
  return {seen_plus ? +1 : -1, out};
}

GraphClass classify(const Graph& g) {
  GraphClass r;
  r.has_tadpole = g.has_tadpole();
  r.sink_in_degrees = g.sink_in_degrees();

  const int m = g.sinks;
  const int k = g.internals;
  for (int i = 0; i < k && !r.has_eye; ++i) {
    for (int j = i + 1; j < k && !r.has_eye; ++j) {
      int vi = m + i, vj = m + j;
      bool ij = g.targets[i].first == vj || g.targets[i].second == vj;
      bool ji = g.targets[j].first == vi || g.targets[j].second == vi;
      if (ij && ji) r.has_eye = true;
    }
  }

  // Undirected cycle detection on the internal subgraph via union-find;
  // a tadpole or a repeated component edge closes a cycle.
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k && !r.has_loop; ++i) {
    for (int t : {g.targets[i].first, g.targets[i].second}) {
      if (t < m) continue;
      int a = find(i), b = find(t - m);
      if (a == b) {
        r.has_loop = true;
        break;
      }
      parent[a] = b;
    }
  }
  return r;
}

std::vector<Graph> generate_graphs(int k, int m, bool strict) {
  if (k < 0 || k > 4 || m < 0 || m > 3)
    throw std::invalid_argument("generate_graphs: size limits are k <= 4, m <= 3");
  std::set<Graph> out;
  const int n = m + k;
  Graph g{m, k, std::vector<std::pair<int, int>>(k, {0, 0})};
  // odometer over all target assignments
  std::vector<int> slot(2 * k, 0);
  for (;;) {
    for (int i = 0; i < k; ++i) g.targets[i] = {slot[2 * i], slot[2 * i + 1]};
    if (!strict || g.is_strict()) {
      SignedGraph c = canonical_form(g);
      if (c.sign != 0) out.insert(c.graph);
    }
    int i = 0;
    while (i < 2 * k && ++slot[i] == n) slot[i++] = 0;
    if (i == 2 * k) break;
  }
  return {out.begin(), out.end()};
}

}  // namespace kstar
