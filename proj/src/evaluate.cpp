#include "kstar/evaluate.hpp"

namespace kstar {

namespace {

// Edge 2t is the left edge of internal vertex m+t, edge 2t+1 the right one.
struct EdgeTable {
  std::vector<std::vector<int>> in_edges;  // per vertex label

  explicit EdgeTable(const Graph& g) : in_edges(g.vertex_count()) {
    for (int t = 0; t < g.internals; ++t) {
      in_edges[g.targets[t].first].push_back(2 * t);
      in_edges[g.targets[t].second].push_back(2 * t + 1);
    }
  }
};

template <typename Visit>
void for_each_index_assignment(int edges, int n, Visit&& visit) {
  std::vector<int> idx(edges, 1);
  for (;;) {
    visit(idx);
    int i = 0;
    while (i < edges && ++idx[i] > n) idx[i++] = 1;
    if (i == edges) break;
  }
}

}  // namespace

Poly evaluate_graph(const Graph& g, const PoissonStructure& p,
                    const std::vector<Poly>& args) {
  if (static_cast<int>(args.size()) != g.sinks)
    throw std::invalid_argument("argument count must equal the sink count");
  for (const Poly& a : args)
    if (a.dim() != p.dim())
      throw std::invalid_argument("argument dimension mismatch");

  const int n = p.dim();
  const int m = g.sinks;
  const int k = g.internals;
  EdgeTable edges(g);

  Poly sum(n);
  if (k == 0) {
    Poly prod = Poly::constant(n, 1);
    for (const Poly& a : args) prod = prod * a;
    return prod;
  }

  for_each_index_assignment(2 * k, n, [&](const std::vector<int>& idx) {
    Poly prod = Poly::constant(n, 1);
    for (int t = 0; t < k; ++t) {
      Poly content = p.entry(idx[2 * t], idx[2 * t + 1]);
      if (content.is_zero()) return;
      for (int e : edges.in_edges[m + t]) {
        content = content.diff(idx[e]);
        if (content.is_zero()) return;
      }
      prod = prod * content;
    }
    for (int s = 0; s < m; ++s) {
      Poly factor = args[s];
      for (int e : edges.in_edges[s]) {
        factor = factor.diff(idx[e]);
        if (factor.is_zero()) return;
      }
      prod = prod * factor;
    }
    sum += prod;
  });
  return sum;
}

std::vector<Poly> evaluate_series(const GraphSeries& s,
                                  const PoissonStructure& p,
                                  const std::vector<Poly>& args, int order) {
  std::vector<Poly> out;
  for (int k = 0; k <= order; ++k) {
    Poly acc(p.dim());
    for (const Term& t : s.grade(k))
      acc += t.coeff * evaluate_graph(t.graph, p, args);
    out.push_back(std::move(acc));
  }
  return out;
}

TriDiffOperator to_tridiff(const GraphSeries& s, int grade,
                           const PoissonStructure& p) {
  if (s.sinks() != 3)
    throw std::invalid_argument("tri-differential form needs three sinks");
  const int n = p.dim();
  TriDiffOperator op;
  op.dim = n;

  for (const Term& term : s.grade(grade)) {
    const Graph& g = term.graph;
    const int m = g.sinks;
    const int k = g.internals;
    EdgeTable edges(g);
    if (k == 0) {
      std::array<MultiIndex, 3> key{MultiIndex(n, 0), MultiIndex(n, 0),
                                    MultiIndex(n, 0)};
      auto [it, unused] = op.coeff.try_emplace(key, Poly(n));
      it->second += term.coeff * Poly::constant(n, 1);
      continue;
    }
    for_each_index_assignment(2 * k, n, [&](const std::vector<int>& idx) {
      Poly prod = Poly::constant(n, 1);
      for (int t = 0; t < k; ++t) {
        Poly content = p.entry(idx[2 * t], idx[2 * t + 1]);
        if (content.is_zero()) return;
        for (int e : edges.in_edges[m + t]) {
          content = content.diff(idx[e]);
          if (content.is_zero()) return;
        }
        prod = prod * content;
      }
      std::array<MultiIndex, 3> key{MultiIndex(n, 0), MultiIndex(n, 0),
                                    MultiIndex(n, 0)};
      for (int sct = 0; sct < 3; ++sct)
        for (int e : edges.in_edges[sct]) key[sct][idx[e] - 1] += 1;
      auto [it, unused] = op.coeff.try_emplace(key, Poly(n));
      it->second += term.coeff * prod;
    });
  }
  for (auto it = op.coeff.begin(); it != op.coeff.end();)
    it = it->second.is_zero() ? op.coeff.erase(it) : std::next(it);
  return op;
}

namespace {
Poly multi_diff(const Poly& f, const MultiIndex& m) {
  Poly r = f;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int e = 0; e < m[i]; ++e) r = r.diff(static_cast<int>(i) + 1);
  return r;
}
}  // namespace

Poly apply_tridiff(const TriDiffOperator& op, const Poly& f, const Poly& g,
                   const Poly& h) {
  Poly sum(op.dim);
  for (const auto& [key, c] : op.coeff)
    sum += c * (multi_diff(f, key[0]) * multi_diff(g, key[1]) *
                multi_diff(h, key[2]));
  return sum;
}

}  // namespace kstar
