#include "wkern/generators.hpp"

namespace wkern::gen {

double unit(CounterRng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

WeightedHypergraph hypergraph(CounterRng& rng, std::uint32_t n, std::uint32_t d, double density,
                              const BigWeight& max_weight, const BigWeight& target) {
  WeightedHypergraph h;
  h.d = d;
  h.n = n;
  h.target = target;
  for (auto& t : all_tuples(n, d)) {
    if (unit(rng) < density) h.edges.emplace(std::move(t), rng.uniform(BigInt(0), max_weight));
  }
  return h;
}

SubsetSumInstance subset_sum(CounterRng& rng, std::uint32_t n, const BigWeight& max_item,
                             const BigWeight& target) {
  SubsetSumInstance s;
  for (std::uint32_t i = 0; i < n; ++i) s.items.push_back(rng.uniform(BigInt(1), max_item));
  s.target = target;
  return s;
}

RbdsInstance rbds(CounterRng& rng, std::uint32_t nR, std::uint32_t nB, std::uint32_t d,
                  double density, RbdsMode mode) {
  RbdsInstance r = RbdsInstance::empty(nR, nB, d, mode);
  for (auto& row : r.adj) {
    for (std::size_t q = 0; q < row.size(); ++q) row[q] = unit(rng) < density;
  }
  return r;
}

CspConstraint constraint(CounterRng& rng, std::uint32_t arity) {
  CspConstraint c;
  c.arity = arity;
  c.table.resize(std::size_t{1} << arity);
  for (std::size_t i = 0; i < c.table.size(); ++i) c.table[i] = rng() & 1;
  return c;
}

CspFormula csp(CounterRng& rng, std::uint32_t n, std::uint32_t applications,
               std::uint32_t language_size, std::uint32_t max_arity, const BigInt& max_abs_weight,
               const BigInt& target) {
  CspFormula f;
  f.n = n;
  f.target = target;
  for (std::uint32_t i = 0; i < language_size; ++i) {
    f.language.push_back(constraint(rng, static_cast<std::uint32_t>(rng.uniform(1, max_arity))));
  }
  for (std::uint32_t i = 0; i < applications && n > 0; ++i) {
    CspApplication a;
    a.constraint = static_cast<std::uint32_t>(rng.uniform(0, language_size - 1));
    for (std::uint32_t k = 0; k < f.language[a.constraint].arity; ++k) {
      a.indices.push_back(static_cast<VertexId>(rng.uniform(0, n - 1)));
    }
    a.weight = rng.uniform(BigInt(-max_abs_weight), max_abs_weight);
    f.applications.push_back(std::move(a));
  }
  return f;
}

NodeWeightedBipartiteGraph bipartite(CounterRng& rng, std::uint32_t left, std::uint32_t right,
                                     double density, const BigWeight& max_weight) {
  NodeWeightedBipartiteGraph g;
  for (VertexId v = 0; v < left; ++v) g.left.push_back(v);
  for (VertexId v = left; v < left + right; ++v) g.right.push_back(v);
  for (VertexId u : g.left) {
    for (VertexId v : g.right) {
      if (unit(rng) < density) g.edges.emplace(u, v);
    }
  }
  for (std::uint32_t v = 0; v < left + right; ++v) g.w.push_back(rng.uniform(BigInt(1), max_weight));
  return g;
}

}  // namespace wkern::gen
