#pragma once

#include <cstdint>

#include "wkern/instances.hpp"
#include "wkern/rng.hpp"

namespace wkern::gen {

/// Each d-subset of [0, n) is an edge with probability `density`; weights are
/// uniform in [0, max_weight].
WeightedHypergraph hypergraph(CounterRng& rng, std::uint32_t n, std::uint32_t d, double density,
                              const BigWeight& max_weight, const BigWeight& target = 0);

/// Items uniform in [1, max_item].
SubsetSumInstance subset_sum(CounterRng& rng, std::uint32_t n, const BigWeight& max_item,
                             const BigWeight& target = 0);

RbdsInstance rbds(CounterRng& rng, std::uint32_t nR, std::uint32_t nB, std::uint32_t d,
                  double density, RbdsMode mode = RbdsMode::at_most);

/// Random truth table of the given arity.
CspConstraint constraint(CounterRng& rng, std::uint32_t arity);

/// Formula over a random language of `language_size` constraints with arity in
/// [1, max_arity]; weights uniform in [-max_abs_weight, max_abs_weight].
CspFormula csp(CounterRng& rng, std::uint32_t n, std::uint32_t applications,
               std::uint32_t language_size, std::uint32_t max_arity, const BigInt& max_abs_weight,
               const BigInt& target = 0);

/// Bipartite graph with `left` + `right` vertices (left first) and weights in
/// [1, max_weight].
NodeWeightedBipartiteGraph bipartite(CounterRng& rng, std::uint32_t left, std::uint32_t right,
                                     double density, const BigWeight& max_weight);

double unit(CounterRng& rng);

}  // namespace wkern::gen
