#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wkern/instances.hpp"
#include "wkern/prime_hash.hpp"

namespace wkern {

/// The interval [start, start + 2^log_length - 1].
struct DyadicBlock {
  BigWeight start = 0;
  std::uint32_t log_length = 0;

  BigWeight last() const { return start + (BigWeight(1) << log_length) - 1; }
  bool operator==(const DyadicBlock&) const = default;
};

/// One exact-weight query: add items `slack` to the universe and ask for
/// total exactly `target`.
struct ExactQuery {
  std::vector<BigWeight> slack;
  BigWeight target = 0;

  bool operator==(const ExactQuery&) const = default;
};

struct ExactQueryFamily {
  std::vector<ExactQuery> queries;

  std::size_t size() const { return queries.size(); }
};

/// Greedy split of [l, u] into aligned dyadic blocks, lowest first.
std::vector<DyadicBlock> dyadic_blocks(const BigWeight& l, const BigWeight& u);

/// Some X has w(X) in [l, u] iff for some query, X plus a subset of its slack
/// hits the query target exactly. Requires 0 <= l <= u.
ExactQueryFamily interval_to_exact(const BigWeight& l, const BigWeight& u);

/// 2 * ceil(log2(u - l + 1)) + 1.
std::uint64_t family_size_bound(const BigWeight& l, const BigWeight& u);

/// Exact hyperclique instance for one query: h plus d-1 hub vertices and one
/// vertex per slack value v, the hubs together with v forming a hyperedge of
/// weight v; every other new d-subset is a weight-0 hyperedge.
WeightedHypergraph embed_query(const WeightedHypergraph& h, const ExactQuery& q);

struct TuringFamily {
  /// Set when the answer needs no queries (t = 0, or t above any clique).
  std::optional<bool> decided;
  BigWeight l = 0;
  BigWeight u = 0;
  ExactQueryFamily queries;
  /// Per-member failure bound epsilon / K.
  Rational member_epsilon = 0;
  std::vector<HypergraphKernel> members;
};

/// Max-weight hyperclique ("some clique weighs at least t") as a family of
/// kernelized exact instances; member i is kernelized with seed
/// derive_seed(seed, i).
TuringFamily turing_kernel_max_hyperclique(const WeightedHypergraph& h, const Rational& epsilon,
                                           std::uint64_t seed, std::uint32_t cap = kKernelCap);

/// OR of the oracle over the members; `decided` short-circuits.
bool decide_with_oracle(const TuringFamily& family,
                        const std::function<bool(const WeightedHypergraph&)>& oracle);

}  // namespace wkern
