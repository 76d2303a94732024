#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wkern/instances.hpp"
#include "wkern/oracles.hpp"

namespace wkern {

/// Maximum w-matching (b-matching with vertex capacities w) via max flow.
BMatchingCert max_b_matching(const NodeWeightedBipartiteGraph& g, const std::vector<BigWeight>& w);
BMatchingCert max_b_matching(const NodeWeightedBipartiteGraph& g);

struct CompressionTrace {
  struct EdgeStep {
    Edge edge;
    BigWeight delta;

    bool operator==(const EdgeStep&) const = default;
  };
  struct VertexStep {
    VertexId vertex;
    BigWeight old_weight;

    bool operator==(const VertexStep&) const = default;
  };

  BigWeight initial_value = 0;
  std::vector<EdgeStep> rule1;
  std::vector<VertexStep> rule2;
  std::vector<BigWeight> final_w;

  bool operator==(const CompressionTrace&) const = default;
};

struct Compression {
  std::vector<BigWeight> w;
  CompressionTrace trace;
};

/// Weights in [1, |V|] with the same minimum-weight vertex covers. Throws
/// std::invalid_argument on an invalid graph or a weight below 1.
Compression compress_vc_weights(const NodeWeightedBipartiteGraph& g);

/// Applies the recorded steps to g.w. Throws std::invalid_argument if a step
/// does not fit the weights it meets.
std::vector<BigWeight> replay_trace(const NodeWeightedBipartiteGraph& g,
                                    const CompressionTrace& trace);

struct CoverFamilyCheck {
  bool same = true;
  /// first cover, in size-then-lexicographic order, found in only one family
  std::optional<std::vector<VertexId>> counterexample;
};

CoverFamilyCheck verify_min_cover_preservation(const NodeWeightedBipartiteGraph& g,
                                               const std::vector<BigWeight>& w,
                                               const std::vector<BigWeight>& w2,
                                               std::uint32_t cap = kVertexCoverCap);

struct EquivalenceCheck {
  bool equivalent = true;
  /// (S1, S2) with w(S1) <= w(S2) under exactly one of the two weightings
  std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> counterexample;
};

EquivalenceCheck vertex_cover_equivalent(const NodeWeightedBipartiteGraph& g,
                                         const std::vector<BigWeight>& w,
                                         const std::vector<BigWeight>& w2,
                                         std::uint32_t cap = kVertexCoverCap);

/// Star with center 0 of weight n and leaves 1..n-1 of weight 1. n >= 2.
NodeWeightedBipartiteGraph star_witness(std::uint32_t n);

/// Perfect matching v_i v'_i for i = 1..n+1. v_1..v_{n+1} are vertices
/// 0..n, v'_1..v'_{n+1} are n+1..2n+1.
NodeWeightedBipartiteGraph threshold_gadget(const std::vector<BigInt>& w, const BigInt& t);

/// c = |min(w[0], ..., w[n-1], t)| + 1.
BigInt threshold_offset(const std::vector<BigInt>& w, const BigInt& t);

/// The covers S1(X) and S2 of the gadget on n bits, sorted.
std::pair<std::vector<VertexId>, std::vector<VertexId>> threshold_covers(
    std::uint32_t n, const std::vector<bool>& x);

}  // namespace wkern
