#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wkern/instances.hpp"

namespace wkern {

/// Digits of a number in a fixed base, least significant first.
struct WeightVector {
  std::vector<std::uint32_t> digits;
  std::uint32_t base = 2;

  bool operator==(const WeightVector&) const = default;

  BigWeight to_integer() const;
};

/// `paper` follows the construction as published. `padded_blocks` gives every
/// block position m padding vertices and target m + 1, which absorbs the
/// adjacency of the reds in the instances that are not selected.
enum class CompositionVariant { paper, padded_blocks };

/// Vertex layout of a composed instance: b_0..b_{z-1}, then R_0..R_{z-1}
/// (m each), then s_0..s_{z-1}, then the padding sets P_0..P_{nz} in
/// position order. Position nz is the most significant.
struct CompositionLayout {
  std::uint32_t z = 1;
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 1;
  CompositionVariant variant = CompositionVariant::paper;

  std::uint32_t positions() const { return n * z + 1; }
  std::uint32_t msd() const { return n * z; }
  VertexId b(std::uint32_t i) const { return i; }
  VertexId r(std::uint32_t j, std::uint32_t x) const { return z + j * m + x; }
  VertexId s(std::uint32_t k) const { return z + z * m + k; }
  std::uint32_t padding(std::uint32_t v) const;
  VertexId p(std::uint32_t v, std::uint32_t y) const;
  std::uint32_t target_digit(std::uint32_t v) const;
  std::uint32_t base() const;
  std::uint32_t vertex_count() const;
};

struct ComposedInstance {
  WeightedHypergraph graph;
  CompositionLayout layout;
  /// digit form of every edge weight, keyed like graph.edges
  std::map<Tuple, WeightVector> vectors;
  WeightVector target;
};

/// Cross-composition of z^3 at-most RBDS instances sharing (nR, nB, d) into
/// one exact-weight clique instance. Instance (i, j, k) is inputs[i z^2 + j z
/// + k]. Throws std::invalid_argument on mixed parameters, exact-mode inputs
/// or a count that is not a cube.
ComposedInstance rbds_cross_compose(const std::vector<RbdsInstance>& inputs,
                                    CompositionVariant variant = CompositionVariant::paper);

/// Appends copies of inputs[0] until the size is the next perfect power
/// z^exponent. Returns z.
std::uint32_t pad_to_power(std::vector<RbdsInstance>& inputs, std::uint32_t exponent);
std::uint32_t pad_to_power(std::vector<WeightedHypergraph>& inputs, std::uint32_t exponent);

/// Positionwise digit sums over the edges spanned by `clique`.
std::vector<std::uint32_t> digit_sums(const ComposedInstance& c, std::span<const VertexId> clique);

/// Lifts z^(d_out-2) graphs on a shared vertex count n and a shared target
/// t > 0 to one d_out-uniform instance. Y_l occupies [n + l z, n + (l+1) z).
WeightedHypergraph hyperclique_lift(const std::vector<WeightedHypergraph>& inputs,
                                    std::uint32_t d_out);

/// Exact-mode RBDS to subset sum, one number per red in base nR + 1.
SubsetSumInstance erbds_to_subset_sum(const RbdsInstance& r);

/// Adds d isolated reds. The mode is left at at_most; the padded instance has
/// a dominating set of size exactly d iff the input has one of size <= d.
RbdsInstance pad_isolated_reds(const RbdsInstance& r);

/// One AND_d application per d-subset of V(H), in lexicographic order.
/// Non-edges weigh max(W, t) + 1 with W the total edge weight.
CspFormula hyperclique_to_csp(const WeightedHypergraph& h);

/// Coefficients by Moebius inversion over the truth table; every subset has
/// an entry, zeros included.
MultilinearPolynomial characteristic_polynomial(const CspConstraint& f);

std::uint32_t language_degree(const std::vector<CspConstraint>& language);

}  // namespace wkern
