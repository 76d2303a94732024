#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wkern/instances.hpp"

namespace wkern {

inline constexpr std::uint32_t kHyperCliqueCap = 24;
inline constexpr std::uint32_t kSubsetSumCap = 30;
inline constexpr std::uint32_t kRbdsCap = 24;
inline constexpr std::uint32_t kCspCap = 24;
inline constexpr std::uint32_t kVertexCoverCap = 20;

/// Thrown instead of silently truncating a search that would exceed its cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what_size, std::uint64_t size, std::uint64_t cap)
      : std::runtime_error(what_size + " = " + std::to_string(size) +
                           " exceeds the enumeration cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::uint64_t size() const { return size_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

/// Witness holds vertex ids, item indices, red ids or a 0/1 assignment,
/// depending on the problem.
struct SolveResult {
  bool yes = false;
  std::optional<std::vector<std::uint32_t>> witness;
  std::uint64_t states_explored = 0;
  /// Maximum objective value; only set by the max variants.
  std::optional<BigInt> best;
};

// Exact-weight hyperclique. Witness is the lexicographically smallest
// qualifying vertex set (as a sorted list). Cliques are enumerated
// depth-first in lexicographic order; the OpenMP version splits on the
// smallest vertex and returns the same witness.
SolveResult solve_eewhc_exact(const WeightedHypergraph& h, std::uint32_t cap = kHyperCliqueCap);
SolveResult solve_eewhc_exact_serial(const WeightedHypergraph& h,
                                     std::uint32_t cap = kHyperCliqueCap);

/// Max variant: yes iff some hyperclique weighs at least h.target. `best`
/// holds the maximum weight; the witness is the first clique (lexicographic)
/// reaching the target.
SolveResult solve_eewhc_max(const WeightedHypergraph& h, std::uint32_t cap = kHyperCliqueCap);
SolveResult solve_eewhc_max_serial(const WeightedHypergraph& h,
                                   std::uint32_t cap = kHyperCliqueCap);

/// Exact solver for instances with many "free" vertices. A vertex is free when
/// every d-subset containing it is a hyperedge and no nonzero hyperedge holds
/// two free vertices. The remaining vertices (at most `cap`) are enumerated;
/// free vertices then only add independent amounts, decided by a grouped
/// meet-in-the-middle subset search. The witness is valid but not necessarily
/// the lexicographically smallest.
SolveResult solve_eewhc_exact_decomposed(const WeightedHypergraph& h,
                                         std::uint32_t cap = kHyperCliqueCap);

/// Calls `visit(vertices, weight)` for every hyperclique, empty set included,
/// in lexicographic order.
void for_each_hyperclique(
    const WeightedHypergraph& h,
    const std::function<void(const std::vector<VertexId>&, const BigWeight&)>& visit,
    std::uint32_t cap = kHyperCliqueCap);

// Subset sum. Witness is the lexicographically smallest sorted index list.
SolveResult solve_subset_sum(const SubsetSumInstance& s, std::uint32_t cap = kSubsetSumCap);
SolveResult solve_subset_sum_enumerate(const SubsetSumInstance& s,
                                       std::uint32_t cap = kSubsetSumCap);
SolveResult solve_subset_sum_enumerate_serial(const SubsetSumInstance& s,
                                              std::uint32_t cap = kSubsetSumCap);
/// Pseudo-polynomial path; refuses when target * |items| exceeds `cell_cap`.
SolveResult solve_subset_sum_dp(const SubsetSumInstance& s,
                                std::uint64_t cell_cap = std::uint64_t{1} << 28);

SolveResult solve_rbds(const RbdsInstance& r, std::uint32_t cap = kRbdsCap);

enum class CspMode { exact, max };

/// x[i] is the value of variable i.
BigInt eval_csp(const CspFormula& f, const std::vector<bool>& x);

/// Witness is the lexicographically smallest assignment vector (variable 0
/// first). In max mode `best` is the maximum of Phi.
SolveResult solve_csp(const CspFormula& f, CspMode mode, std::uint32_t cap = kCspCap);
SolveResult solve_csp_serial(const CspFormula& f, CspMode mode, std::uint32_t cap = kCspCap);

/// Exact mode only. Same idea as solve_eewhc_exact_decomposed: variables that
/// never share an application with another free variable are handled by the
/// subset search.
SolveResult solve_csp_exact_decomposed(const CspFormula& f, std::uint32_t cap = kCspCap);

/// Inclusion-minimal vertex covers sorted by size, then lexicographically.
std::vector<std::vector<VertexId>> enumerate_minimal_vertex_covers(
    const NodeWeightedBipartiteGraph& g, std::uint32_t cap = kVertexCoverCap);

struct MinCovers {
  std::vector<std::vector<VertexId>> covers;
  BigWeight min_weight = 0;
};

/// Every minimum-weight cover of g under weights `w` (defaults to g.w).
MinCovers min_weight_vertex_covers(const NodeWeightedBipartiteGraph& g,
                                   const std::vector<BigWeight>& w,
                                   std::uint32_t cap = kVertexCoverCap);
MinCovers min_weight_vertex_covers(const NodeWeightedBipartiteGraph& g,
                                   std::uint32_t cap = kVertexCoverCap);

}  // namespace wkern
