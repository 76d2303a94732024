#pragma once

#include <cstdint>
#include <vector>

#include "wkern/instances.hpp"
#include "wkern/rng.hpp"

namespace wkern {

inline constexpr std::uint32_t kKernelCap = 24;

/// Record of one prime draw. `M` is the required pool size and `U` the upper
/// end of the sampling range [2, U].
struct ModulusCert {
  BigWeight p = 0;
  BigInt M = 0;
  BigInt U = 0;
  Rational epsilon = 0;
  std::uint64_t seed = 0;
  std::uint32_t n = 0;
  std::uint32_t log_n = 0;
  std::uint64_t draws = 0;
  /// Subset sum only: indices of items that became 0 modulo p.
  std::vector<std::size_t> dropped;

  bool operator==(const ModulusCert&) const = default;
};

/// 2^n * (n + 1 + logN) * ceil(1/epsilon), with n taken as at least 1.
BigInt prime_pool_size(std::uint32_t n, std::uint32_t log_n, const Rational& epsilon);

/// ceil(2 M (ln M + ln ln M)) + 1, at least 64. Bounds the M-th prime from
/// above for M >= 6.
BigInt prime_pool_bound(const BigInt& M);

/// ceil(log2(max(N, 2))).
std::uint32_t log_bound(const BigInt& N);

/// 64-round Miller-Rabin with witnesses drawn from `rng`.
bool is_probable_prime(const BigInt& p, CounterRng& rng);

/// Uniform prime from [2, U]. Throws CapExceeded when n exceeds `cap` and
/// std::invalid_argument unless 0 < epsilon < 1.
ModulusCert sample_modulus(std::uint32_t n, const BigInt& N, const Rational& epsilon,
                           std::uint64_t seed, std::uint32_t cap = kKernelCap);

struct HypergraphKernel {
  WeightedHypergraph instance;
  ModulusCert cert;
};

struct SubsetSumKernel {
  SubsetSumInstance instance;
  ModulusCert cert;
  /// original item index for each item of the output that is not slack
  std::vector<std::size_t> kept;
};

struct CspKernel {
  CspFormula instance;
  ModulusCert cert;
};

/// Vertex layout of the hyperclique kernel: original vertices [0, n), then
/// U_Z (d-1 vertices), then U_0, ..., U_{d-1} with n vertices each.
struct GadgetLayout {
  std::uint32_t n = 0;
  std::uint32_t d = 2;

  VertexId hub(std::uint32_t k) const { return n + k; }
  VertexId slack(std::uint32_t j, std::uint32_t k) const { return n + (d - 1) + j * n + k; }
  std::uint32_t vertex_count() const { return n + (d - 1) + d * n; }
};

/// Counts c_0..c_{d-1} with each c_j in [0, n] and sum c_j n^j = i, for
/// 0 <= i <= n^d.
std::vector<std::uint32_t> slack_selection(const BigInt& i, std::uint32_t n, std::uint32_t d);

HypergraphKernel kernelize_eewhc_exact(const WeightedHypergraph& h, const Rational& epsilon,
                                       std::uint64_t seed, std::uint32_t cap = kKernelCap);

/// Witness of the kernel built from a witness S of the input.
std::vector<VertexId> lift_eewhc_witness(const WeightedHypergraph& h, const HypergraphKernel& k,
                                         const std::vector<VertexId>& solution);

SubsetSumKernel kernelize_subset_sum(const SubsetSumInstance& s, const Rational& epsilon,
                                     std::uint64_t seed, std::uint32_t cap = kKernelCap);

std::vector<std::size_t> lift_subset_sum_witness(const SubsetSumInstance& s,
                                                 const SubsetSumKernel& k,
                                                 const std::vector<std::size_t>& solution);

/// Applications over the same variable set are merged first (AND is
/// symmetric and idempotent); the first tuple seen represents the set.
CspFormula merge_and_applications(const CspFormula& f);

/// Requires the language to be exactly {AND_d} with d >= 2; throws
/// std::invalid_argument otherwise.
CspKernel kernelize_csp_and(const CspFormula& f, const Rational& epsilon, std::uint64_t seed,
                            std::uint32_t cap = kKernelCap);

std::vector<bool> lift_csp_witness(const CspFormula& f, const CspKernel& k,
                                   const std::vector<bool>& assignment);

}  // namespace wkern
