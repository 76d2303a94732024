#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wkern/bigint.hpp"

namespace wkern {

/// Decides "does some sub-multiset of `items` sum to x" for many targets x.
/// Equal values are grouped, so n copies of a value cost n+1 choices instead
/// of 2^n. Small search spaces are tabulated outright; larger ones are split
/// into two halves (meet in the middle). Items may be negative.
class SubsetSearch {
 public:
  /// Throws CapExceeded when a half needs more than `side_cap` sums.
  explicit SubsetSearch(const std::vector<BigInt>& items,
                        std::uint64_t side_cap = std::uint64_t{1} << 22);

  bool contains(const BigInt& target) const;

  /// Indices into `items` of one solution.
  std::optional<std::vector<std::size_t>> find(const BigInt& target) const;

  /// Number of distinct count vectors, saturating at 2^63.
  std::uint64_t combinations() const { return combinations_; }

 private:
  struct Group {
    BigInt value;
    std::vector<std::size_t> members;
  };

  static std::vector<BigInt> sums_of(const std::vector<Group>& groups);
  static std::optional<std::vector<std::uint32_t>> counts_for(const std::vector<Group>& groups,
                                                              const BigInt& target);
  static void emit(const std::vector<Group>& groups, const std::vector<std::uint32_t>& counts,
                   std::vector<std::size_t>& out);

  std::vector<Group> left_;
  std::vector<Group> right_;
  std::vector<BigInt> right_sums_;  // sorted, unique
  std::uint64_t combinations_ = 1;
};

}  // namespace wkern
