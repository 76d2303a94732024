#include "wkern/subset_search.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wkern/oracles.hpp"

namespace wkern {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  if (a != 0 && b > limit / a) return limit;
  return std::min(a * b, limit);
}

// Odometer over count vectors; `fn(sum, counts)` returns true to stop.
template <typename Groups, typename Fn>
void for_each_sum(const Groups& groups, Fn&& fn) {
  std::vector<std::uint32_t> counts(groups.size(), 0);
  BigInt sum = 0;
  for (;;) {
    if (fn(sum, counts)) return;
    std::size_t k = 0;
    while (k < groups.size() && counts[k] == groups[k].members.size()) {
      sum -= groups[k].value * counts[k];
      counts[k] = 0;
      ++k;
    }
    if (k == groups.size()) return;
    ++counts[k];
    sum += groups[k].value;
  }
}

std::uint64_t combos_of(const auto& groups) {
  std::uint64_t c = 1;
  for (const auto& g : groups) c = saturating_mul(c, g.members.size() + 1);
  return c;
}

}  // namespace

SubsetSearch::SubsetSearch(const std::vector<BigInt>& items, std::uint64_t side_cap) {
  std::map<BigInt, std::vector<std::size_t>> by_value;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i] != 0) by_value[items[i]].push_back(i);
  }
  std::vector<Group> groups;
  for (auto& [value, members] : by_value) groups.push_back({value, std::move(members)});
  combinations_ = combos_of(groups);

  if (combinations_ <= side_cap) {
    right_ = std::move(groups);
  } else {
    std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
      return a.members.size() > b.members.size();
    });
    double left_log = 0, right_log = 0;
    for (auto& g : groups) {
      double cost = std::log2(static_cast<double>(g.members.size()) + 1);
      if (left_log <= right_log) {
        left_log += cost;
        left_.push_back(std::move(g));
      } else {
        right_log += cost;
        right_.push_back(std::move(g));
      }
    }
    std::uint64_t left_combos = combos_of(left_);
    std::uint64_t right_combos = combos_of(right_);
    if (left_combos > side_cap || right_combos > side_cap) {
      throw CapExceeded("subset search half size", std::max(left_combos, right_combos), side_cap);
    }
  }
  right_sums_ = sums_of(right_);
}

std::vector<BigInt> SubsetSearch::sums_of(const std::vector<Group>& groups) {
  std::vector<BigInt> sums;
  sums.reserve(combos_of(groups));
  for_each_sum(groups, [&](const BigInt& s, const auto&) {
    sums.push_back(s);
    return false;
  });
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

std::optional<std::vector<std::uint32_t>> SubsetSearch::counts_for(
    const std::vector<Group>& groups, const BigInt& target) {
  std::optional<std::vector<std::uint32_t>> out;
  for_each_sum(groups, [&](const BigInt& s, const std::vector<std::uint32_t>& counts) {
    if (s != target) return false;
    out = counts;
    return true;
  });
  return out;
}

void SubsetSearch::emit(const std::vector<Group>& groups, const std::vector<std::uint32_t>& counts,
                        std::vector<std::size_t>& out) {
  for (std::size_t k = 0; k < groups.size(); ++k) {
    out.insert(out.end(), groups[k].members.begin(), groups[k].members.begin() + counts[k]);
  }
}

bool SubsetSearch::contains(const BigInt& target) const {
  bool hit = false;
  for_each_sum(left_, [&](const BigInt& s, const auto&) {
    hit = std::binary_search(right_sums_.begin(), right_sums_.end(), BigInt(target - s));
    return hit;
  });
  return hit;
}

std::optional<std::vector<std::size_t>> SubsetSearch::find(const BigInt& target) const {
  std::optional<std::vector<std::size_t>> out;
  for_each_sum(left_, [&](const BigInt& s, const std::vector<std::uint32_t>& counts) {
    BigInt rest = target - s;
    if (!std::binary_search(right_sums_.begin(), right_sums_.end(), rest)) return false;
    std::vector<std::size_t> picked;
    emit(left_, counts, picked);
    emit(right_, *counts_for(right_, rest), picked);
    std::sort(picked.begin(), picked.end());
    out = std::move(picked);
    return true;
  });
  return out;
}

}  // namespace wkern
