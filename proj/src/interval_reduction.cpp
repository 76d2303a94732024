#include "wkern/interval_reduction.hpp"

#include <stdexcept>

namespace wkern {

std::vector<DyadicBlock> dyadic_blocks(const BigWeight& l, const BigWeight& u) {
  if (l < 0 || l > u) throw std::invalid_argument("interval needs 0 <= l <= u");
  std::vector<DyadicBlock> blocks;
  BigWeight a = l;
  while (a <= u) {
    // largest j with 2^j dividing a and a + 2^j - 1 <= u
    std::uint32_t j = 0;
    for (;;) {
      BigWeight len = BigWeight(1) << (j + 1);
      bool aligned = a == 0 || (a & (len - 1)) == 0;
      if (!aligned || a + len - 1 > u) break;
      ++j;
    }
    blocks.push_back({a, j});
    a += BigWeight(1) << j;
  }
  return blocks;
}

ExactQueryFamily interval_to_exact(const BigWeight& l, const BigWeight& u) {
  ExactQueryFamily family;
  for (const auto& b : dyadic_blocks(l, u)) {
    ExactQuery q;
    for (std::uint32_t k = 0; k < b.log_length; ++k) q.slack.push_back(BigWeight(1) << k);
    q.target = b.last();
    family.queries.push_back(std::move(q));
  }
  return family;
}

std::uint64_t family_size_bound(const BigWeight& l, const BigWeight& u) {
  return 2 * ceil_log2(BigWeight(u - l + 1)) + 1;
}

WeightedHypergraph embed_query(const WeightedHypergraph& h, const ExactQuery& q) {
  WeightedHypergraph g;
  g.d = h.d;
  const std::uint32_t first_slack = h.n + (h.d - 1);
  g.n = first_slack + static_cast<std::uint32_t>(q.slack.size());
  g.edges = h.edges;
  for (auto& t : all_tuples(g.n, g.d)) {
    if (t.back() < h.n) continue;
    BigWeight w = 0;
    bool hubs_first = true;
    for (std::uint32_t k = 0; k + 1 < h.d; ++k) hubs_first = hubs_first && t[k] == h.n + k;
    if (hubs_first && t.back() >= first_slack) w = q.slack[t.back() - first_slack];
    g.edges.emplace(std::move(t), std::move(w));
  }
  g.target = q.target;
  return g;
}

TuringFamily turing_kernel_max_hyperclique(const WeightedHypergraph& h, const Rational& epsilon,
                                           std::uint64_t seed, std::uint32_t cap) {
  if (h.d < 2) throw std::invalid_argument("hyperclique kernel needs d >= 2");
  TuringFamily family;
  family.l = h.target;
  family.u = ipow(h.n, h.d) * h.max_weight();
  if (h.target == 0) {
    family.decided = true;
    return family;
  }
  if (family.l > family.u) {
    family.decided = false;
    return family;
  }
  family.queries = interval_to_exact(family.l, family.u);
  family.member_epsilon = epsilon / family.queries.size();
  for (std::size_t i = 0; i < family.queries.size(); ++i) {
    WeightedHypergraph exact = embed_query(h, family.queries.queries[i]);
    family.members.push_back(
        kernelize_eewhc_exact(exact, family.member_epsilon, derive_seed(seed, i), cap));
  }
  return family;
}

bool decide_with_oracle(const TuringFamily& family,
                        const std::function<bool(const WeightedHypergraph&)>& oracle) {
  if (family.decided) return *family.decided;
  for (const auto& m : family.members) {
    if (oracle(m.instance)) return true;
  }
  return false;
}

}  // namespace wkern
