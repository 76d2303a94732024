#include <doctest.h>

#include <bitset>

#include "wkern/generators.hpp"
#include "wkern/interval_reduction.hpp"
#include "wkern/oracles.hpp"

using namespace wkern;

namespace {

WeightedHypergraph k3(long t) {
  WeightedHypergraph h;
  h.n = 3;
  h.edges = {{{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 3}};
  h.target = t;
  return h;
}

constexpr std::size_t kSums = 1100;

std::bitset<kSums> subset_sums(const std::vector<std::uint64_t>& items) {
  std::bitset<kSums> sums;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << items.size()); ++m) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if ((m >> k) & 1) s += items[k];
    }
    sums.set(s);
  }
  return sums;
}

}  // namespace

TEST_CASE("interval examples") {
  auto single = interval_to_exact(9, 9);
  REQUIRE(single.size() == 1);
  CHECK(single.queries[0].slack.empty());
  CHECK(single.queries[0].target == 9);

  auto f = interval_to_exact(3, 7);
  REQUIRE(f.size() == 2);
  CHECK(f.queries[0] == ExactQuery{{}, 3});
  CHECK(f.queries[1] == ExactQuery{{1, 2}, 7});
  // universe {5}: [3,3] cannot be hit, 5 + 2 = 7 hits the second query
  auto u = subset_sums({5});
  CHECK_FALSE(u[3]);
  CHECK(u[5]);

  auto whole = interval_to_exact(0, 15);
  REQUIRE(whole.size() == 1);
  CHECK(whole.queries[0].slack == std::vector<BigWeight>{1, 2, 4, 8});
  CHECK(whole.queries[0].target == 15);

  CHECK_THROWS_AS(interval_to_exact(4, 3), std::invalid_argument);
}

TEST_CASE("dyadic blocks partition the interval") {
  CounterRng rng(2);
  for (int i = 0; i < 10000; ++i) {
    BigWeight l = rng.uniform(0, 1u << 20);
    BigWeight u = l + rng.uniform(0, i % 2 ? 1000 : (1u << 22));
    auto blocks = dyadic_blocks(l, u);
    BigWeight next = l;
    for (const auto& b : blocks) {
      CHECK(b.start == next);
      BigWeight len = BigWeight(1) << b.log_length;
      CHECK(b.start % len == 0);
      next = b.last() + 1;
    }
    CHECK(next == u + 1);
    CHECK(blocks.size() <= family_size_bound(l, u));
  }
  BigWeight huge = ipow(10, 30);
  CHECK(dyadic_blocks(huge, huge * 3).size() <= family_size_bound(huge, huge * 3));
}

TEST_CASE("query family answers the interval question") {
  CounterRng rng(17);
  // slack {1, 2, ..., 2^(j-1)} as enumerated subsets, per j
  std::vector<std::bitset<kSums>> slack_sums;
  for (std::uint32_t j = 0; j <= 10; ++j) {
    std::vector<std::uint64_t> slack;
    for (std::uint32_t k = 0; k < j; ++k) slack.push_back(std::uint64_t{1} << k);
    slack_sums.push_back(subset_sums(slack));
  }
  for (int universe = 0; universe < 12; ++universe) {
    std::vector<std::uint64_t> items;
    auto size = rng.uniform(0, 8);
    for (std::uint64_t k = 0; k < size; ++k) items.push_back(rng.uniform(1, 64));
    auto sums = subset_sums(items);
    // hit[j][T]: some X and some slack subset of size-j slack sum to T
    std::vector<std::bitset<kSums>> hit(slack_sums.size());
    for (std::size_t j = 0; j < slack_sums.size(); ++j) {
      for (std::size_t s = 0; s < 513; ++s) {
        if (sums[s]) hit[j] |= slack_sums[j] << s;
      }
    }
    std::vector<int> prefix(514, 0);
    for (std::size_t s = 0; s <= 512; ++s) prefix[s + 1] = prefix[s] + (sums[s] ? 1 : 0);
    for (int l = 0; l <= 512; ++l) {
      for (int u = l; u <= 512; ++u) {
        bool direct = prefix[u + 1] - prefix[l] > 0;
        bool family = false;
        for (const auto& b : dyadic_blocks(l, u)) {
          family = family || hit[b.log_length][static_cast<std::size_t>(b.last())];
        }
        REQUIRE(family == direct);
      }
    }
  }
}

TEST_CASE("embedded queries keep the clique weights") {
  auto g = embed_query(k3(0), ExactQuery{{1, 2}, 7});
  CHECK(g.n == 3 + 1 + 2);
  CHECK_FALSE(validate(g));
  CHECK(*clique_weight(g, std::vector<VertexId>{0, 1, 2, 3, 5}) == 8);
  CHECK(*clique_weight(g, std::vector<VertexId>{0, 1, 3, 4, 5}) == 4);
  CHECK(*clique_weight(g, std::vector<VertexId>{0, 1, 4, 5}) == 1);
}

TEST_CASE("Turing kernel examples") {
  auto yes = turing_kernel_max_hyperclique(k3(4), Rational(1, 10), 5);
  CHECK_FALSE(yes.decided);
  CHECK(yes.l == 4);
  CHECK(yes.u == 27);
  CHECK(yes.members.size() <= family_size_bound(4, 27));
  bool any = false;
  for (const auto& m : yes.members) any = any || solve_eewhc_exact_decomposed(m.instance).yes;
  CHECK(any);
  CHECK(decide_with_oracle(yes, [](const WeightedHypergraph& g) {
    return solve_eewhc_exact_decomposed(g).yes;
  }));

  int false_yes = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto no = turing_kernel_max_hyperclique(k3(7), Rational(1, 10), seed);
    false_yes += decide_with_oracle(no, [](const WeightedHypergraph& g) {
      return solve_eewhc_exact_decomposed(g).yes;
    });
  }
  CHECK(false_yes <= 10);

  auto zero = turing_kernel_max_hyperclique(k3(0), Rational(1, 10), 1);
  CHECK(zero.decided == std::optional<bool>(true));
  CHECK(zero.members.empty());
  auto above = turing_kernel_max_hyperclique(k3(28), Rational(1, 10), 1);
  CHECK(above.decided == std::optional<bool>(false));

  TuringFamily empty;
  CHECK_FALSE(decide_with_oracle(empty, [](const WeightedHypergraph&) { return true; }));
  TuringFamily one;
  one.members.resize(2);
  one.members[1].instance.target = 1;
  CHECK(decide_with_oracle(one, [](const WeightedHypergraph& g) { return g.target == 1; }));
}

TEST_CASE("Turing kernel agrees with the max oracle") {
  CounterRng rng(44);
  for (int i = 0; i < 30; ++i) {
    auto n = static_cast<std::uint32_t>(rng.uniform(1, 4));
    auto h = gen::hypergraph(rng, n, 2, 0.7, 20);
    h.target = rng.uniform(0, 60);
    bool expected = solve_eewhc_max(h).yes;
    auto family = turing_kernel_max_hyperclique(h, Rational(1, 10), i);
    if (!family.decided) CHECK(family.members.size() <= family_size_bound(family.l, family.u));
    bool got = decide_with_oracle(family, [](const WeightedHypergraph& g) {
      return solve_eewhc_exact_decomposed(g).yes;
    });
    if (expected) CHECK(got);
  }
}
