#include <doctest.h>

#include <functional>

#include "wkern/generators.hpp"
#include "wkern/maxflow.hpp"
#include "wkern/vc_compress.hpp"

using namespace wkern;

namespace {

NodeWeightedBipartiteGraph edge(BigWeight a, BigWeight b) {
  NodeWeightedBipartiteGraph g;
  g.left = {0};
  g.right = {1};
  g.edges = {{0, 1}};
  g.w = {a, b};
  return g;
}

// Every minimum-weight cover by subset enumeration, sorted.
std::vector<std::vector<VertexId>> brute_min_covers(const NodeWeightedBipartiteGraph& g,
                                                    const std::vector<BigWeight>& w) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<std::vector<VertexId>> best;
  BigWeight best_weight = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool cover = true;
    for (const auto& [u, v] : g.edges) cover = cover && (((mask >> u) | (mask >> v)) & 1);
    if (!cover) continue;
    std::vector<VertexId> s;
    BigWeight total = 0;
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1) {
        s.push_back(v);
        total += w[v];
      }
    }
    if (best_weight < 0 || total < best_weight) {
      best_weight = total;
      best.clear();
    }
    if (total == best_weight) best.push_back(s);
  }
  std::sort(best.begin(), best.end());
  return best;
}

// Largest feasible sum of edge values, trying every assignment.
BigWeight brute_b_matching(const NodeWeightedBipartiteGraph& g) {
  std::vector<Edge> edges(g.edges.begin(), g.edges.end());
  std::vector<BigWeight> load(g.vertex_count(), 0);
  BigWeight best = 0;
  std::function<void(std::size_t, BigWeight)> go = [&](std::size_t i, BigWeight total) {
    if (i == edges.size()) {
      best = std::max(best, total);
      return;
    }
    auto [u, v] = edges[i];
    for (BigWeight z = 0; load[u] + z <= g.w[u] && load[v] + z <= g.w[v]; ++z) {
      load[u] += z;
      load[v] += z;
      go(i + 1, total + z);
      load[u] -= z;
      load[v] -= z;
    }
  };
  go(0, 0);
  return best;
}

void check_feasible(const NodeWeightedBipartiteGraph& g, const BMatchingCert& z) {
  CHECK_FALSE(validate(g, z));
  BigWeight total = 0;
  std::vector<BigWeight> load(g.vertex_count(), 0);
  for (const auto& [e, value] : z.z) {
    CHECK(value >= 0);
    total += value;
    load[e.first] += value;
    load[e.second] += value;
  }
  CHECK(total == z.value);
  for (std::size_t v = 0; v < load.size(); ++v) CHECK(load[v] <= g.w[v]);
}

}  // namespace

TEST_CASE("max flow on a small network") {
  MaxFlow f(4);
  auto a = f.add_edge(0, 1, 3);
  auto b = f.add_edge(0, 2, 2);
  f.add_edge(1, 2, 5);
  f.add_edge(1, 3, 2);
  f.add_edge(2, 3, 3);
  CHECK(f.run(0, 3) == 5);
  CHECK(f.flow(a) + f.flow(b) == 5);

  BigInt huge = ipow(10, 30);
  MaxFlow g(3);
  g.add_edge(0, 1, huge);
  g.add_edge(1, 2, huge + 1);
  CHECK(g.run(0, 2) == huge);
}

TEST_CASE("b-matching examples") {
  auto one = max_b_matching(edge(3, 5));
  CHECK(one.value == 3);
  CHECK(one.z.at({0, 1}) == 3);

  for (std::uint32_t n = 2; n <= 8; ++n) {
    auto star = max_b_matching(star_witness(n));
    CHECK(star.value == n - 1);
  }

  NodeWeightedBipartiteGraph empty;
  empty.left = {0};
  empty.right = {1};
  empty.w = {4, 4};
  CHECK(max_b_matching(empty).value == 0);
}

TEST_CASE("b-matching against exhaustive search and Koenig") {
  CounterRng rng(11);
  int small = 0;
  for (int i = 0; i < 400; ++i) {
    auto g = gen::bipartite(rng, static_cast<std::uint32_t>(rng.uniform(1, 4)),
                            static_cast<std::uint32_t>(rng.uniform(1, 4)), 0.5,
                            i % 2 ? BigWeight(6) : ipow(10, 18));
    auto z = max_b_matching(g);
    check_feasible(g, z);
    if (g.edges.size() <= 4 && i % 2) {
      CHECK(z.value == brute_b_matching(g));
      ++small;
    }
    auto covers = brute_min_covers(g, g.w);
    CHECK(cover_weight(g.w, covers.front()) == z.value);
    CHECK(min_weight_vertex_covers(g).min_weight == z.value);
  }
  CHECK(small > 50);
}

TEST_CASE("optimal covers and positive matching edges") {
  CounterRng rng(19);
  for (int i = 0; i < 300; ++i) {
    auto g = gen::bipartite(rng, static_cast<std::uint32_t>(rng.uniform(1, 5)),
                            static_cast<std::uint32_t>(rng.uniform(1, 5)), 0.5, 20);
    auto z = max_b_matching(g);
    auto covers = brute_min_covers(g, g.w);
    std::vector<BigWeight> load(g.vertex_count(), 0);
    for (const auto& [e, value] : z.z) {
      load[e.first] += value;
      load[e.second] += value;
    }
    for (const auto& c : covers) {
      std::vector<bool> in(g.vertex_count(), false);
      for (VertexId v : c) in[v] = true;
      for (const auto& [e, value] : z.z) {
        if (value > 0) CHECK(in[e.first] != in[e.second]);
      }
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.w[v] > load[v]) CHECK_FALSE(in[v]);
      }
    }
  }
}

TEST_CASE("compression examples") {
  auto g = edge(5, 3);
  auto c = compress_vc_weights(g);
  CHECK(c.trace.initial_value == 3);
  REQUIRE(c.trace.rule1.size() == 1);
  CHECK(c.trace.rule1[0] == CompressionTrace::EdgeStep{{0, 1}, 2});
  REQUIRE(c.trace.rule2.size() == 1);
  CHECK(c.trace.rule2[0] == CompressionTrace::VertexStep{0, 3});
  CHECK(c.w == std::vector<BigWeight>{2, 1});
  CHECK(brute_min_covers(g, c.w) == std::vector<std::vector<VertexId>>{{1}});
  CHECK(verify_min_cover_preservation(g, g.w, c.w).same);

  auto star = star_witness(4);
  star.w[0] = ipow(10, 9);
  auto s = compress_vc_weights(star);
  CHECK(s.trace.rule1.empty());
  CHECK(s.w == std::vector<BigWeight>{4, 1, 1, 1});
  CHECK(brute_min_covers(star, s.w) == std::vector<std::vector<VertexId>>{{1, 2, 3}});

  CounterRng rng(3);
  auto fixed = gen::bipartite(rng, 2, 2, 1.0, 1);
  auto f = compress_vc_weights(fixed);
  CHECK(f.w == fixed.w);
  CHECK(f.trace.rule1.empty());
  CHECK(f.trace.rule2.empty());

  auto bad = edge(0, 3);
  CHECK_THROWS_AS(compress_vc_weights(bad), std::invalid_argument);
}

TEST_CASE("compression preserves the optimal covers") {
  CounterRng rng(29);
  for (int i = 0; i < 500; ++i) {
    BigWeight top = i % 3 == 0 ? ipow(10, 18) : BigWeight(i % 3 == 1 ? 12 : 3);
    auto g = gen::bipartite(rng, static_cast<std::uint32_t>(rng.uniform(1, 5)),
                            static_cast<std::uint32_t>(rng.uniform(1, 5)), 0.55, top);
    auto c = compress_vc_weights(g);
    const BigWeight n = g.vertex_count();
    for (const auto& x : c.w) {
      CHECK(x >= 1);
      CHECK(x <= n);
    }
    for (const auto& step : c.trace.rule1) CHECK(step.delta > 0);
    for (const auto& step : c.trace.rule2) CHECK(step.old_weight > n);
    CHECK(brute_min_covers(g, g.w) == brute_min_covers(g, c.w));
    CHECK(verify_min_cover_preservation(g, g.w, c.w).same);
    CHECK(replay_trace(g, c.trace) == c.w);
    CHECK(c.trace.final_w == c.w);
  }
}

TEST_CASE("replay rejects a tampered trace") {
  auto g = edge(5, 3);
  auto c = compress_vc_weights(g);
  auto t = c.trace;
  t.rule2[0].old_weight = 4;
  CHECK_THROWS_AS(replay_trace(g, t), std::invalid_argument);
  t = c.trace;
  t.rule1[0].delta = 3;
  CHECK_THROWS_AS(replay_trace(g, t), std::invalid_argument);
}

TEST_CASE("cover family and equivalence checks") {
  auto g = edge(5, 3);
  auto diff = verify_min_cover_preservation(g, {5, 3}, {1, 2});
  CHECK_FALSE(diff.same);
  CHECK(diff.counterexample == std::vector<VertexId>{0});
  CHECK(verify_min_cover_preservation(g, {5, 3}, {5, 3}).same);

  CHECK(vertex_cover_equivalent(g, {1, 2}, {2, 4}).equivalent);
  auto swapped = vertex_cover_equivalent(g, {1, 2}, {2, 1});
  CHECK_FALSE(swapped.equivalent);
  REQUIRE(swapped.counterexample);
  std::set<std::vector<VertexId>> pair{swapped.counterexample->first,
                                       swapped.counterexample->second};
  CHECK(pair == std::set<std::vector<VertexId>>{{0}, {1}});

  CounterRng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto h = gen::bipartite(rng, 3, 3, 0.5, 50);
    std::vector<BigWeight> doubled;
    for (const auto& x : h.w) doubled.push_back(2 * x);
    CHECK(vertex_cover_equivalent(h, h.w, doubled).equivalent);
  }
}

TEST_CASE("star witness") {
  auto s4 = star_witness(4);
  CHECK(s4.w == std::vector<BigWeight>{4, 1, 1, 1});
  auto best = min_weight_vertex_covers(s4);
  CHECK(best.min_weight == 3);
  CHECK(best.covers == std::vector<std::vector<VertexId>>{{1, 2, 3}});
  CHECK(star_witness(2).w == std::vector<BigWeight>{2, 1});
  CHECK_THROWS_AS(star_witness(1), std::invalid_argument);
  for (std::uint32_t n = 2; n <= 10; ++n) {
    auto c = compress_vc_weights(star_witness(n));
    CHECK(*std::max_element(c.w.begin(), c.w.end()) == n);
  }
}

TEST_CASE("threshold gadget") {
  auto g = threshold_gadget({1}, 1);
  CHECK_FALSE(validate(g));
  CHECK(g.w == std::vector<BigWeight>{3, 3, 2, 2});
  auto [s1, s2] = threshold_covers(1, {true});
  CHECK(cover_weight(g.w, s1) == 5);
  CHECK(cover_weight(g.w, s2) == 5);

  auto zeros = threshold_gadget({0, 0, 0}, 0);
  for (std::uint32_t x = 0; x < 8; ++x) {
    auto [a, b] = threshold_covers(3, {bool(x & 1), bool(x & 2), bool(x & 4)});
    CHECK(cover_weight(zeros.w, a) == cover_weight(zeros.w, b));
  }

  CounterRng rng(41);
  for (int i = 0; i < 200; ++i) {
    std::vector<BigInt> w;
    for (int k = 0; k < 3; ++k) w.push_back(BigInt(rng.uniform(0, 10)) - 5);
    BigInt t = BigInt(rng.uniform(0, 10)) - 5;
    auto h = threshold_gadget(w, t);
    BigInt c = threshold_offset(w, t);
    for (const auto& x : h.w) CHECK(x >= 1);
    for (std::uint32_t m = 0; m < 8; ++m) {
      std::vector<bool> x{bool(m & 1), bool(m & 2), bool(m & 4)};
      auto [a, b] = threshold_covers(3, x);
      BigInt dot = 0;
      for (int k = 0; k < 3; ++k) dot += x[k] ? w[k] : BigInt(0);
      CHECK(cover_weight(h.w, a) == dot + 4 * c);
      CHECK(cover_weight(h.w, b) == t + 4 * c);
    }
  }

  // x1 >= 1 and x2 >= 1 differ on (1, 0, 0)
  auto f = threshold_gadget({1, 0, 0}, 1);
  auto h = threshold_gadget({0, 1, 0}, 1);
  CHECK_FALSE(vertex_cover_equivalent(f, f.w, h.w).equivalent);
}
