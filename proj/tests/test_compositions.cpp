#include <doctest.h>

#include <bit>

#include "wkern/compositions.hpp"
#include "wkern/generators.hpp"
#include "wkern/oracles.hpp"

using namespace wkern;

namespace {

// Brute force over vertex subsets; exact target.
bool has_exact_clique(const WeightedHypergraph& h) {
  REQUIRE(h.n <= 20);
  for (std::uint32_t mask = 0; mask < (1u << h.n); ++mask) {
    std::vector<VertexId> s;
    for (VertexId v = 0; v < h.n; ++v) {
      if ((mask >> v) & 1) s.push_back(v);
    }
    auto w = clique_weight(h, s);
    if (w && *w == h.target) return true;
  }
  return false;
}

bool rbds_brute(const RbdsInstance& r, bool exact_size = false) {
  for (std::uint32_t mask = 0; mask < (1u << r.nR); ++mask) {
    auto size = static_cast<std::uint32_t>(std::popcount(mask));
    if (exact_size || r.mode == RbdsMode::exact ? size != r.d : size > r.d) continue;
    bool ok = true;
    for (std::uint32_t q = 0; q < r.nB && ok; ++q) {
      std::uint32_t hits = 0;
      for (std::uint32_t x = 0; x < r.nR; ++x) hits += ((mask >> x) & 1) && r.adj[x][q];
      ok = r.mode == RbdsMode::exact ? hits == 1 : hits >= 1;
    }
    if (ok) return true;
  }
  return false;
}

RbdsInstance rbds(std::uint32_t m, std::uint32_t n, std::uint32_t d,
                  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
                  RbdsMode mode = RbdsMode::at_most) {
  auto r = RbdsInstance::empty(m, n, d, mode);
  for (auto [x, q] : edges) r.adj[x][q] = true;
  return r;
}

bool any_yes(const std::vector<RbdsInstance>& inputs) {
  return std::any_of(inputs.begin(), inputs.end(), [](const auto& r) { return rbds_brute(r); });
}

}  // namespace

TEST_CASE("weight vectors") {
  CHECK(WeightVector{{1, 1}, 5}.to_integer() == 6);
  CHECK(WeightVector{{3, 0, 2}, 10}.to_integer() == 203);
  CHECK(WeightVector{{}, 7}.to_integer() == 0);
}

TEST_CASE("single-instance compositions") {
  auto yes = rbds(2, 1, 1, {{0, 0}});
  auto c = rbds_cross_compose({yes});
  const auto& L = c.layout;
  CHECK(L.base() == 5);
  CHECK(c.graph.n == 1 + 2 + 1);
  CHECK(c.graph.edges.at({L.b(0), L.r(0, 0)}) == 6);
  CHECK(c.graph.edges.at({L.b(0), L.r(0, 1)}) == 5);
  CHECK(c.graph.edges.at({L.b(0), L.s(0)}) == 0);
  CHECK(c.graph.target == 6);
  CHECK_FALSE(validate(c.graph));
  CHECK(rbds_brute(yes));
  CHECK(has_exact_clique(c.graph));
  CHECK(solve_eewhc_exact(c.graph).yes);

  auto no = rbds(1, 1, 1, {});
  auto cn = rbds_cross_compose({no});
  CHECK(cn.graph.edges.at({0, 1}) == 4);
  CHECK(cn.graph.target == 5);
  CHECK_FALSE(rbds_brute(no));
  CHECK_FALSE(has_exact_clique(cn.graph));
}

TEST_CASE("composition of eight instances") {
  std::vector<RbdsInstance> inputs(8, rbds(2, 2, 1, {{0, 0}}));
  CHECK_FALSE(any_yes(inputs));
  auto all_no = rbds_cross_compose(inputs);
  CHECK(all_no.graph.n == 2 + 4 + 2);
  CHECK_FALSE(has_exact_clique(all_no.graph));

  // (i, j, k) = (1, 0, 1); red 1 dominates both blues there and nothing else
  inputs[1 * 4 + 0 * 2 + 1] = rbds(2, 2, 1, {{0, 0}, {1, 0}, {1, 1}});
  CHECK(any_yes(inputs));
  auto one = rbds_cross_compose(inputs);
  CHECK(has_exact_clique(one.graph));
  const auto& L = one.layout;
  std::vector<VertexId> s{L.b(1), L.r(0, 1), L.s(1)};
  std::sort(s.begin(), s.end());
  CHECK(*clique_weight(one.graph, s) == one.graph.target);
}

TEST_CASE("published composition misses a yes-instance") {
  // Red 0 dominates instance (0,0,0) but also touches blue 0 of (0,0,1), so
  // block 1 overshoots d when s_0 is taken and undershoots when it is not.
  std::vector<RbdsInstance> inputs(8, rbds(1, 2, 1, {}));
  inputs[0] = rbds(1, 2, 1, {{0, 0}, {0, 1}});
  inputs[1] = rbds(1, 2, 1, {{0, 0}});
  CHECK(any_yes(inputs));
  CHECK_FALSE(has_exact_clique(rbds_cross_compose(inputs).graph));
  CHECK(has_exact_clique(rbds_cross_compose(inputs, CompositionVariant::padded_blocks).graph));
}

TEST_CASE("composition answers against the inputs") {
  CounterRng rng(8);
  int paper_misses = 0;
  for (int round = 0; round < 150; ++round) {
    auto m = static_cast<std::uint32_t>(rng.uniform(1, 2));
    auto n = static_cast<std::uint32_t>(rng.uniform(1, 2));
    auto d = static_cast<std::uint32_t>(rng.uniform(1, m));
    std::vector<RbdsInstance> inputs;
    for (int k = 0; k < 8; ++k) {
      auto r = gen::rbds(rng, m, n, d, 0.4);
      inputs.push_back(r);
    }
    bool expected = any_yes(inputs);
    for (auto variant : {CompositionVariant::paper, CompositionVariant::padded_blocks}) {
      auto c = rbds_cross_compose(inputs, variant);
      const auto& L = c.layout;
      if (variant == CompositionVariant::paper) {
        CHECK(c.graph.n == 2 + 2 * m + 2 + (2 * n + 1) * (d - 1));
      }
      CHECK(c.graph.n == L.vertex_count());
      bool got = has_exact_clique(c.graph);
      if (variant == CompositionVariant::padded_blocks) {
        CHECK(got == expected);
      } else {
        // a clique of weight t always yields a dominating set
        if (got) CHECK(expected);
        paper_misses += expected && !got;
      }
      for_each_hyperclique(c.graph, [&](const std::vector<VertexId>& s, const BigWeight& w) {
        auto sums = digit_sums(c, s);
        std::uint32_t top = *std::max_element(sums.begin(), sums.end());
        CHECK(top < L.base());
        WeightVector v{sums, L.base()};
        CHECK(v.to_integer() == w);
      });
    }
  }
  MESSAGE("published construction missed " << paper_misses << " yes-tuples");
}

TEST_CASE("composition input checks") {
  std::vector<RbdsInstance> two(2, rbds(1, 1, 1, {}));
  CHECK_THROWS_AS(rbds_cross_compose(two), std::invalid_argument);
  CHECK(pad_to_power(two, 3) == 2);
  CHECK(two.size() == 8);
  CHECK_NOTHROW(rbds_cross_compose(two));
  two[3] = rbds(2, 1, 1, {});
  CHECK_THROWS_AS(rbds_cross_compose(two), std::invalid_argument);
  CHECK_THROWS_AS(rbds_cross_compose({rbds(1, 1, 1, {}, RbdsMode::exact)}), std::invalid_argument);
  CHECK_THROWS_AS(rbds_cross_compose({}), std::invalid_argument);
}

TEST_CASE("hyperclique lift examples") {
  WeightedHypergraph no;
  no.n = 3;
  no.edges = {{{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 3}};
  no.target = 7;
  auto yes = no;
  yes.edges[{1, 2}] = 4;
  CHECK_FALSE(has_exact_clique(no));
  CHECK(has_exact_clique(yes));

  auto lifted = hyperclique_lift({no, yes}, 3);
  CHECK(lifted.d == 3);
  CHECK(lifted.n == 3 + 2);
  CHECK_FALSE(validate(lifted));
  CHECK(has_exact_clique(lifted));
  CHECK(lifted.edges.at({0, 1, 4}) == 1);
  CHECK(lifted.edges.at({1, 2, 4}) == 4);
  CHECK(lifted.edges.at({1, 2, 3}) == 3);
  CHECK(lifted.edges.at({0, 1, 2}) == 0);
  CHECK_FALSE(lifted.has_edge({0, 3, 4}));

  CHECK_FALSE(has_exact_clique(hyperclique_lift({no, no}, 3)));

  WeightedHypergraph zeros = no;
  for (auto& [t, w] : zeros.edges) w = 0;
  zeros.target = 1;
  CHECK_FALSE(has_exact_clique(hyperclique_lift({zeros, zeros}, 3)));

  auto non_edge = no;
  non_edge.edges.erase({0, 2});
  auto l2 = hyperclique_lift({non_edge, yes}, 3);
  CHECK(l2.edges.at({0, 2, 3}) == 8);

  zeros.target = 0;
  CHECK_THROWS_AS(hyperclique_lift({zeros, zeros}, 3), std::invalid_argument);
  CHECK_THROWS_AS(hyperclique_lift({no, no, no}, 4), std::invalid_argument);
  CHECK_THROWS_AS(hyperclique_lift({no}, 2), std::invalid_argument);
}

TEST_CASE("hyperclique lift is an OR") {
  CounterRng rng(23);
  for (int round = 0; round < 60; ++round) {
    auto n = static_cast<std::uint32_t>(rng.uniform(1, 4));
    auto d_out = static_cast<std::uint32_t>(rng.uniform(3, 4));
    std::uint32_t count = d_out == 3 ? 2 : 4;
    BigWeight t = rng.uniform(1, 8);
    std::vector<WeightedHypergraph> inputs;
    bool expected = false;
    for (std::uint32_t k = 0; k < count; ++k) {
      auto h = gen::hypergraph(rng, n, 2, 0.6, 4);
      h.target = t;
      expected = expected || has_exact_clique(h);
      inputs.push_back(h);
    }
    auto lifted = hyperclique_lift(inputs, d_out);
    CHECK(lifted.n == n + 2 * (d_out - 2));
    CHECK(has_exact_clique(lifted) == expected);
  }
}

TEST_CASE("exact RBDS to subset sum") {
  auto r = rbds(2, 1, 1, {{0, 0}}, RbdsMode::exact);
  auto s = erbds_to_subset_sum(r);
  CHECK(s.items == std::vector<BigWeight>{4, 3});
  CHECK(s.target == 4);
  CHECK(rbds_brute(r));
  CHECK(solve_subset_sum(s).yes);

  auto empty = rbds(2, 1, 1, {}, RbdsMode::exact);
  CHECK_FALSE(rbds_brute(empty));
  CHECK_FALSE(solve_subset_sum(erbds_to_subset_sum(empty)).yes);
  CHECK_THROWS_AS(erbds_to_subset_sum(rbds(2, 1, 1, {})), std::invalid_argument);

  // every bipartite graph with nR, nB <= 3 and every budget
  int checked = 0;
  for (std::uint32_t nR = 1; nR <= 3; ++nR) {
    for (std::uint32_t nB = 0; nB <= 3; ++nB) {
      for (std::uint32_t bits = 0; bits < (1u << (nR * nB)); ++bits) {
        for (std::uint32_t d = 1; d <= nR; ++d) {
          auto g = RbdsInstance::empty(nR, nB, d, RbdsMode::exact);
          for (std::uint32_t e = 0; e < nR * nB; ++e) g.adj[e / nB][e % nB] = (bits >> e) & 1;
          auto ss = erbds_to_subset_sum(g);
          bool expected = rbds_brute(g);
          REQUIRE(solve_subset_sum(ss).yes == expected);
          REQUIRE(solve_rbds(g).yes == expected);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("isolated red padding") {
  auto r = rbds(2, 2, 2, {{0, 0}, {1, 1}});
  auto p = pad_isolated_reds(r);
  CHECK(p.nR == 4);
  CHECK(p.adj[2] == std::vector<bool>{false, false});
  CHECK(p.mode == RbdsMode::at_most);
  CounterRng rng(5);
  for (int i = 0; i < 300; ++i) {
    auto nR = static_cast<std::uint32_t>(rng.uniform(1, 3));
    auto nB = static_cast<std::uint32_t>(rng.uniform(0, 3));
    auto g = gen::rbds(rng, nR, nB, static_cast<std::uint32_t>(rng.uniform(1, nR)), 0.4);
    auto padded = pad_isolated_reds(g);
    CHECK(padded.nR == g.nR + g.d);
    CHECK(rbds_brute(g) == rbds_brute(padded, true));
  }
}

TEST_CASE("hyperclique to CSP") {
  WeightedHypergraph h;
  h.n = 4;
  h.edges = {{{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 3}};
  h.target = 6;
  auto f = hyperclique_to_csp(h);
  CHECK_FALSE(validate(f));
  REQUIRE(f.applications.size() == 6);
  CHECK(f.language == std::vector<CspConstraint>{CspConstraint::conjunction(2)});
  std::vector<BigInt> weights;
  for (const auto& a : f.applications) weights.push_back(a.weight);
  CHECK(weights == std::vector<BigInt>{1, 2, 7, 3, 7, 7});
  CHECK(f.applications[2].indices == std::vector<VertexId>{0, 3});
  CHECK(eval_csp(f, {true, true, true, false}) == 6);
  CHECK(solve_csp(f, CspMode::exact).yes);

  WeightedHypergraph empty;
  CHECK(solve_csp(hyperclique_to_csp(empty), CspMode::exact).yes);
  CHECK(has_exact_clique(empty));

  // target above the total weight: no non-edge may be usable
  WeightedHypergraph lone;
  lone.n = 2;
  lone.target = 1;
  CHECK_FALSE(has_exact_clique(lone));
  CHECK_FALSE(solve_csp(hyperclique_to_csp(lone), CspMode::exact).yes);

  CounterRng rng(61);
  for (int i = 0; i < 400; ++i) {
    auto n = static_cast<std::uint32_t>(rng.uniform(0, 5));
    auto d = static_cast<std::uint32_t>(rng.uniform(2, 3));
    auto g = gen::hypergraph(rng, n, d, 0.6, 3);
    g.target = rng.uniform(0, 12);
    CHECK(solve_csp(hyperclique_to_csp(g), CspMode::exact).yes == has_exact_clique(g));
  }
}

TEST_CASE("characteristic polynomials") {
  auto and2 = characteristic_polynomial(CspConstraint::conjunction(2));
  CHECK(and2.coeffs == std::map<std::uint32_t, BigInt>{{0, 0}, {1, 0}, {2, 0}, {3, 1}});
  CHECK(and2.degree() == 2);

  auto or2 = characteristic_polynomial(CspConstraint{2, {false, true, true, true}});
  CHECK(or2.coeffs == std::map<std::uint32_t, BigInt>{{0, 0}, {1, 1}, {2, 1}, {3, -1}});
  CHECK(or2.degree() == 2);

  auto one = characteristic_polynomial(CspConstraint{2, {true, true, true, true}});
  CHECK(one.coeffs.at(0) == 1);
  CHECK(one.degree() == 0);
  auto negation = characteristic_polynomial(CspConstraint{1, {true, false}});
  CHECK(negation.coeffs == std::map<std::uint32_t, BigInt>{{0, 1}, {1, -1}});
  CHECK(negation.degree() == 1);
  CHECK(characteristic_polynomial(CspConstraint{3, std::vector<bool>(8, false)}).degree() == 0);

  for (std::uint32_t d = 1; d <= 6; ++d) {
    CHECK(language_degree({CspConstraint::conjunction(d)}) == d);
  }
  CHECK(language_degree({CspConstraint::conjunction(2), CspConstraint{1, {true, false}}}) == 2);
  CHECK(language_degree({}) == 0);

  CounterRng rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto f = gen::constraint(rng, static_cast<std::uint32_t>(rng.uniform(1, 6)));
    auto p = characteristic_polynomial(f);
    for (std::uint32_t x = 0; x < (1u << f.arity); ++x) {
      REQUIRE(p.eval(x) == (f.eval(x) ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(characteristic_polynomial(CspConstraint{2, {true}}), std::invalid_argument);
}
