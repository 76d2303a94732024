#include <doctest.h>

#include "wkern/generators.hpp"
#include "wkern/instances.hpp"

using namespace wkern;

namespace {

WeightedHypergraph k3(long t) {
  WeightedHypergraph h;
  h.d = 2;
  h.n = 3;
  h.edges = {{{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 3}};
  h.target = t;
  return h;
}

}  // namespace

TEST_CASE("validate reports the first broken invariant") {
  WeightedHypergraph h = k3(6);
  CHECK_FALSE(validate(h));
  h.edges.emplace(Tuple{1, 0}, 4);
  auto v = validate(h);
  REQUIRE(v);
  CHECK(v->message == "tuple not increasing");

  SubsetSumInstance s{{BigInt(0)}, 0};
  v = validate(s);
  REQUIRE(v);
  CHECK(v->message == "item must be ≥ 1");
  CHECK(v->location == "items[0]");
}

TEST_CASE("validate catches range and shape errors") {
  WeightedHypergraph h = k3(6);
  h.edges.emplace(Tuple{1, 3}, 0);
  CHECK(validate(h)->message == "vertex out of range");

  RbdsInstance r = RbdsInstance::empty(2, 1, 3);
  CHECK(validate(r)->location == "d");

  CspFormula f;
  f.n = 2;
  f.language.push_back(CspConstraint::conjunction(2));
  f.language[0].table.pop_back();
  CHECK(validate(f)->message == "truth table length must be 2^arity");

  NodeWeightedBipartiteGraph g;
  g.left = {0};
  g.right = {1};
  g.w = {1, 0};
  CHECK(validate(g)->message == "weight must be ≥ 1");
  g.w = {1, 1};
  g.edges.emplace(1, 0);
  CHECK(validate(g)->message == "edge does not cross the bipartition");
}

TEST_CASE("empty instances are valid") {
  CHECK_FALSE(validate(WeightedHypergraph{}));
  CHECK_FALSE(validate(SubsetSumInstance{}));
  CHECK_FALSE(validate(CspFormula{}));
  CHECK_FALSE(validate(NodeWeightedBipartiteGraph{}));
}

TEST_CASE("b-matching certificates") {
  NodeWeightedBipartiteGraph g;
  g.left = {0};
  g.right = {1};
  g.edges = {{0, 1}};
  g.w = {3, 5};
  CHECK_FALSE(validate(g, BMatchingCert{{{{0, 1}, 3}}, 3}));
  CHECK(validate(g, BMatchingCert{{{{0, 1}, 4}}, 4})->message == "capacity exceeded");
  CHECK(validate(g, BMatchingCert{{{{0, 1}, 2}}, 3})->location == "value");
}

TEST_CASE("serialize and parse round-trip") {
  SUBCASE("big target survives") {
    WeightedHypergraph h = k3(0);
    h.target = *parse_decimal("12345678901234567890");
    std::string text = serialize(h);
    CHECK(text.back() == '\n');
    CHECK(text.find("\"12345678901234567890\"") != std::string::npos);
    CHECK(std::get<WeightedHypergraph>(parse(text)) == h);
  }
  SUBCASE("random instances of every kind") {
    CounterRng rng(11);
    BigInt huge = ipow(10, 40);
    for (int i = 0; i < 200; ++i) {
      auto n = static_cast<std::uint32_t>(rng.uniform(0, 6));
      std::vector<Instance> all = {
          gen::hypergraph(rng, n, static_cast<std::uint32_t>(rng.uniform(2, 3)), 0.6, huge, huge),
          gen::subset_sum(rng, n, huge, 17),
          gen::rbds(rng, n + 1, n, 1, 0.5, i % 2 ? RbdsMode::exact : RbdsMode::at_most),
          gen::csp(rng, n + 1, n * 2, 3, 3, huge, BigInt(-5)),
          gen::bipartite(rng, n / 2, n - n / 2, 0.5, huge),
      };
      for (const auto& x : all) {
        REQUIRE_FALSE(validate(x));
        Instance back = parse(serialize(x));
        CHECK(back == x);
        CHECK(kind_of(back) == kind_of(x));
      }
    }
  }
}

TEST_CASE("parse rejects malformed input without a partial result") {
  SUBCASE("unknown field name") {
    const char* text = R"({"kind":"subset_sum","payload":{"itemz":["1"],"t":"1"}})";
    try {
      parse(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.field() == "/payload/itemz");
      CHECK(e.line() == 0);
    }
  }
  SUBCASE("syntax error carries its line") {
    const char* text = "{\"kind\": \"eewhc\",\n \"payload\": {\n  \"d\": 2,, }}";
    try {
      parse(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("numbers must be decimal strings") {
    CHECK_THROWS_AS(parse(R"({"kind":"subset_sum","payload":{"items":[1],"t":"1"}})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"kind":"subset_sum","payload":{"items":["+1"],"t":"1"}})"),
                    ParseError);
    CHECK_THROWS_AS(parse(R"({"kind":"subset_sum","payload":{"items":["-1"],"t":"1"}})"),
                    ParseError);
  }
  SUBCASE("unknown kind and bad adjacency") {
    CHECK_THROWS_AS(parse(R"({"kind":"graph","payload":{}})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"kind":"rbds","payload":{"nR":1,"nB":1,"d":1,"edges":[[0,1]]}})"),
                    ParseError);
  }
}

TEST_CASE("evaluation helpers") {
  WeightedHypergraph h = k3(6);
  std::vector<VertexId> all{0, 1, 2};
  CHECK(*clique_weight(h, all) == 6);
  h.edges.erase({0, 2});
  CHECK_FALSE(clique_weight(h, all));
  CHECK(*clique_weight(h, std::vector<VertexId>{}) == 0);
  CHECK(all_tuples(4, 2).size() == 6);
  CHECK(all_tuples(4, 2).front() == Tuple{0, 1});
  CHECK(all_tuples(2, 3).empty());
}
