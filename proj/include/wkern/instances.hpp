#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wkern/bigint.hpp"

namespace wkern {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids naming one hyperedge.
using Tuple = std::vector<VertexId>;

/// d-uniform hypergraph on vertices [0, n) with non-negative hyperedge
/// weights and an exact target. Missing tuples are non-edges.
struct WeightedHypergraph {
  std::uint32_t d = 2;
  std::uint32_t n = 0;
  std::map<Tuple, BigWeight> edges;
  BigWeight target = 0;

  bool operator==(const WeightedHypergraph&) const = default;

  bool has_edge(const Tuple& t) const { return edges.count(t) != 0; }
  BigWeight max_weight() const;
};

struct SubsetSumInstance {
  std::vector<BigWeight> items;
  BigWeight target = 0;

  bool operator==(const SubsetSumInstance&) const = default;
};

enum class RbdsMode { at_most, exact };

/// Red/blue bipartite graph. `adj[x][q]` is true iff red x is adjacent to
/// blue q. In `exact` mode a solution has exactly `d` reds and dominates each
/// blue exactly once.
struct RbdsInstance {
  std::uint32_t nR = 0;
  std::uint32_t nB = 0;
  std::vector<std::vector<bool>> adj;
  std::uint32_t d = 1;
  RbdsMode mode = RbdsMode::at_most;

  bool operator==(const RbdsInstance&) const = default;

  static RbdsInstance empty(std::uint32_t reds, std::uint32_t blues, std::uint32_t budget,
                            RbdsMode mode = RbdsMode::at_most);
};

/// Boolean constraint given by its truth table; entry `x` is the value on the
/// assignment whose i-th argument is bit i of `x`.
struct CspConstraint {
  std::uint32_t arity = 0;
  std::vector<bool> table;

  bool operator==(const CspConstraint&) const = default;

  bool eval(std::uint32_t assignment_bits) const { return table[assignment_bits]; }

  static CspConstraint conjunction(std::uint32_t arity);
};

struct CspApplication {
  std::uint32_t constraint = 0;
  std::vector<VertexId> indices;
  BigInt weight = 0;

  bool operator==(const CspApplication&) const = default;
};

struct CspFormula {
  std::uint32_t n = 0;
  std::vector<CspConstraint> language;
  std::vector<CspApplication> applications;
  BigInt target = 0;

  bool operator==(const CspFormula&) const = default;
};

using Edge = std::pair<VertexId, VertexId>;

/// Bipartite graph on vertices [0, w.size()) split into `left` and `right`.
/// Edges are stored as (left endpoint, right endpoint).
struct NodeWeightedBipartiteGraph {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  std::set<Edge> edges;
  std::vector<BigWeight> w;

  bool operator==(const NodeWeightedBipartiteGraph&) const = default;

  std::size_t vertex_count() const { return w.size(); }
  std::vector<std::vector<VertexId>> neighbours() const;
};

/// Edge values of a b-matching together with their total.
struct BMatchingCert {
  std::map<Edge, BigWeight> z;
  BigWeight value = 0;
};

/// Multilinear polynomial in k variables; key bit i set means x_{i+1} occurs.
struct MultilinearPolynomial {
  std::uint32_t arity = 0;
  std::map<std::uint32_t, BigInt> coeffs;

  bool operator==(const MultilinearPolynomial&) const = default;

  BigInt eval(std::uint32_t assignment_bits) const;
  std::uint32_t degree() const;
};

using Instance = std::variant<WeightedHypergraph, SubsetSumInstance, RbdsInstance, CspFormula,
                              NodeWeightedBipartiteGraph>;

/// First violated invariant, with a location path such as "edges[3]".
struct Violation {
  std::string location;
  std::string message;

  std::string to_string() const { return location + ": " + message; }
};

std::optional<Violation> validate(const WeightedHypergraph& h);
std::optional<Violation> validate(const SubsetSumInstance& s);
std::optional<Violation> validate(const RbdsInstance& r);
std::optional<Violation> validate(const CspFormula& f);
std::optional<Violation> validate(const NodeWeightedBipartiteGraph& g);
std::optional<Violation> validate(const Instance& instance);
std::optional<Violation> validate(const NodeWeightedBipartiteGraph& g, const BMatchingCert& z);

/// Thrown by `parse`. `line` is 1-based and 0 when the failure is structural
/// (then `field` holds a JSON pointer to the offending value).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what)
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// Kind tag used in the instance file: eewhc, subset_sum, rbds, erbds, csp,
/// bwvc.
std::string kind_of(const Instance& instance);

/// One JSON document on a single line followed by '\n'. Big integers are
/// decimal strings.
std::string serialize(const Instance& instance);

/// Inverse of `serialize`. Throws ParseError; never returns a partial value.
Instance parse(std::string_view text);

// Evaluation helpers shared by the oracles and the tests.

/// Total weight of `vertices` if it is a hyperclique, nullopt otherwise.
/// `vertices` must be sorted and duplicate-free.
std::optional<BigWeight> clique_weight(const WeightedHypergraph& h,
                                       std::span<const VertexId> vertices);

BigWeight subset_total(const SubsetSumInstance& s, std::span<const std::size_t> indices);

/// Whether `reds` solves `r` under its mode (size bound included).
bool is_rbds_solution(const RbdsInstance& r, std::span<const VertexId> reds);

bool is_vertex_cover(const NodeWeightedBipartiteGraph& g, std::span<const VertexId> cover);

BigWeight cover_weight(std::span<const BigWeight> w, std::span<const VertexId> cover);

/// All d-element subsets of [0, n) in lexicographic order.
std::vector<Tuple> all_tuples(std::uint32_t n, std::uint32_t d);

}  // namespace wkern
