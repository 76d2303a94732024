#pragma once

#include <cstdint>
#include <vector>

#include "wkern/bigint.hpp"

namespace wkern {

/// Dinic's algorithm with arbitrary-precision capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), next_(nodes) {}

  /// Returns an id for `flow`.
  std::size_t add_edge(std::size_t from, std::size_t to, const BigInt& capacity);

  BigInt run(std::size_t source, std::size_t sink);

  BigInt flow(std::size_t edge_id) const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    BigInt residual;
  };

  bool levels(std::size_t source, std::size_t sink);
  BigInt push(std::size_t v, std::size_t sink, const BigInt& limit);

  std::vector<std::vector<Arc>> graph_;
  std::vector<std::pair<std::size_t, std::size_t>> ids_;
  std::vector<BigInt> capacity_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace wkern
