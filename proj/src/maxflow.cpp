#include "wkern/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace wkern {

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, const BigInt& capacity) {
  if (from >= graph_.size() || to >= graph_.size()) throw std::out_of_range("flow node");
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  const std::size_t back_slot = graph_[to].size() + (from == to ? 1 : 0);
  graph_[from].push_back(Arc{to, back_slot, capacity});
  graph_[to].push_back(Arc{from, graph_[from].size() - 1, 0});
  ids_.emplace_back(from, graph_[from].size() - 1);
  capacity_.push_back(capacity);
  return ids_.size() - 1;
}

bool MaxFlow::levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::deque<std::size_t> queue{source};
  level_[source] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (const Arc& a : graph_[v]) {
      if (a.residual > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

BigInt MaxFlow::push(std::size_t v, std::size_t sink, const BigInt& limit) {
  if (v == sink) return limit;
  for (std::size_t& i = next_[v]; i < graph_[v].size(); ++i) {
    Arc& a = graph_[v][i];
    if (a.residual <= 0 || level_[a.to] != level_[v] + 1) continue;
    BigInt got = push(a.to, sink, a.residual < limit ? a.residual : limit);
    if (got > 0) {
      a.residual -= got;
      graph_[a.to][a.rev].residual += got;
      return got;
    }
  }
  return 0;
}

BigInt MaxFlow::run(std::size_t source, std::size_t sink) {
  if (source == sink) throw std::invalid_argument("source equals sink");
  BigInt total = 0;
  BigInt unbounded = 1;
  for (const Arc& a : graph_[source]) unbounded += a.residual;
  while (levels(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    for (;;) {
      BigInt got = push(source, sink, unbounded);
      if (got == 0) break;
      total += got;
    }
  }
  return total;
}

BigInt MaxFlow::flow(std::size_t edge_id) const {
  const auto& [from, slot] = ids_.at(edge_id);
  return capacity_[edge_id] - graph_[from][slot].residual;
}

}  // namespace wkern
