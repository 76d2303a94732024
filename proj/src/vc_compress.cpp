#include "wkern/vc_compress.hpp"

#include <algorithm>
#include <stdexcept>

#include "wkern/maxflow.hpp"

namespace wkern {

namespace {

bool shortlex(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void require_valid(const NodeWeightedBipartiteGraph& g, const std::vector<BigWeight>& w) {
  if (auto v = validate(g)) throw std::invalid_argument(v->to_string());
  if (w.size() != g.vertex_count()) throw std::invalid_argument("weight count differs from |V|");
  for (const auto& x : w) {
    if (x < 1) throw std::invalid_argument("weights must be >= 1");
  }
}

}  // namespace

BMatchingCert max_b_matching(const NodeWeightedBipartiteGraph& g, const std::vector<BigWeight>& w) {
  require_valid(g, w);
  const std::size_t n = g.vertex_count();
  const std::size_t source = n, sink = n + 1;
  MaxFlow flow(n + 2);
  for (VertexId u : g.left) flow.add_edge(source, u, w[u]);
  for (VertexId v : g.right) flow.add_edge(v, sink, w[v]);
  std::vector<std::pair<Edge, std::size_t>> ids;
  for (const auto& e : g.edges) {
    ids.emplace_back(e, flow.add_edge(e.first, e.second, std::min(w[e.first], w[e.second])));
  }
  BMatchingCert cert;
  cert.value = flow.run(source, sink);
  for (const auto& [e, id] : ids) cert.z.emplace(e, flow.flow(id));
  return cert;
}

BMatchingCert max_b_matching(const NodeWeightedBipartiteGraph& g) { return max_b_matching(g, g.w); }

Compression compress_vc_weights(const NodeWeightedBipartiteGraph& g) {
  BMatchingCert z = max_b_matching(g);
  Compression out;
  out.w = g.w;
  out.trace.initial_value = z.value;

  bool idle = false;
  while (!idle) {
    idle = true;
    for (auto& [e, value] : z.z) {
      if (value <= 1) continue;
      BigWeight delta = value - 1;
      out.w[e.first] -= delta;
      out.w[e.second] -= delta;
      value = 1;
      out.trace.rule1.push_back({e, delta});
      idle = false;
    }
  }

  const BigWeight n = g.vertex_count();
  for (VertexId v = 0; v < out.w.size(); ++v) {
    if (out.w[v] > n) {
      out.trace.rule2.push_back({v, out.w[v]});
      out.w[v] = n;
    }
  }
  out.trace.final_w = out.w;
  return out;
}

std::vector<BigWeight> replay_trace(const NodeWeightedBipartiteGraph& g,
                                    const CompressionTrace& trace) {
  std::vector<BigWeight> w = g.w;
  for (const auto& step : trace.rule1) {
    if (!g.edges.count(step.edge)) throw std::invalid_argument("trace names an unknown edge");
    if (step.delta <= 0) throw std::invalid_argument("rule 1 step without effect");
    for (VertexId v : {step.edge.first, step.edge.second}) {
      w[v] -= step.delta;
      if (w[v] < 1) throw std::invalid_argument("rule 1 step leaves a weight below 1");
    }
  }
  const BigWeight n = g.vertex_count();
  for (const auto& step : trace.rule2) {
    if (step.vertex >= w.size() || w[step.vertex] != step.old_weight || step.old_weight <= n) {
      throw std::invalid_argument("rule 2 step does not match the weights");
    }
    w[step.vertex] = n;
  }
  return w;
}

CoverFamilyCheck verify_min_cover_preservation(const NodeWeightedBipartiteGraph& g,
                                               const std::vector<BigWeight>& w,
                                               const std::vector<BigWeight>& w2,
                                               std::uint32_t cap) {
  auto a = min_weight_vertex_covers(g, w, cap).covers;
  auto b = min_weight_vertex_covers(g, w2, cap).covers;
  std::sort(a.begin(), a.end(), shortlex);
  std::sort(b.begin(), b.end(), shortlex);
  std::vector<std::vector<VertexId>> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff),
                                shortlex);
  CoverFamilyCheck out;
  if (!diff.empty()) {
    out.same = false;
    out.counterexample = diff.front();
  }
  return out;
}

EquivalenceCheck vertex_cover_equivalent(const NodeWeightedBipartiteGraph& g,
                                         const std::vector<BigWeight>& w,
                                         const std::vector<BigWeight>& w2,
                                         std::uint32_t cap) {
  auto covers = enumerate_minimal_vertex_covers(g, cap);
  std::vector<BigWeight> first, second;
  for (const auto& c : covers) {
    first.push_back(cover_weight(w, c));
    second.push_back(cover_weight(w2, c));
  }
  EquivalenceCheck out;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    for (std::size_t j = 0; j < covers.size(); ++j) {
      if ((first[i] <= first[j]) != (second[i] <= second[j])) {
        out.equivalent = false;
        out.counterexample = {covers[i], covers[j]};
        return out;
      }
    }
  }
  return out;
}

NodeWeightedBipartiteGraph star_witness(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  NodeWeightedBipartiteGraph g;
  g.left = {0};
  g.w.assign(n, 1);
  g.w[0] = n;
  for (VertexId leaf = 1; leaf < n; ++leaf) {
    g.right.push_back(leaf);
    g.edges.emplace(0, leaf);
  }
  return g;
}

BigInt threshold_offset(const std::vector<BigInt>& w, const BigInt& t) {
  BigInt low = t;
  for (const auto& x : w) low = std::min(low, x);
  return boost::multiprecision::abs(low) + 1;
}

NodeWeightedBipartiteGraph threshold_gadget(const std::vector<BigInt>& w, const BigInt& t) {
  const auto n = static_cast<VertexId>(w.size());
  const BigInt c = threshold_offset(w, t);
  NodeWeightedBipartiteGraph g;
  g.w.resize(2 * (n + 1));
  for (VertexId i = 0; i <= n; ++i) {
    g.left.push_back(i);
    g.right.push_back(n + 1 + i);
    g.edges.emplace(i, n + 1 + i);
    g.w[i] = (i < n ? w[i] : t) + c;
    g.w[n + 1 + i] = c;
  }
  return g;
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> threshold_covers(
    std::uint32_t n, const std::vector<bool>& x) {
  if (x.size() != n) throw std::invalid_argument("input length differs from n");
  std::vector<VertexId> s1, s2;
  for (VertexId i = 0; i < n; ++i) {
    s1.push_back(x[i] ? i : n + 1 + i);
    s2.push_back(n + 1 + i);
  }
  s1.push_back(2 * n + 1);
  s2.push_back(n);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  return {s1, s2};
}

}  // namespace wkern
