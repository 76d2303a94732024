#include "wkern/compositions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wkern {

BigWeight WeightVector::to_integer() const {
  BigWeight value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) value = value * base + *it;
  return value;
}

std::uint32_t CompositionLayout::padding(std::uint32_t v) const {
  if (variant == CompositionVariant::padded_blocks && v != msd()) return m;
  return d - 1;
}

VertexId CompositionLayout::p(std::uint32_t v, std::uint32_t y) const {
  std::uint32_t offset = 2 * z + z * m;
  if (variant == CompositionVariant::paper) return offset + v * (d - 1) + y;
  return offset + v * m + y;
}

std::uint32_t CompositionLayout::target_digit(std::uint32_t v) const {
  if (variant == CompositionVariant::padded_blocks && v != msd()) return m + 1;
  return d;
}

std::uint32_t CompositionLayout::base() const {
  return variant == CompositionVariant::paper ? m + d + 2 : 2 * m + d + 2;
}

std::uint32_t CompositionLayout::vertex_count() const {
  std::uint32_t total = 2 * z + z * m;
  for (std::uint32_t v = 0; v < positions(); ++v) total += padding(v);
  return total;
}

namespace {

std::uint64_t checked_pow(std::uint64_t z, std::uint32_t e) {
  std::uint64_t out = 1;
  for (std::uint32_t k = 0; k < e; ++k) {
    if (z != 0 && out > UINT64_MAX / z) return UINT64_MAX;
    out *= z;
  }
  return out;
}

/// z with z^e == count, or 0 if count is not a perfect power.
std::uint32_t exact_root(std::size_t count, std::uint32_t e) {
  for (std::uint32_t z = 1;; ++z) {
    std::uint64_t v = checked_pow(z, e);
    if (v == count) return z;
    if (v > count) return 0;
  }
}

template <class T>
std::uint32_t pad_generic(std::vector<T>& inputs, std::uint32_t exponent) {
  if (inputs.empty()) throw std::invalid_argument("no inputs to pad");
  if (exponent == 0) throw std::invalid_argument("exponent must be positive");
  std::uint32_t z = 1;
  while (checked_pow(z, exponent) < inputs.size()) ++z;
  const T first = inputs.front();
  inputs.resize(checked_pow(z, exponent), first);
  return z;
}

Tuple pair(VertexId a, VertexId b) { return a < b ? Tuple{a, b} : Tuple{b, a}; }

}  // namespace

std::uint32_t pad_to_power(std::vector<RbdsInstance>& inputs, std::uint32_t exponent) {
  return pad_generic(inputs, exponent);
}

std::uint32_t pad_to_power(std::vector<WeightedHypergraph>& inputs, std::uint32_t exponent) {
  return pad_generic(inputs, exponent);
}

ComposedInstance rbds_cross_compose(const std::vector<RbdsInstance>& inputs,
                                    CompositionVariant variant) {
  if (inputs.empty()) throw std::invalid_argument("no inputs to compose");
  const std::uint32_t z = exact_root(inputs.size(), 3);
  if (z == 0) throw std::invalid_argument("input count must be a perfect cube");
  const auto& first = inputs.front();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& r = inputs[i];
    if (auto v = validate(r)) {
      throw std::invalid_argument("input " + std::to_string(i) + ": " + v->to_string());
    }
    if (r.mode != RbdsMode::at_most) throw std::invalid_argument("exact-mode input");
    if (r.nR != first.nR || r.nB != first.nB || r.d != first.d) {
      throw std::invalid_argument("inputs must share nR, nB and d");
    }
  }

  ComposedInstance out;
  CompositionLayout& L = out.layout;
  L = {z, first.nR, first.nB, first.d, variant};
  const std::uint32_t m = L.m, n = L.n, len = L.positions(), base = L.base();
  const WeightVector zero{std::vector<std::uint32_t>(len, 0), base};

  auto add = [&](VertexId a, VertexId b, const WeightVector& w) {
    Tuple t = pair(a, b);
    out.graph.edges[t] = w.to_integer();
    out.vectors[t] = w;
  };

  for (std::uint32_t j = 0; j < z; ++j) {
    for (std::uint32_t x = 0; x < m; ++x) {
      for (std::uint32_t y = x + 1; y < m; ++y) add(L.r(j, x), L.r(j, y), zero);
      for (std::uint32_t k = 0; k < z; ++k) add(L.s(k), L.r(j, x), zero);
    }
  }
  for (std::uint32_t i = 0; i < z; ++i) {
    for (std::uint32_t j = 0; j < z; ++j) {
      for (std::uint32_t x = 0; x < m; ++x) {
        WeightVector w = zero;
        w.digits[L.msd()] = 1;
        for (std::uint32_t k = 0; k < z; ++k) {
          const auto& row = inputs[(i * z + j) * z + k].adj[x];
          for (std::uint32_t q = 0; q < n; ++q) w.digits[k * n + q] = row[q] ? 1 : 0;
        }
        add(L.b(i), L.r(j, x), w);
      }
    }
    for (std::uint32_t k = 0; k < z; ++k) {
      WeightVector w = zero;
      for (std::uint32_t v = 0; v < n * z; ++v) w.digits[v] = v / n == k ? 0 : 1;
      add(L.b(i), L.s(k), w);
    }
  }

  std::vector<VertexId> padding;
  for (std::uint32_t v = 0; v < len; ++v) {
    for (std::uint32_t y = 0; y < L.padding(v); ++y) padding.push_back(L.p(v, y));
  }
  for (std::uint32_t v = 0; v < len; ++v) {
    WeightVector unit = zero;
    unit.digits[v] = 1;
    for (std::uint32_t y = 0; y < L.padding(v); ++y) {
      const VertexId pv = L.p(v, y);
      for (std::uint32_t i = 0; i < z; ++i) add(L.b(i), pv, unit);
      for (VertexId u = z; u < L.vertex_count(); ++u) {
        if (u != pv) add(u, pv, zero);
      }
    }
  }

  out.graph.d = 2;
  out.graph.n = L.vertex_count();
  out.target.base = base;
  for (std::uint32_t v = 0; v < len; ++v) out.target.digits.push_back(L.target_digit(v));
  out.graph.target = out.target.to_integer();
  return out;
}

std::vector<std::uint32_t> digit_sums(const ComposedInstance& c, std::span<const VertexId> clique) {
  std::vector<std::uint32_t> sums(c.layout.positions(), 0);
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      auto it = c.vectors.find(pair(clique[a], clique[b]));
      if (it == c.vectors.end()) throw std::invalid_argument("vertices do not form a clique");
      for (std::size_t v = 0; v < sums.size(); ++v) sums[v] += it->second.digits[v];
    }
  }
  return sums;
}

WeightedHypergraph hyperclique_lift(const std::vector<WeightedHypergraph>& inputs,
                                    std::uint32_t d_out) {
  if (d_out < 3) throw std::invalid_argument("lift needs d_out >= 3");
  if (inputs.empty()) throw std::invalid_argument("no inputs to lift");
  const std::uint32_t levels = d_out - 2;
  const std::uint32_t z = exact_root(inputs.size(), levels);
  if (z == 0) throw std::invalid_argument("input count must be z^(d_out - 2)");
  const auto& first = inputs.front();
  for (const auto& h : inputs) {
    if (auto v = validate(h)) throw std::invalid_argument(v->to_string());
    if (h.d != 2) throw std::invalid_argument("lift inputs must be graphs");
    if (h.n != first.n || h.target != first.target) {
      throw std::invalid_argument("inputs must share n and t");
    }
  }
  if (first.target <= 0) throw std::invalid_argument("lift needs t > 0");

  const std::uint32_t n = first.n;
  WeightedHypergraph out;
  out.d = d_out;
  out.n = n + z * levels;
  out.target = first.target;
  const BigWeight heavy = first.target + 1;
  for (auto& t : all_tuples(out.n, d_out)) {
    std::vector<int> pick(levels, -1);
    bool edge = true;
    Tuple inside;
    for (VertexId v : t) {
      if (v < n) {
        inside.push_back(v);
        continue;
      }
      const std::uint32_t level = (v - n) / z;
      if (pick[level] >= 0) {
        edge = false;
        break;
      }
      pick[level] = static_cast<int>((v - n) % z);
    }
    if (!edge) continue;
    BigWeight w = 0;
    if (std::find(pick.begin(), pick.end(), -1) == pick.end()) {
      std::size_t index = 0;
      for (std::uint32_t l = 0; l < levels; ++l) index = index * z + static_cast<std::size_t>(pick[l]);
      auto it = inputs[index].edges.find(inside);
      w = it == inputs[index].edges.end() ? heavy : it->second;
    }
    out.edges.emplace(std::move(t), std::move(w));
  }
  return out;
}

SubsetSumInstance erbds_to_subset_sum(const RbdsInstance& r) {
  if (auto v = validate(r)) throw std::invalid_argument(v->to_string());
  if (r.mode != RbdsMode::exact) {
    throw std::invalid_argument("erbds_to_subset_sum needs an exact-mode instance");
  }
  const BigInt base = BigInt(r.nR) + 1;
  const BigInt top = ipow(base, r.nB);
  SubsetSumInstance out;
  for (std::uint32_t x = 0; x < r.nR; ++x) {
    BigInt number = top;
    for (std::uint32_t q = 0; q < r.nB; ++q) {
      if (r.adj[x][q]) number += ipow(base, q);
    }
    out.items.push_back(number);
  }
  out.target = r.d * top;
  for (std::uint32_t q = 0; q < r.nB; ++q) out.target += ipow(base, q);
  return out;
}

RbdsInstance pad_isolated_reds(const RbdsInstance& r) {
  if (auto v = validate(r)) throw std::invalid_argument(v->to_string());
  RbdsInstance out = r;
  out.nR += r.d;
  out.adj.resize(out.nR, std::vector<bool>(r.nB, false));
  return out;
}

CspFormula hyperclique_to_csp(const WeightedHypergraph& h) {
  if (auto v = validate(h)) throw std::invalid_argument(v->to_string());
  BigWeight W = 0;
  for (const auto& [t, w] : h.edges) W += w;
  const BigWeight heavy = std::max(W, h.target) + 1;
  CspFormula f;
  f.n = h.n;
  f.language = {CspConstraint::conjunction(h.d)};
  f.target = h.target;
  for (auto& t : all_tuples(h.n, h.d)) {
    auto it = h.edges.find(t);
    BigInt w = it == h.edges.end() ? heavy : it->second;
    f.applications.push_back(CspApplication{0, std::move(t), std::move(w)});
  }
  return f;
}

MultilinearPolynomial characteristic_polynomial(const CspConstraint& f) {
  if (f.table.size() != (std::size_t{1} << f.arity)) {
    throw std::invalid_argument("truth table length must be 2^arity");
  }
  std::vector<std::int64_t> c(f.table.begin(), f.table.end());
  for (std::uint32_t i = 0; i < f.arity; ++i) {
    for (std::size_t mask = 0; mask < c.size(); ++mask) {
      if ((mask >> i) & 1) c[mask] -= c[mask ^ (std::size_t{1} << i)];
    }
  }
  MultilinearPolynomial p;
  p.arity = f.arity;
  for (std::size_t mask = 0; mask < c.size(); ++mask) {
    p.coeffs.emplace(static_cast<std::uint32_t>(mask), BigInt(c[mask]));
  }
  return p;
}

std::uint32_t language_degree(const std::vector<CspConstraint>& language) {
  std::uint32_t best = 0;
  for (const auto& f : language) best = std::max(best, characteristic_polynomial(f).degree());
  return best;
}

}  // namespace wkern
