#include "wkern/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include <omp.h>

#include "wkern/subset_search.hpp"

namespace wkern {

namespace {

constexpr std::uint32_t kMaskBits = 63;

std::uint64_t bit(std::uint32_t i) { return std::uint64_t{1} << i; }

void require_cap(const char* what, std::uint64_t size, std::uint64_t cap) {
  if (size > cap || size > kMaskBits) throw CapExceeded(what, size, std::min<std::uint64_t>(cap, kMaskBits));
}

/// Lexicographic order on the sorted element lists of two bit sets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  int v = std::countr_zero(a ^ b);
  if ((a >> v) & 1) return (b >> v) != 0;  // b a proper prefix of a => b < a
  return (a >> v) == 0;
}

std::vector<std::uint32_t> members_of(std::uint64_t mask) {
  std::vector<std::uint32_t> out;
  while (mask) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Hyperedge lookup for hypergraphs with at most 63 vertices.
class CliqueIndex {
 public:
  explicit CliqueIndex(const WeightedHypergraph& h) : d_(h.d), n_(h.n) {
    if (d_ == 2) {
      adj_.assign(n_, 0);
      w2_.assign(std::size_t(n_) * n_, BigWeight(0));
      for (const auto& [t, w] : h.edges) {
        adj_[t[0]] |= bit(t[1]);
        adj_[t[1]] |= bit(t[0]);
        w2_[t[0] * n_ + t[1]] = w;
        w2_[t[1] * n_ + t[0]] = w;
      }
    } else {
      edges_.reserve(h.edges.size());
      for (const auto& [t, w] : h.edges) {
        std::uint64_t key = 0;
        for (VertexId v : t) key |= bit(v);
        edges_.emplace(key, w);
      }
    }
  }

  std::uint32_t n() const { return n_; }

  /// Weight gained by adding v to the clique `members`; false if the result
  /// is not a clique.
  bool extend(const std::vector<VertexId>& members, std::uint64_t mask, VertexId v,
              BigWeight& add) const {
    add = 0;
    if (d_ == 2) {
      if ((adj_[v] & mask) != mask) return false;
      for (VertexId u : members) add += w2_[u * n_ + v];
      return true;
    }
    if (members.size() + 1 < d_) return true;
    // enumerate (d-1)-subsets of members
    const std::size_t k = d_ - 1;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      std::uint64_t key = bit(v);
      for (std::size_t i : pick) key |= bit(members[i]);
      auto it = edges_.find(key);
      if (it == edges_.end()) return false;
      add += it->second;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == members.size() - k + i - 1) --i;
      if (i == 0) return true;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

 private:
  std::uint32_t d_;
  std::uint32_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<BigWeight> w2_;
  std::unordered_map<std::uint64_t, BigWeight> edges_;
};

// Depth-first clique enumeration in lexicographic order. `visit` returns true
// to stop the search.
template <typename Visit>
bool clique_dfs(const CliqueIndex& idx, std::vector<VertexId>& members, std::uint64_t mask,
                const BigWeight& weight, VertexId start, Visit& visit) {
  if (visit(members, mask, weight)) return true;
  BigWeight add;
  for (VertexId v = start; v < idx.n(); ++v) {
    if (!idx.extend(members, mask, v, add)) continue;
    members.push_back(v);
    bool stop = clique_dfs(idx, members, mask | bit(v), weight + add, v + 1, visit);
    members.pop_back();
    if (stop) return true;
  }
  return false;
}

struct BranchOutcome {
  std::uint64_t states = 0;
  std::optional<std::vector<VertexId>> hit;
  BigWeight best = 0;
};

// Search of the cliques whose smallest vertex is `first`. Stops at the first
// clique with weight == target (exact) or >= target (max, which instead
// continues to find the maximum).
BranchOutcome run_branch(const CliqueIndex& idx, VertexId first, const BigWeight& target,
                         bool max_mode) {
  BranchOutcome out;
  std::vector<VertexId> members{first};
  auto visit = [&](const std::vector<VertexId>& s, std::uint64_t, const BigWeight& w) {
    ++out.states;
    if (w > out.best) out.best = w;
    if (!out.hit && (max_mode ? w >= target : w == target)) {
      out.hit = s;
      return !max_mode;
    }
    return false;
  };
  clique_dfs(idx, members, bit(first), BigWeight(0), first + 1, visit);
  return out;
}

SolveResult combine(std::vector<BranchOutcome>& branches, const BigWeight& target, bool max_mode) {
  SolveResult r;
  r.states_explored = 1;  // the empty clique
  BigWeight best = 0;
  for (auto& b : branches) {
    r.states_explored += b.states;
    best = std::max(best, b.best);
  }
  if (target == 0) {
    r.yes = true;
    r.witness = std::vector<std::uint32_t>{};
  } else {
    for (auto& b : branches) {
      if (b.hit) {
        r.yes = true;
        r.witness = std::move(*b.hit);
        break;
      }
    }
  }
  if (max_mode) r.best = best;
  return r;
}

SolveResult eewhc_search(const WeightedHypergraph& h, std::uint32_t cap, bool max_mode,
                         bool parallel) {
  require_cap("hypergraph vertex count", h.n, cap);
  CliqueIndex idx(h);
  std::vector<BranchOutcome> branches(h.n);
  bool early_exit = !max_mode && h.target == 0;
  if (!early_exit) {
    if (parallel) {
      const int n = static_cast<int>(h.n);
#pragma omp parallel for schedule(dynamic, 1)
      for (int v = 0; v < n; ++v) branches[v] = run_branch(idx, v, h.target, max_mode);
    } else {
      for (VertexId v = 0; v < h.n; ++v) {
        branches[v] = run_branch(idx, v, h.target, max_mode);
      }
    }
  }
  return combine(branches, h.target, max_mode);
}

}  // namespace

SolveResult solve_eewhc_exact(const WeightedHypergraph& h, std::uint32_t cap) {
  return eewhc_search(h, cap, false, true);
}

SolveResult solve_eewhc_exact_serial(const WeightedHypergraph& h, std::uint32_t cap) {
  return eewhc_search(h, cap, false, false);
}

SolveResult solve_eewhc_max(const WeightedHypergraph& h, std::uint32_t cap) {
  return eewhc_search(h, cap, true, true);
}

SolveResult solve_eewhc_max_serial(const WeightedHypergraph& h, std::uint32_t cap) {
  return eewhc_search(h, cap, true, false);
}

void for_each_hyperclique(
    const WeightedHypergraph& h,
    const std::function<void(const std::vector<VertexId>&, const BigWeight&)>& visit,
    std::uint32_t cap) {
  require_cap("hypergraph vertex count", h.n, cap);
  CliqueIndex idx(h);
  std::vector<VertexId> members;
  auto fn = [&](const std::vector<VertexId>& s, std::uint64_t, const BigWeight& w) {
    visit(s, w);
    return false;
  };
  clique_dfs(idx, members, 0, BigWeight(0), 0, fn);
}

// ---------------------------------------------------------------------------
// decomposed hyperclique solver

namespace {

// Search caches keyed by the item vector; many enumerated states share one.
class SearchCache {
 public:
  const SubsetSearch& get(const std::vector<BigInt>& items) {
    auto it = cache_.find(items);
    if (it != cache_.end()) return it->second;
    if (cache_.size() >= 4096) cache_.clear();
    return cache_.emplace(items, SubsetSearch(items)).first->second;
  }

 private:
  std::map<std::vector<BigInt>, SubsetSearch> cache_;
};

}  // namespace

SolveResult solve_eewhc_exact_decomposed(const WeightedHypergraph& h, std::uint32_t cap) {
  const std::uint64_t full = binomial(h.n == 0 ? 0 : h.n - 1, h.d - 1);
  std::vector<std::uint64_t> degree(h.n, 0);
  std::vector<std::vector<const std::pair<const Tuple, BigWeight>*>> nonzero(h.n);
  for (const auto& e : h.edges) {
    for (VertexId v : e.first) {
      ++degree[v];
      if (e.second != 0) nonzero[v].push_back(&e);
    }
  }
  std::vector<bool> is_free(h.n, false);
  for (VertexId v = h.n; v-- > 0;) {
    if (degree[v] != full) continue;
    bool clash = false;
    for (const auto* e : nonzero[v]) {
      for (VertexId u : e->first) clash = clash || (u != v && is_free[u]);
    }
    if (!clash) is_free[v] = true;
  }
  std::vector<VertexId> core, free_vertices;
  std::vector<std::uint32_t> local(h.n, 0);
  for (VertexId v = 0; v < h.n; ++v) {
    if (is_free[v]) {
      free_vertices.push_back(v);
    } else {
      local[v] = static_cast<std::uint32_t>(core.size());
      core.push_back(v);
    }
  }
  require_cap("non-free vertex count", core.size(), cap);

  WeightedHypergraph sub;
  sub.d = h.d;
  sub.n = static_cast<std::uint32_t>(core.size());
  for (const auto& [t, w] : h.edges) {
    if (std::all_of(t.begin(), t.end(), [&](VertexId v) { return !is_free[v]; })) {
      Tuple lt;
      for (VertexId v : t) lt.push_back(local[v]);
      sub.edges.emplace(std::move(lt), w);
    }
  }
  // contribution of free vertex r given the core clique: sum of nonzero
  // edges e containing r whose other vertices all lie in the clique
  std::vector<std::vector<std::pair<std::uint64_t, const BigWeight*>>> terms(free_vertices.size());
  for (std::size_t i = 0; i < free_vertices.size(); ++i) {
    VertexId r = free_vertices[i];
    for (const auto* e : nonzero[r]) {
      std::uint64_t m = 0;
      for (VertexId u : e->first) {
        if (u != r) m |= bit(local[u]);
      }
      terms[i].emplace_back(m, &e->second);
    }
  }

  CliqueIndex idx(sub);
  SearchCache cache;
  SolveResult result;
  std::vector<BigInt> items(free_vertices.size());
  std::vector<VertexId> members;
  auto visit = [&](const std::vector<VertexId>& s, std::uint64_t mask, const BigWeight& w) {
    ++result.states_explored;
    BigInt rest = h.target - w;
    if (rest < 0) return false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      items[i] = 0;
      for (const auto& [m, weight] : terms[i]) {
        if ((m & mask) == m) items[i] += *weight;
      }
    }
    const SubsetSearch& search = cache.get(items);
    if (!search.contains(rest)) return false;
    std::vector<std::uint32_t> witness;
    for (VertexId v : s) witness.push_back(core[v]);
    auto picked = search.find(rest);
    for (std::size_t i : *picked) witness.push_back(free_vertices[i]);
    std::sort(witness.begin(), witness.end());
    result.yes = true;
    result.witness = std::move(witness);
    return true;
  };
  clique_dfs(idx, members, 0, BigWeight(0), 0, visit);
  return result;
}

// ---------------------------------------------------------------------------
// subset sum

namespace {

SolveResult subset_sum_enumerate(const SubsetSumInstance& s, std::uint32_t cap, bool parallel) {
  const auto n = static_cast<std::uint32_t>(s.items.size());
  require_cap("subset sum item count", n, cap);
  const std::uint32_t low_bits = n / 2;
  const std::uint32_t high_bits = n - low_bits;
  auto half_sums = [&](std::uint32_t offset, std::uint32_t count) {
    std::vector<BigInt> sums(std::size_t{1} << count);
    for (std::size_t m = 1; m < sums.size(); ++m) {
      int low = std::countr_zero(m);
      sums[m] = sums[m & (m - 1)] + s.items[offset + low];
    }
    return sums;
  };
  const std::vector<BigInt> lo = half_sums(0, low_bits);
  const std::vector<BigInt> hi = half_sums(low_bits, high_bits);

  const auto hi_count = static_cast<std::int64_t>(hi.size());
  std::optional<std::uint64_t> best;
  auto scan = [&](std::int64_t h, std::optional<std::uint64_t>& local_best) {
    BigInt rest = s.target - hi[h];
    if (rest < 0) return;
    for (std::size_t l = 0; l < lo.size(); ++l) {
      if (lo[l] != rest) continue;
      std::uint64_t m = (std::uint64_t(h) << low_bits) | l;
      if (!local_best || lex_less(m, *local_best)) local_best = m;
    }
  };
  if (parallel) {
#pragma omp parallel
    {
      std::optional<std::uint64_t> local_best;
#pragma omp for schedule(static)
      for (std::int64_t h = 0; h < hi_count; ++h) scan(h, local_best);
#pragma omp critical
      {
        if (local_best && (!best || lex_less(*local_best, *best))) best = local_best;
      }
    }
  } else {
    for (std::int64_t h = 0; h < hi_count; ++h) scan(h, best);
  }
  SolveResult r;
  r.states_explored = std::uint64_t{1} << n;
  if (best) {
    r.yes = true;
    r.witness = members_of(*best);
  }
  return r;
}

}  // namespace

SolveResult solve_subset_sum_enumerate(const SubsetSumInstance& s, std::uint32_t cap) {
  return subset_sum_enumerate(s, cap, true);
}

SolveResult solve_subset_sum_enumerate_serial(const SubsetSumInstance& s, std::uint32_t cap) {
  return subset_sum_enumerate(s, cap, false);
}

SolveResult solve_subset_sum_dp(const SubsetSumInstance& s, std::uint64_t cell_cap) {
  const std::size_t n = s.items.size();
  if (s.target < 0) return {};
  if (bit_length(s.target) > 40) throw CapExceeded("subset sum target bit length", bit_length(s.target), 40);
  const auto t = static_cast<std::uint64_t>(s.target);
  const std::uint64_t cells = (t + 1) * (n + 1);
  if (cells > cell_cap) throw CapExceeded("subset sum table cells", cells, cell_cap);

  // reach[i] bit x: items i..n-1 have a subset summing to x
  const std::size_t words = t / 64 + 1;
  std::vector<std::vector<std::uint64_t>> reach(n + 1, std::vector<std::uint64_t>(words, 0));
  reach[n][0] = 1;
  auto test = [&](std::size_t i, std::uint64_t x) { return (reach[i][x / 64] >> (x % 64)) & 1; };
  for (std::size_t i = n; i-- > 0;) {
    reach[i] = reach[i + 1];
    if (s.items[i] > t) continue;
    const auto a = static_cast<std::uint64_t>(s.items[i]);
    const std::size_t word_shift = a / 64;
    const unsigned bit_shift = a % 64;
    for (std::size_t w = words; w-- > word_shift;) {
      std::uint64_t v = reach[i + 1][w - word_shift] << bit_shift;
      if (bit_shift != 0 && w > word_shift) v |= reach[i + 1][w - word_shift - 1] >> (64 - bit_shift);
      reach[i][w] |= v;
    }
  }
  SolveResult r;
  r.states_explored = cells;
  if (!test(0, t)) return r;
  // greedy reconstruction yields the lexicographically smallest index list
  std::vector<std::uint32_t> witness;
  std::uint64_t rest = t;
  std::size_t pos = 0;
  while (rest > 0) {
    for (std::size_t j = pos; j < n; ++j) {
      if (s.items[j] > rest) continue;
      const auto a = static_cast<std::uint64_t>(s.items[j]);
      if (test(j + 1, rest - a)) {
        witness.push_back(static_cast<std::uint32_t>(j));
        rest -= a;
        pos = j + 1;
        break;
      }
    }
  }
  r.yes = true;
  r.witness = std::move(witness);
  return r;
}

SolveResult solve_subset_sum(const SubsetSumInstance& s, std::uint32_t cap) {
  if (s.items.size() <= cap) return solve_subset_sum_enumerate(s, cap);
  return solve_subset_sum_dp(s);
}

// ---------------------------------------------------------------------------
// red-blue dominating set

SolveResult solve_rbds(const RbdsInstance& r, std::uint32_t cap) {
  require_cap("red vertex count", r.nR, cap);
  const std::size_t words = (r.nB + 63) / 64;
  std::vector<std::vector<std::uint64_t>> row(r.nR, std::vector<std::uint64_t>(words, 0));
  for (std::uint32_t x = 0; x < r.nR; ++x) {
    for (std::uint32_t q = 0; q < r.nB; ++q) {
      if (r.adj[x][q]) row[x][q / 64] |= bit(q % 64);
    }
  }
  std::vector<std::uint64_t> all(words, ~std::uint64_t{0});
  if (r.nB % 64 != 0) all.back() = bit(r.nB % 64) - 1;
  const bool exact = r.mode == RbdsMode::exact;

  SolveResult result;
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint64_t> covered(words, 0);
  // preorder over red subsets: lexicographic order
  std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t start) {
    ++result.states_explored;
    bool size_ok = exact ? chosen.size() == r.d : chosen.size() <= r.d;
    if (size_ok && covered == all) return true;
    if (chosen.size() == r.d) return false;
    for (std::uint32_t x = start; x < r.nR; ++x) {
      bool overlap = false;
      for (std::size_t w = 0; w < words; ++w) overlap = overlap || (covered[w] & row[x][w]);
      if (exact && overlap) continue;
      std::vector<std::uint64_t> saved = covered;
      for (std::size_t w = 0; w < words; ++w) covered[w] |= row[x][w];
      chosen.push_back(x);
      if (dfs(x + 1)) return true;
      chosen.pop_back();
      covered = std::move(saved);
    }
    return false;
  };
  if (dfs(0)) {
    result.yes = true;
    result.witness = chosen;
  }
  return result;
}

// ---------------------------------------------------------------------------
// CSP

namespace {

struct CompiledApp {
  const CspConstraint* constraint;
  const std::vector<VertexId>* indices;
  const BigInt* weight;

  template <typename Value>
  bool satisfied(Value&& value_of) const {
    std::uint32_t bits = 0;
    for (std::size_t k = 0; k < indices->size(); ++k) {
      if (value_of((*indices)[k])) bits |= 1u << k;
    }
    return constraint->eval(bits);
  }
};

std::vector<CompiledApp> compile(const CspFormula& f) {
  std::vector<CompiledApp> apps;
  for (const auto& a : f.applications) {
    apps.push_back({&f.language.at(a.constraint), &a.indices, &a.weight});
  }
  return apps;
}

// Assignment number m sets variable i to bit (n-1-i), so increasing m walks
// assignments in lexicographic order.
std::vector<std::uint32_t> assignment_of(std::uint64_t m, std::uint32_t n) {
  std::vector<std::uint32_t> x(n);
  for (std::uint32_t i = 0; i < n; ++i) x[i] = (m >> (n - 1 - i)) & 1;
  return x;
}

SolveResult csp_search(const CspFormula& f, CspMode mode, std::uint32_t cap, bool parallel) {
  require_cap("CSP variable count", f.n, cap);
  const auto apps = compile(f);
  const std::uint32_t n = f.n;
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  const bool max_mode = mode == CspMode::max;

  auto phi = [&](std::uint64_t m) {
    BigInt sum = 0;
    for (const auto& a : apps) {
      if (a.satisfied([&](VertexId v) { return (m >> (n - 1 - v)) & 1; })) sum += *a.weight;
    }
    return sum;
  };

  std::optional<std::uint64_t> first;
  std::optional<BigInt> best;
  auto scan = [&](std::int64_t m, std::optional<std::uint64_t>& local_first,
                  std::optional<BigInt>& local_best) {
    BigInt v = phi(m);
    if (!local_first && (max_mode ? v >= f.target : v == f.target)) local_first = m;
    if (max_mode && (!local_best || v > *local_best)) local_best = v;
  };
  if (parallel) {
#pragma omp parallel
    {
      std::optional<std::uint64_t> local_first;
      std::optional<BigInt> local_best;
#pragma omp for schedule(static)
      for (std::int64_t m = 0; m < total; ++m) {
        if (!max_mode && local_first) continue;
        scan(m, local_first, local_best);
      }
#pragma omp critical
      {
        if (local_first && (!first || *local_first < *first)) first = local_first;
        if (local_best && (!best || *local_best > *best)) best = local_best;
      }
    }
  } else {
    for (std::int64_t m = 0; m < total; ++m) {
      scan(m, first, best);
      if (!max_mode && first) break;
    }
  }
  SolveResult r;
  r.states_explored = max_mode || !first ? std::uint64_t(total) : *first + 1;
  if (first) {
    r.yes = true;
    r.witness = assignment_of(*first, n);
  }
  if (max_mode) r.best = best;
  return r;
}

}  // namespace

BigInt eval_csp(const CspFormula& f, const std::vector<bool>& x) {
  BigInt sum = 0;
  for (const auto& a : compile(f)) {
    if (a.satisfied([&](VertexId v) { return x.at(v); })) sum += *a.weight;
  }
  return sum;
}

SolveResult solve_csp(const CspFormula& f, CspMode mode, std::uint32_t cap) {
  return csp_search(f, mode, cap, true);
}

SolveResult solve_csp_serial(const CspFormula& f, CspMode mode, std::uint32_t cap) {
  return csp_search(f, mode, cap, false);
}

SolveResult solve_csp_exact_decomposed(const CspFormula& f, std::uint32_t cap) {
  const auto apps = compile(f);
  std::vector<std::vector<std::size_t>> apps_of(f.n);
  for (std::size_t i = 0; i < apps.size(); ++i) {
    for (VertexId v : *apps[i].indices) {
      if (apps_of[v].empty() || apps_of[v].back() != i) apps_of[v].push_back(i);
    }
  }
  std::vector<bool> is_free(f.n, false);
  for (VertexId v = f.n; v-- > 0;) {
    bool clash = false;
    for (std::size_t i : apps_of[v]) {
      for (VertexId u : *apps[i].indices) clash = clash || (u != v && is_free[u]);
    }
    if (!clash) is_free[v] = true;
  }
  std::vector<VertexId> core, free_vars;
  for (VertexId v = 0; v < f.n; ++v) (is_free[v] ? free_vars : core).push_back(v);
  require_cap("non-free CSP variable count", core.size(), cap);

  std::vector<std::size_t> core_apps;
  std::vector<bool> touches_free(apps.size(), false);
  for (VertexId v : free_vars) {
    for (std::size_t i : apps_of[v]) touches_free[i] = true;
  }
  for (std::size_t i = 0; i < apps.size(); ++i) {
    if (!touches_free[i]) core_apps.push_back(i);
  }

  const auto c = static_cast<std::uint32_t>(core.size());
  std::vector<bool> x(f.n, false);
  SearchCache cache;
  std::vector<BigInt> deltas(free_vars.size());
  SolveResult result;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << c); ++m) {
    ++result.states_explored;
    for (std::uint32_t i = 0; i < c; ++i) x[core[i]] = (m >> (c - 1 - i)) & 1;
    BigInt rest = f.target;
    auto value = [&](VertexId v) { return bool(x[v]); };
    for (std::size_t i : core_apps) {
      if (apps[i].satisfied(value)) rest -= *apps[i].weight;
    }
    for (std::size_t k = 0; k < free_vars.size(); ++k) {
      BigInt a[2] = {0, 0};
      for (int b = 0; b < 2; ++b) {
        x[free_vars[k]] = b;
        for (std::size_t i : apps_of[free_vars[k]]) {
          if (apps[i].satisfied(value)) a[b] += *apps[i].weight;
        }
      }
      x[free_vars[k]] = false;
      rest -= a[0];
      deltas[k] = a[1] - a[0];
    }
    const SubsetSearch& search = cache.get(deltas);
    if (!search.contains(rest)) continue;
    auto picked = search.find(rest);
    for (std::size_t k : *picked) x[free_vars[k]] = true;
    std::vector<std::uint32_t> witness(f.n);
    for (VertexId v = 0; v < f.n; ++v) witness[v] = x[v];
    result.yes = true;
    result.witness = std::move(witness);
    return result;
  }
  return result;
}

// ---------------------------------------------------------------------------
// vertex covers

std::vector<std::vector<VertexId>> enumerate_minimal_vertex_covers(
    const NodeWeightedBipartiteGraph& g, std::uint32_t cap) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  require_cap("vertex count", n, cap);
  std::vector<std::uint64_t> nb(n, 0);
  for (const auto& [u, v] : g.edges) {
    nb[u] |= bit(v);
    nb[v] |= bit(u);
  }
  std::vector<std::uint64_t> found;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::uint32_t v = 0; v < n && ok; ++v) {
      bool inside = (s >> v) & 1;
      bool nb_inside = (nb[v] & s) == nb[v];
      // outside vertices need all neighbours in s; inside ones need one outside
      ok = inside ? !nb_inside : nb_inside;
    }
    if (ok) found.push_back(s);
  }
  std::sort(found.begin(), found.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : lex_less(a, b);
  });
  std::vector<std::vector<VertexId>> out;
  for (std::uint64_t s : found) out.push_back(members_of(s));
  return out;
}

MinCovers min_weight_vertex_covers(const NodeWeightedBipartiteGraph& g,
                                   const std::vector<BigWeight>& w, std::uint32_t cap) {
  MinCovers out;
  std::vector<std::pair<BigWeight, std::vector<VertexId>>> weighted;
  for (auto& c : enumerate_minimal_vertex_covers(g, cap)) {
    BigWeight cw = cover_weight(w, c);
    weighted.emplace_back(std::move(cw), std::move(c));
  }
  if (weighted.empty()) return out;
  out.min_weight = weighted.front().first;
  for (const auto& [cw, c] : weighted) out.min_weight = std::min(out.min_weight, cw);
  for (auto& [cw, c] : weighted) {
    if (cw == out.min_weight) out.covers.push_back(std::move(c));
  }
  return out;
}

MinCovers min_weight_vertex_covers(const NodeWeightedBipartiteGraph& g, std::uint32_t cap) {
  return min_weight_vertex_covers(g, g.w, cap);
}

}  // namespace wkern
