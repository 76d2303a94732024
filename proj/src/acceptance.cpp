#include "wkern/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "wkern/compositions.hpp"
#include "wkern/generators.hpp"
#include "wkern/interval_reduction.hpp"
#include "wkern/oracles.hpp"
#include "wkern/prime_hash.hpp"
#include "wkern/vc_compress.hpp"

namespace wkern::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  Recorder(std::vector<CriterionResult>& out, const std::function<void(const CriterionResult&)>& cb)
      : out_(out), cb_(cb) {}

  void start() { begin_ = Clock::now(); }

  void emit(int id, std::string title, bool passed, std::string detail) {
    CriterionResult r{id, std::move(title), passed, std::move(detail),
                      std::chrono::duration<double>(Clock::now() - begin_).count()};
    out_.push_back(r);
    if (cb_) cb_(r);
    begin_ = Clock::now();
  }

 private:
  std::vector<CriterionResult>& out_;
  const std::function<void(const CriterionResult&)>& cb_;
  Clock::time_point begin_ = Clock::now();
};

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream s;
  (s << ... << args);
  return s.str();
}

std::vector<bool> sieve(std::uint64_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::uint64_t q = 2; q * q <= limit; ++q) {
    if (!prime[q]) continue;
    for (std::uint64_t k = q * q; k <= limit; k += q) prime[k] = false;
  }
  return prime;
}

// Pool size for the prime draw, recomputed without the library helpers.
BigInt expected_pool_size(std::uint32_t n, const BigInt& N, std::uint64_t inverse_epsilon) {
  std::uint32_t bits = 0;
  BigInt reach = 1;
  while (reach < std::max(N, BigInt(2))) {
    reach *= 2;
    ++bits;
  }
  const std::uint32_t n_eff = std::max<std::uint32_t>(n, 1);
  return ipow(2, n_eff) * (n_eff + 1 + bits) * inverse_epsilon;
}

std::uint64_t expected_pool_bound(std::uint64_t M) {
  if (M < 6) return 64;
  const double m = static_cast<double>(M);
  return std::max<std::uint64_t>(64, static_cast<std::uint64_t>(std::ceil(2 * m * (std::log(m) + std::log(std::log(m))))) + 1);
}

// Every minimum-weight cover by subset enumeration.
std::vector<std::vector<VertexId>> brute_min_covers(const NodeWeightedBipartiteGraph& g,
                                                    const std::vector<BigWeight>& w,
                                                    BigWeight* weight = nullptr) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<std::vector<VertexId>> best;
  BigWeight best_weight = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool cover = true;
    for (const auto& [u, v] : g.edges) cover = cover && (((mask >> u) | (mask >> v)) & 1);
    if (!cover) continue;
    BigWeight total = 0;
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1) total += w[v];
    }
    if (best_weight >= 0 && total > best_weight) continue;
    if (best_weight < 0 || total < best_weight) {
      best_weight = total;
      best.clear();
    }
    std::vector<VertexId> s;
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1) s.push_back(v);
    }
    best.push_back(std::move(s));
  }
  std::sort(best.begin(), best.end());
  if (weight) *weight = best_weight;
  return best;
}

// ---------------------------------------------------------------------------
// kernel corpus

struct KernelStats {
  std::uint64_t runs = 0;
  std::uint64_t failures = 0;
  std::uint64_t weight_violations = 0;
  std::uint64_t size_violations = 0;
  std::uint64_t pool_violations = 0;
  double max_ratio = 0;
};

constexpr double kBitsPerCube = 64;

void check_kernel_shape(const WeightedHypergraph& h, const HypergraphKernel& k,
                        const std::vector<bool>& primes, KernelStats& stats) {
  const auto& g = k.instance;
  const BigInt bound = ipow(g.n, 2) * k.cert.p;
  for (const auto& [t, w] : g.edges) {
    if (w > bound) ++stats.weight_violations;
  }
  if (g.target > bound) ++stats.weight_violations;
  const double bits = 8.0 * static_cast<double>(serialize(Instance{g}).size());
  const double ratio = bits / std::pow(static_cast<double>(g.n), 3);
  stats.max_ratio = std::max(stats.max_ratio, ratio);
  if (ratio > kBitsPerCube) ++stats.size_violations;

  const BigInt M = expected_pool_size(h.n, std::max(h.target, h.max_weight()), 10);
  const std::uint64_t U = expected_pool_bound(static_cast<std::uint64_t>(M));
  const auto p = static_cast<std::uint64_t>(k.cert.p);
  if (M != k.cert.M || k.cert.p > U || p >= primes.size() || !primes[p]) ++stats.pool_violations;
}

WeightedHypergraph yes_instance(CounterRng& rng, std::uint32_t n, const BigWeight& max_weight) {
  auto h = gen::hypergraph(rng, n, 2, 0.7, max_weight);
  std::vector<BigWeight> weights;
  for_each_hyperclique(h, [&](const std::vector<VertexId>& s, const BigWeight& w) {
    if (s.size() >= 2 || n < 2) weights.push_back(w);
  });
  if (weights.empty()) weights.push_back(0);
  h.target = weights[rng.uniform(0, weights.size() - 1)];
  return h;
}

WeightedHypergraph no_instance(CounterRng& rng, std::uint32_t n, const BigWeight& max_weight) {
  for (;;) {
    auto h = gen::hypergraph(rng, n, 2, 0.7, max_weight);
    h.target = rng.uniform(BigInt(1), max_weight * 15);
    if (!solve_eewhc_exact(h).yes) return h;
  }
}

void kernel_criteria(Scale scale, Recorder& rec) {
  const bool full = scale == Scale::full;
  const std::size_t instances = full ? 200 : 40;
  const std::uint64_t yes_seeds = full ? 50 : 10;
  const std::uint64_t no_seeds = full ? 200 : 20;
  const BigWeight big = ipow(10, 18);
  const Rational eps(1, 10);
  CounterRng rng(derive_seed(2024, 1));

  KernelStats shape;
  // the largest pool bound at n = 6, N < 2^64 stays far below this
  const auto primes = sieve(std::uint64_t{1} << 24);

  KernelStats yes;
  for (std::size_t i = 0; i < instances; ++i) {
    auto h = yes_instance(rng, static_cast<std::uint32_t>(1 + i % 6), big);
    for (std::uint64_t s = 0; s < yes_seeds; ++s) {
      auto k = kernelize_eewhc_exact(h, eps, derive_seed(1000 + i, s));
      ++yes.runs;
      if (!solve_eewhc_exact_decomposed(k.instance).yes) ++yes.failures;
      check_kernel_shape(h, k, primes, shape);
    }
  }
  rec.emit(1, "kernel completeness", yes.failures == 0,
           cat(yes.failures, " failures in ", yes.runs, " kernelizations of ", instances,
               " yes-instances x ", yes_seeds, " seeds"));

  KernelStats no;
  for (std::size_t i = 0; i < instances; ++i) {
    auto h = no_instance(rng, static_cast<std::uint32_t>(1 + i % 6), big);
    for (std::uint64_t s = 0; s < no_seeds; ++s) {
      auto k = kernelize_eewhc_exact(h, eps, derive_seed(5000 + i, s));
      ++no.runs;
      if (solve_eewhc_exact_decomposed(k.instance).yes) ++no.failures;
      check_kernel_shape(h, k, primes, shape);
    }
  }
  const double rate = static_cast<double>(no.failures) / static_cast<double>(no.runs);
  rec.emit(2, "kernel soundness rate", rate <= 0.1,
           cat("false-yes rate ", rate, " (", no.failures, "/", no.runs, ") <= 0.1 over ", instances,
               " no-instances x ", no_seeds, " seeds"));

  rec.emit(3, "kernel size", shape.weight_violations == 0 && shape.size_violations == 0 &&
                                 shape.pool_violations == 0,
           cat("C = ", kBitsPerCube, " bits per n'^3, measured max ", shape.max_ratio, "; ",
               shape.weight_violations, " weights above n'^2 p, ", shape.size_violations,
               " oversized, ", shape.pool_violations, " prime/pool violations over ",
               yes.runs + no.runs, " kernels"));
}

// ---------------------------------------------------------------------------
// compositions

RbdsInstance rbds_with(std::uint32_t m, std::uint32_t n, bool full_adjacency) {
  auto r = RbdsInstance::empty(m, n, 1);
  for (auto& row : r.adj) std::fill(row.begin(), row.end(), full_adjacency);
  return r;
}

void composition_criteria(Scale scale, Recorder& rec) {
  const std::uint32_t pool_size = scale == Scale::full ? 3 : 2;
  CounterRng rng(derive_seed(2024, 4));
  std::uint64_t tuples = 0, misses = 0, false_yes = 0, size_errors = 0, padded_errors = 0;
  std::uint64_t cliques = 0, carry_violations = 0;
  for (std::uint32_t m = 1; m <= 2; ++m) {
    for (std::uint32_t n = 1; n <= 2; ++n) {
      std::vector<RbdsInstance> pool{rbds_with(m, n, false), rbds_with(m, n, true)};
      // one more instance with a mixed adjacency pattern, when one exists
      while (pool.size() < pool_size && m * n > 1) {
        auto r = gen::rbds(rng, m, n, 1, 0.5);
        if (std::find(pool.begin(), pool.end(), r) == pool.end()) pool.push_back(r);
      }
      std::vector<bool> answer;
      for (const auto& r : pool) answer.push_back(solve_rbds(r).yes);
      const std::size_t P = pool.size();
      const std::size_t count = static_cast<std::size_t>(std::pow(P, 8));
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<RbdsInstance> inputs;
        bool expected = false;
        for (std::size_t c = code, k = 0; k < 8; ++k, c /= P) {
          inputs.push_back(pool[c % P]);
          expected = expected || answer[c % P];
        }
        ++tuples;
        auto composed = rbds_cross_compose(inputs);
        const auto& L = composed.layout;
        if (composed.graph.n != 2 + 2 * m + 2 + (2 * n + 1) * (L.d - 1)) ++size_errors;
        bool got = solve_eewhc_exact_serial(composed.graph).yes;
        if (got != expected) (got ? false_yes : misses) += 1;
        for_each_hyperclique(composed.graph, [&](const std::vector<VertexId>& s, const BigWeight&) {
          ++cliques;
          for (auto v : digit_sums(composed, s)) {
            if (v >= L.base()) ++carry_violations;
          }
        });
        auto padded = rbds_cross_compose(inputs, CompositionVariant::padded_blocks);
        if (solve_eewhc_exact_decomposed(padded.graph).yes != expected) ++padded_errors;
      }
    }
  }
  rec.emit(4, "cross-composition OR-equivalence",
           misses == 0 && false_yes == 0 && size_errors == 0,
           cat(misses + false_yes, " mismatches in ", tuples, " tuples (", misses,
               " yes-tuples answered no, ", false_yes, " no-tuples answered yes), ", size_errors,
               " size-formula errors; padded-blocks variant: ", padded_errors, " mismatches"));
  rec.emit(5, "no-carry digit sums", carry_violations == 0,
           cat(carry_violations, " positions at or above the base over ", cliques, " cliques"));
}

void lift_criterion(Scale scale, Recorder& rec) {
  const std::size_t pool_size = scale == Scale::full ? 20 : 8;
  CounterRng rng(derive_seed(2024, 6));
  std::vector<WeightedHypergraph> pool;
  std::vector<bool> answer;
  std::size_t yes = 0;
  while (pool.size() < pool_size) {
    auto h = gen::hypergraph(rng, 4, 2, 0.7, 4);
    h.target = 6;
    bool a = solve_eewhc_exact(h).yes;
    // keep the pool balanced between yes and no
    if (a && yes * 2 >= pool_size) continue;
    if (!a && (pool.size() - yes) * 2 >= pool_size) continue;
    yes += a;
    pool.push_back(h);
    answer.push_back(a);
  }
  std::size_t pairs = 0, errors = 0, size_errors = 0;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = 0; b < pool.size(); ++b) {
      auto lifted = hyperclique_lift({pool[a], pool[b]}, 3);
      ++pairs;
      if (lifted.n != 4 + 2) ++size_errors;
      if (solve_eewhc_exact(lifted).yes != (answer[a] || answer[b])) ++errors;
    }
  }
  rec.emit(6, "hyperclique lift OR-equivalence", errors == 0 && size_errors == 0,
           cat(errors, " mismatches over ", pairs, " ordered pairs from a pool of ", pool.size(),
               " (", yes, " yes), ", size_errors, " size errors"));
}

bool erbds_brute(const RbdsInstance& r) {
  for (std::uint32_t mask = 0; mask < (1u << r.nR); ++mask) {
    if (static_cast<std::uint32_t>(std::popcount(mask)) != r.d) continue;
    bool ok = true;
    for (std::uint32_t q = 0; q < r.nB && ok; ++q) {
      std::uint32_t hits = 0;
      for (std::uint32_t x = 0; x < r.nR; ++x) hits += ((mask >> x) & 1) && r.adj[x][q];
      ok = hits == 1;
    }
    if (ok) return true;
  }
  return false;
}

void erbds_criterion(Recorder& rec) {
  std::size_t checked = 0, errors = 0;
  for (std::uint32_t nR = 1; nR <= 3; ++nR) {
    for (std::uint32_t nB = 0; nB <= 3; ++nB) {
      for (std::uint32_t bits = 0; bits < (1u << (nR * nB)); ++bits) {
        for (std::uint32_t d = 1; d <= nR; ++d) {
          auto g = RbdsInstance::empty(nR, nB, d, RbdsMode::exact);
          for (std::uint32_t e = 0; e < nR * nB; ++e) g.adj[e / nB][e % nB] = (bits >> e) & 1;
          ++checked;
          if (solve_subset_sum(erbds_to_subset_sum(g)).yes != erbds_brute(g)) ++errors;
        }
      }
    }
  }
  // four reds, five blues; r2 and r4 split the blues between them
  auto fig = RbdsInstance::empty(4, 5, 2, RbdsMode::exact);
  for (std::uint32_t q : {0u, 1u, 2u}) fig.adj[1][q] = true;
  for (std::uint32_t q : {3u, 4u}) fig.adj[3][q] = true;
  for (std::uint32_t q : {0u, 3u}) fig.adj[0][q] = true;
  for (std::uint32_t q : {1u, 4u}) fig.adj[2][q] = true;
  auto ss = erbds_to_subset_sum(fig);
  const bool planted = ss.items[1] + ss.items[3] == ss.target;
  auto solved = solve_subset_sum(ss);
  const bool found = solved.yes && solved.witness == std::vector<std::uint32_t>{1, 3};
  rec.emit(7, "ERBDS to subset sum", errors == 0 && planted && found,
           cat(errors, " mismatches over ", checked,
               " instances; planted example: N2 + N4 = t ", planted ? "holds" : "fails",
               ", solver witness ", found ? "{N2, N4}" : "differs"));
}

void csp_criterion(Scale scale, Recorder& rec) {
  const bool full = scale == Scale::full;
  CounterRng rng(derive_seed(2024, 8));
  std::size_t translations = 0, translation_errors = 0;
  for (std::uint32_t n = 0; n <= (full ? 5u : 4u); ++n) {
    const auto pairs = all_tuples(n, 2);
    for (std::uint32_t bits = 0; bits < (1u << pairs.size()); ++bits) {
      WeightedHypergraph h;
      h.n = n;
      BigWeight total = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((bits >> e) & 1) {
          BigWeight w = rng.uniform(0, 3);
          total += w;
          h.edges.emplace(pairs[e], w);
        }
      }
      for (BigWeight t = 0; t <= total + 1; ++t) {
        h.target = t;
        ++translations;
        if (solve_csp(hyperclique_to_csp(h), CspMode::exact).yes != solve_eewhc_exact(h).yes) {
          ++translation_errors;
        }
      }
    }
  }

  const std::size_t instances = full ? 60 : 12;
  const std::uint64_t yes_seeds = full ? 50 : 10;
  const std::uint64_t no_seeds = full ? 200 : 20;
  const BigInt big = ipow(10, 12);
  const Rational eps(1, 10);
  std::uint64_t yes_runs = 0, yes_failures = 0, no_runs = 0, false_yes = 0;
  for (std::size_t i = 0; i < 2 * instances; ++i) {
    const bool want_yes = i < instances;
    auto n = static_cast<std::uint32_t>(1 + i % 5);
    auto d = static_cast<std::uint32_t>(2 + i % 2);
    CspFormula f;
    f.n = n;
    f.language = {CspConstraint::conjunction(d)};
    for (int a = 0; a < 6; ++a) {
      CspApplication app{0, {}, BigInt(rng.uniform(0, 2000)) * big - 1000 * big};
      for (std::uint32_t k = 0; k < d; ++k) app.indices.push_back(rng.uniform(0, n - 1));
      f.applications.push_back(app);
    }
    if (want_yes) {
      std::vector<bool> x(n);
      for (std::uint32_t v = 0; v < n; ++v) x[v] = rng() & 1;
      f.target = eval_csp(f, x);
    } else {
      do {
        f.target = BigInt(rng.uniform(0, 2000)) * big - 1000 * big + 1;
      } while (solve_csp(f, CspMode::exact).yes);
    }
    for (std::uint64_t s = 0; s < (want_yes ? yes_seeds : no_seeds); ++s) {
      auto k = kernelize_csp_and(f, eps, derive_seed(9000 + i, s));
      bool got = solve_csp_exact_decomposed(k.instance).yes;
      if (want_yes) {
        ++yes_runs;
        yes_failures += !got;
      } else {
        ++no_runs;
        false_yes += got;
      }
    }
  }
  const double rate = static_cast<double>(false_yes) / static_cast<double>(no_runs);
  rec.emit(8, "CSP translation and CSP kernel",
           translation_errors == 0 && yes_failures == 0 && rate <= 0.1,
           cat(translation_errors, " translation mismatches over ", translations,
               " graph/target pairs; kernel: ", yes_failures, " completeness failures in ",
               yes_runs, ", false-yes rate ", rate, " (", false_yes, "/", no_runs, ")"));
}

void polynomial_criterion(Recorder& rec) {
  CounterRng rng(derive_seed(2024, 9));
  std::size_t errors = 0;
  for (int i = 0; i < 1000; ++i) {
    auto f = gen::constraint(rng, static_cast<std::uint32_t>(rng.uniform(1, 6)));
    auto p = characteristic_polynomial(f);
    for (std::uint32_t x = 0; x < (1u << f.arity); ++x) {
      if (p.eval(x) != (f.eval(x) ? 1 : 0)) {
        ++errors;
        break;
      }
    }
  }
  std::size_t degree_errors = 0;
  for (std::uint32_t d = 1; d <= 6; ++d) {
    if (language_degree({CspConstraint::conjunction(d)}) != d) ++degree_errors;
  }
  rec.emit(9, "characteristic polynomials", errors == 0 && degree_errors == 0,
           cat(errors, " of 1000 random constraints disagree with their polynomial; ",
               degree_errors, " AND_d degree errors for d in [1, 6]"));
}

std::uint64_t independent_family_bound(const BigWeight& l, const BigWeight& u) {
  std::uint64_t bits = 0;
  BigWeight reach = 1;
  while (reach < u - l + 1) {
    reach *= 2;
    ++bits;
  }
  return 2 * bits + 1;
}

void turing_criterion(Scale scale, Recorder& rec) {
  const std::size_t instances = scale == Scale::full ? 120 : 25;
  const std::uint64_t seeds = 3;
  CounterRng rng(derive_seed(2024, 10));
  std::size_t runs = 0, mismatches = 0, lost = 0, bound_errors = 0, yes_count = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    auto n = static_cast<std::uint32_t>(1 + i % 5);
    auto h = gen::hypergraph(rng, n, 2, 0.7, 20);
    h.target = rng.uniform(0, 10 * n);
    const bool expected = solve_eewhc_max(h).yes;
    yes_count += expected;
    for (std::uint64_t s = 0; s < seeds; ++s) {
      auto family = turing_kernel_max_hyperclique(h, Rational(1, 10), derive_seed(i, s));
      if (!family.decided && family.members.size() > independent_family_bound(family.l, family.u)) {
        ++bound_errors;
      }
      bool got = decide_with_oracle(family, [](const WeightedHypergraph& g) {
        return solve_eewhc_exact_decomposed(g).yes;
      });
      ++runs;
      if (got != expected) ++mismatches;
      if (expected && !got) ++lost;
    }
  }
  rec.emit(10, "Turing kernel for the max variant", mismatches == 0 && bound_errors == 0,
           cat(mismatches, " mismatches (", lost, " lost yes) over ", runs, " runs on ", instances,
               " instances (", yes_count, " yes); ", bound_errors, " families above 2 ceil(log2(u-l+1)) + 1"));
}

// ---------------------------------------------------------------------------
// vertex cover weights

// Connected bipartite graphs on n vertices up to isomorphism, as (a, b, mask)
// with bit i*b + j meaning left i adjacent to right j.
std::vector<NodeWeightedBipartiteGraph> connected_bipartite(std::uint32_t n) {
  std::vector<NodeWeightedBipartiteGraph> out;
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t a = 0; 2 * a <= n; ++a) {
    const std::uint32_t b = n - a;
    std::vector<std::uint32_t> rows(a), cols(b);
    for (std::uint32_t mask = 0; mask < (1u << (a * b)); ++mask) {
      // connectivity by flood fill over the n vertices
      std::vector<bool> reached(n, false);
      std::vector<std::uint32_t> stack{0};
      reached[0] = true;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::uint32_t u = 0; u < n; ++u) {
          if (reached[u]) continue;
          bool adjacent = false;
          if (v < a && u >= a) adjacent = (mask >> (v * b + (u - a))) & 1;
          if (v >= a && u < a) adjacent = (mask >> (u * b + (v - a))) & 1;
          if (adjacent) {
            reached[u] = true;
            stack.push_back(u);
          }
        }
      }
      if (std::find(reached.begin(), reached.end(), false) != reached.end()) continue;

      std::uint32_t best = UINT32_MAX;
      auto relabel = [&](bool transpose) {
        std::iota(rows.begin(), rows.end(), 0);
        do {
          std::iota(cols.begin(), cols.end(), 0);
          do {
            std::uint32_t m = 0;
            for (std::uint32_t i = 0; i < a; ++i) {
              for (std::uint32_t j = 0; j < b; ++j) {
                bool bit = transpose ? (mask >> (cols[j] * b + rows[i])) & 1
                                     : (mask >> (rows[i] * b + cols[j])) & 1;
                if (bit) m |= 1u << (i * b + j);
              }
            }
            best = std::min(best, m);
          } while (std::next_permutation(cols.begin(), cols.end()));
        } while (std::next_permutation(rows.begin(), rows.end()));
      };
      relabel(false);
      if (a == b) relabel(true);
      if (!seen.insert({a, b, best}).second) continue;

      NodeWeightedBipartiteGraph g;
      for (VertexId v = 0; v < n; ++v) (v < a ? g.left : g.right).push_back(v);
      for (std::uint32_t i = 0; i < a; ++i) {
        for (std::uint32_t j = 0; j < b; ++j) {
          if ((best >> (i * b + j)) & 1) g.edges.emplace(i, a + j);
        }
      }
      g.w.assign(n, 1);
      out.push_back(std::move(g));
    }
  }
  return out;
}

void vc_criteria(Scale scale, Recorder& rec) {
  const bool full = scale == Scale::full;
  CounterRng rng(derive_seed(2024, 11));
  std::vector<NodeWeightedBipartiteGraph> corpus;
  std::vector<std::size_t> counts;
  const std::size_t weightings = full ? 20 : 4;
  const BigWeight big = ipow(10, 18);
  for (std::uint32_t n = 1; n <= (full ? 7u : 6u); ++n) {
    auto graphs = connected_bipartite(n);
    counts.push_back(graphs.size());
    for (const auto& g : graphs) {
      for (std::size_t k = 0; k < weightings; ++k) {
        auto h = g;
        // alternate wide and narrow weight ranges so ties occur
        BigWeight top = k % 2 ? big : BigWeight(1 + k % 5);
        for (auto& x : h.w) x = rng.uniform(BigInt(1), top);
        corpus.push_back(std::move(h));
      }
    }
  }
  const std::size_t exhaustive = corpus.size();
  for (int i = 0; i < (full ? 1000 : 150); ++i) {
    auto left = static_cast<std::uint32_t>(rng.uniform(1, 5));
    auto right = static_cast<std::uint32_t>(rng.uniform(1, 10 - left));
    corpus.push_back(gen::bipartite(rng, left, right, gen::unit(rng), i % 2 ? big : BigWeight(6)));
  }

  std::size_t range_errors = 0, family_errors = 0, koenig_errors = 0;
  for (const auto& g : corpus) {
    auto c = compress_vc_weights(g);
    const BigWeight n = g.vertex_count();
    for (const auto& x : c.w) {
      if (x < 1 || x > n) ++range_errors;
    }
    BigWeight min_weight = 0;
    if (brute_min_covers(g, g.w, &min_weight) != brute_min_covers(g, c.w)) ++family_errors;
    if (max_b_matching(g).value != min_weight) ++koenig_errors;
  }
  std::string per_size;
  for (std::size_t i = 0; i < counts.size(); ++i) per_size += (i ? "," : "") + std::to_string(counts[i]);
  rec.emit(11, "VC weight compression", range_errors == 0 && family_errors == 0,
           cat(range_errors, " range errors, ", family_errors, " changed cover families over ",
               corpus.size(), " weighted graphs (", exhaustive,
               " from unlabeled connected graphs, counts by size ", per_size, ")"));
  rec.emit(12, "weighted Koenig", koenig_errors == 0,
           cat(koenig_errors, " graphs where min cover weight != max b-matching value, of ",
               corpus.size()));
}

void tightness_criterion(Recorder& rec) {
  std::size_t star_errors = 0;
  for (std::uint32_t n = 2; n <= 10; ++n) {
    auto c = compress_vc_weights(star_witness(n));
    if (*std::max_element(c.w.begin(), c.w.end()) != n) ++star_errors;
  }
  std::size_t preserving = 0, weightings = 0;
  for (std::uint32_t n = 2; n <= 5; ++n) {
    auto g = star_witness(n);
    const auto reference = brute_min_covers(g, g.w);
    const std::uint32_t range = n - 1;
    std::size_t total = 1;
    for (std::uint32_t v = 0; v < n; ++v) total *= range;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<BigWeight> w;
      for (std::size_t c = code, v = 0; v < n; ++v, c /= range) w.push_back(1 + c % range);
      ++weightings;
      if (brute_min_covers(g, w) == reference) ++preserving;
    }
  }

  // one (w, t) per distinct function on 3 bits
  std::map<std::uint32_t, std::pair<std::vector<BigInt>, BigInt>> functions;
  for (int code = 0; code < 625; ++code) {
    std::vector<BigInt> w;
    int c = code;
    for (int k = 0; k < 3; ++k, c /= 5) w.push_back(c % 5 - 2);
    BigInt t = c % 5 - 2;
    std::uint32_t table = 0;
    for (std::uint32_t x = 0; x < 8; ++x) {
      BigInt dot = 0;
      for (int k = 0; k < 3; ++k) dot += ((x >> k) & 1) ? w[k] : BigInt(0);
      if (dot >= t) table |= 1u << x;
    }
    functions.emplace(table, std::make_pair(w, t));
  }
  std::vector<NodeWeightedBipartiteGraph> gadgets;
  for (const auto& [table, wt] : functions) gadgets.push_back(threshold_gadget(wt.first, wt.second));
  std::size_t equivalent_pairs = 0, pairs = 0;
  for (std::size_t i = 0; i < gadgets.size(); ++i) {
    for (std::size_t j = i + 1; j < gadgets.size(); ++j) {
      ++pairs;
      if (vertex_cover_equivalent(gadgets[i], gadgets[i].w, gadgets[j].w).equivalent) {
        ++equivalent_pairs;
      }
    }
  }
  rec.emit(13, "tightness witnesses", star_errors == 0 && preserving == 0 && equivalent_pairs == 0,
           cat(star_errors, " stars with max compressed weight != n; ", preserving, " of ",
               weightings, " small-range star weightings keep the cover family; ",
               equivalent_pairs, " equivalent pairs among ", pairs, " pairs of ", gadgets.size(),
               " threshold functions"));
}

}  // namespace

std::vector<CriterionResult> run_all(Scale scale,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  Recorder rec(out, on_result);
  rec.start();
  kernel_criteria(scale, rec);
  composition_criteria(scale, rec);
  lift_criterion(scale, rec);
  erbds_criterion(rec);
  csp_criterion(scale, rec);
  polynomial_criterion(rec);
  turing_criterion(scale, rec);
  vc_criteria(scale, rec);
  tightness_criterion(rec);
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail << " ("
    << r.seconds << " s)";
  return s.str();
}

}  // namespace wkern::acceptance
