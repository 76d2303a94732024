#include "wkern/prime_hash.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

#include "wkern/oracles.hpp"

namespace wkern {

BigInt prime_pool_size(std::uint32_t n, std::uint32_t log_n, const Rational& epsilon) {
  const std::uint32_t n_eff = std::max<std::uint32_t>(n, 1);
  Rational inverse = 1 / epsilon;
  BigInt num = boost::multiprecision::numerator(inverse);
  BigInt den = boost::multiprecision::denominator(inverse);
  BigInt ceil_inverse = (num + den - 1) / den;
  return (BigInt(1) << n_eff) * (n_eff + 1 + log_n) * ceil_inverse;
}

BigInt prime_pool_bound(const BigInt& M) {
  if (M < 6) return 64;
  const long double m = static_cast<long double>(M);
  const long double bound = 2.0L * m * (std::log(m) + std::log(std::log(m)));
  BigInt U(static_cast<std::uint64_t>(std::ceil(bound)));
  U += 1;
  return std::max(U, BigInt(64));
}

std::uint32_t log_bound(const BigInt& N) {
  return static_cast<std::uint32_t>(ceil_log2(std::max(N, BigInt(2))));
}

bool is_probable_prime(const BigInt& p, CounterRng& rng) {
  return boost::multiprecision::miller_rabin_test(p, 64, rng);
}

ModulusCert sample_modulus(std::uint32_t n, const BigInt& N, const Rational& epsilon,
                           std::uint64_t seed, std::uint32_t cap) {
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (n > cap) throw CapExceeded("kernel size parameter n", n, cap);
  ModulusCert cert;
  cert.epsilon = epsilon;
  cert.seed = seed;
  cert.n = n;
  cert.log_n = log_bound(N);
  cert.M = prime_pool_size(n, cert.log_n, epsilon);
  cert.U = prime_pool_bound(cert.M);
  CounterRng draw(derive_seed(seed, 0));
  CounterRng witness(derive_seed(seed, 1));
  for (;;) {
    ++cert.draws;
    BigInt candidate = draw.uniform(BigInt(2), cert.U);
    if (is_probable_prime(candidate, witness)) {
      cert.p = candidate;
      return cert;
    }
  }
}

std::vector<std::uint32_t> slack_selection(const BigInt& i, std::uint32_t n, std::uint32_t d) {
  std::vector<std::uint32_t> counts(d, 0);
  BigInt rest = i;
  for (std::uint32_t j = d; j-- > 0;) {
    if (n == 0) break;
    BigInt unit = ipow(n, j);
    BigInt c = std::min(BigInt(n), BigInt(rest / unit));
    counts[j] = static_cast<std::uint32_t>(c);
    rest -= c * unit;
  }
  if (rest != 0) throw std::invalid_argument("slack amount out of range");
  return counts;
}

// ---------------------------------------------------------------------------
// hyperclique kernel

HypergraphKernel kernelize_eewhc_exact(const WeightedHypergraph& h, const Rational& epsilon,
                                       std::uint64_t seed, std::uint32_t cap) {
  if (h.d < 2) throw std::invalid_argument("hyperclique kernel needs d >= 2");
  HypergraphKernel out;
  out.cert = sample_modulus(h.n, std::max(h.target, h.max_weight()), epsilon, seed, cap);
  const BigInt& p = out.cert.p;
  const GadgetLayout layout{h.n, h.d};

  WeightedHypergraph& g = out.instance;
  g.d = h.d;
  g.n = layout.vertex_count();
  for (const auto& [t, w] : h.edges) g.edges.emplace(t, w % p);

  // U_Z + {v} for v in U_j carries n^j * p; everything else new is 0
  std::vector<BigInt> slack_weight(h.d);
  for (std::uint32_t j = 0; j < h.d; ++j) slack_weight[j] = ipow(h.n, j) * p;
  for (auto& t : all_tuples(g.n, g.d)) {
    if (t.back() < h.n) continue;
    BigWeight w = 0;
    bool hubs_first = true;
    for (std::uint32_t k = 0; k + 1 < h.d; ++k) hubs_first = hubs_first && t[k] == layout.hub(k);
    if (hubs_first && t.back() >= layout.slack(0, 0)) {
      w = slack_weight[(t.back() - layout.slack(0, 0)) / h.n];
    }
    g.edges.emplace(std::move(t), std::move(w));
  }
  g.target = h.target % p + ipow(h.n, h.d) * p;
  return out;
}

std::vector<VertexId> lift_eewhc_witness(const WeightedHypergraph& h, const HypergraphKernel& k,
                                         const std::vector<VertexId>& solution) {
  const BigInt& p = k.cert.p;
  BigWeight reduced = 0;
  for (const auto& local : all_tuples(static_cast<std::uint32_t>(solution.size()), h.d)) {
    Tuple t;
    for (auto i : local) t.push_back(solution[i]);
    reduced += h.edges.at(t) % p;
  }
  BigInt missing = k.instance.target - reduced;
  if (missing % p != 0 || missing < 0) throw std::invalid_argument("not a solution of the input");
  const GadgetLayout layout{h.n, h.d};
  std::vector<VertexId> out = solution;
  for (std::uint32_t z = 0; z + 1 < h.d; ++z) out.push_back(layout.hub(z));
  auto counts = slack_selection(missing / p, h.n, h.d);
  for (std::uint32_t j = 0; j < h.d; ++j) {
    for (std::uint32_t c = 0; c < counts[j]; ++c) out.push_back(layout.slack(j, c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// subset sum kernel

SubsetSumKernel kernelize_subset_sum(const SubsetSumInstance& s, const Rational& epsilon,
                                     std::uint64_t seed, std::uint32_t cap) {
  const auto n = static_cast<std::uint32_t>(s.items.size());
  BigInt N = s.target;
  for (const auto& x : s.items) N = std::max(N, x);
  SubsetSumKernel out;
  out.cert = sample_modulus(n, N, epsilon, seed, cap);
  const BigInt& p = out.cert.p;
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    BigInt r = s.items[i] % p;
    if (r == 0) {
      out.cert.dropped.push_back(i);
    } else {
      out.instance.items.push_back(r);
      out.kept.push_back(i);
    }
  }
  const std::uint32_t L = static_cast<std::uint32_t>(ceil_log2(BigInt(std::max<std::uint32_t>(n, 1))));
  for (std::uint32_t k = 0; k <= L; ++k) out.instance.items.push_back(p << k);
  out.instance.target = s.target % p + p * ((BigInt(1) << (L + 1)) - 1);
  return out;
}

std::vector<std::size_t> lift_subset_sum_witness(const SubsetSumInstance&,
                                                 const SubsetSumKernel& k,
                                                 const std::vector<std::size_t>& solution) {
  const BigInt& p = k.cert.p;
  std::set<std::size_t> chosen(solution.begin(), solution.end());
  std::vector<std::size_t> out;
  BigInt reduced = 0;
  for (std::size_t i = 0; i < k.kept.size(); ++i) {
    if (chosen.count(k.kept[i])) {
      out.push_back(i);
      reduced += k.instance.items[i];
    }
  }
  BigInt missing = k.instance.target - reduced;
  if (missing % p != 0 || missing < 0) throw std::invalid_argument("not a solution of the input");
  BigInt units = missing / p;
  for (std::size_t b = 0; units != 0; ++b, units >>= 1) {
    if (k.kept.size() + b >= k.instance.items.size()) {
      throw std::invalid_argument("slack cannot absorb the remainder");
    }
    if ((units & 1) != 0) out.push_back(k.kept.size() + b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSP kernel

CspFormula merge_and_applications(const CspFormula& f) {
  CspFormula out;
  out.n = f.n;
  out.language = f.language;
  out.target = f.target;
  std::map<std::vector<VertexId>, std::size_t> slot;
  for (const auto& a : f.applications) {
    std::vector<VertexId> key = a.indices;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto [it, fresh] = slot.emplace(key, out.applications.size());
    if (fresh) {
      out.applications.push_back(a);
    } else {
      out.applications[it->second].weight += a.weight;
    }
  }
  return out;
}

CspKernel kernelize_csp_and(const CspFormula& f, const Rational& epsilon, std::uint64_t seed,
                            std::uint32_t cap) {
  if (f.language.size() != 1 || f.language[0].arity < 2 ||
      f.language[0] != CspConstraint::conjunction(f.language[0].arity)) {
    throw std::invalid_argument(
        "CSP kernel supports only the language {AND_d} with d >= 2; other constraints need a "
        "gadget that can be toggled by one variable, which is not available in general");
  }
  const std::uint32_t d = f.language[0].arity;
  CspFormula merged = merge_and_applications(f);
  BigInt N = boost::multiprecision::abs(merged.target);
  for (const auto& a : merged.applications) N = std::max(N, BigInt(boost::multiprecision::abs(a.weight)));

  CspKernel out;
  out.cert = sample_modulus(f.n, N, epsilon, seed, cap);
  const BigInt& p = out.cert.p;
  CspFormula& g = out.instance;
  g.language = merged.language;
  g.n = f.n + (d - 1) + d * f.n;
  for (auto a : merged.applications) {
    a.weight = floor_mod(a.weight, p);
    g.applications.push_back(std::move(a));
  }
  const GadgetLayout layout{f.n, d};
  for (std::uint32_t j = 0; j < d; ++j) {
    BigInt w = ipow(f.n, j) * p;
    for (std::uint32_t k = 0; k < f.n; ++k) {
      CspApplication a;
      a.constraint = 0;
      for (std::uint32_t z = 0; z + 1 < d; ++z) a.indices.push_back(layout.hub(z));
      a.indices.push_back(layout.slack(j, k));
      a.weight = w;
      g.applications.push_back(std::move(a));
    }
  }
  g.target = floor_mod(merged.target, p) + p * ipow(f.n, d);
  return out;
}

std::vector<bool> lift_csp_witness(const CspFormula& f, const CspKernel& k,
                                   const std::vector<bool>& assignment) {
  const BigInt& p = k.cert.p;
  const std::uint32_t d = k.instance.language[0].arity;
  std::vector<bool> x(k.instance.n, false);
  std::copy(assignment.begin(), assignment.end(), x.begin());
  BigInt reduced = eval_csp(k.instance, x);
  BigInt missing = k.instance.target - reduced;
  if (missing % p != 0 || missing < 0) throw std::invalid_argument("not a solution of the input");
  const GadgetLayout layout{f.n, d};
  for (std::uint32_t z = 0; z + 1 < d; ++z) x[layout.hub(z)] = true;
  auto counts = slack_selection(missing / p, f.n, d);
  for (std::uint32_t j = 0; j < d; ++j) {
    for (std::uint32_t c = 0; c < counts[j]; ++c) x[layout.slack(j, c)] = true;
  }
  return x;
}

}  // namespace wkern
