#include <omp.h>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wkern/acceptance.hpp"
#include "wkern/compositions.hpp"
#include "wkern/generators.hpp"
#include "wkern/instances.hpp"
#include "wkern/interval_reduction.hpp"
#include "wkern/oracles.hpp"
#include "wkern/prime_hash.hpp"
#include "wkern/rng.hpp"
#include "wkern/vc_compress.hpp"

namespace {

using json = nlohmann::json;
using namespace wkern;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kOther = 1, kUsage = 2, kInput = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that does not parse or breaks an instance invariant.
struct InputError : std::runtime_error {
  InputError(std::string path, json detail, const std::string& what)
      : std::runtime_error(what), path(std::move(path)), detail(std::move(detail)) {}
  std::string path;
  json detail;
};

struct Loaded {
  std::string path;
  std::string digest;
  Instance instance;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) {
    throw std::runtime_error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

// Artifact to `out`, or to stdout when no path is given.
void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

Loaded load(const std::string& path) {
  std::string text = read_file(path);
  Loaded l{path, sha256_hex(text), {}};
  try {
    l.instance = parse(text);
  } catch (const ParseError& e) {
    throw InputError(path, {{"line", e.line()}, {"field", e.field()}}, e.what());
  }
  if (auto v = validate(l.instance)) {
    throw InputError(path, {{"location", v->location}}, v->message);
  }
  return l;
}

template <class T>
const T& expect(const Loaded& l, const char* what) {
  if (const T* p = std::get_if<T>(&l.instance)) return *p;
  throw InputError(l.path, {{"kind", kind_of(l.instance)}},
                   std::string("expected ") + what + " instance");
}

json inputs_json(const std::vector<Loaded>& in) {
  json a = json::array();
  for (const auto& l : in) a.push_back({{"path", l.path}, {"sha256", l.digest}});
  return a;
}

json big_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_decimal(x));
  return a;
}

json witness_json(const std::optional<std::vector<std::uint32_t>>& w) {
  return w ? json(*w) : json(nullptr);
}

struct Options {
  std::uint64_t seed = 0;
  bool seed_used = false;
  std::optional<std::uint32_t> cap;
  std::optional<int> jobs;
  std::string out;
  std::string epsilon = "1/10";
};

// --cap, then WKERN_CAP, then the built-in default.
std::uint32_t effective_cap(const Options& o, std::uint32_t fallback) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("WKERN_CAP")) {
    auto v = parse_decimal(env, false);
    if (!v || *v > 64) throw UsageError(std::string("bad WKERN_CAP value '") + env + "'");
    return static_cast<std::uint32_t>(*v);
  }
  return fallback;
}

Rational epsilon_of(const Options& o) {
  auto e = parse_rational(o.epsilon);
  if (!e || *e <= 0 || *e >= 1) throw UsageError("epsilon must lie in (0, 1), got " + o.epsilon);
  return *e;
}

BigInt big_arg(const std::string& text, const char* name) {
  auto v = parse_decimal(text);
  if (!v) throw UsageError(std::string("bad integer for ") + name + ": " + text);
  return *v;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json report(const char* command, const std::vector<Loaded>& in, const Options& o) {
  json r;
  r["command"] = command;
  r["inputs"] = inputs_json(in);
  r["seed"] = o.seed_used ? json(o.seed) : json(nullptr);
  return r;
}

void print(json r, const Stopwatch& clock) {
  r["elapsed_ms"] = clock.ms();
  std::cout << r.dump() << '\n';
}

// solve

int cmd_solve(const std::string& path, const std::string& mode, bool serial, const Options& o) {
  Stopwatch clock;
  Loaded l = load(path);
  json r = report("solve", {l}, o);
  SolveResult res;
  std::string solver;
  if (auto* h = std::get_if<WeightedHypergraph>(&l.instance)) {
    const auto cap = effective_cap(o, kHyperCliqueCap);
    if (mode == "max") {
      res = serial ? solve_eewhc_max_serial(*h, cap) : solve_eewhc_max(*h, cap);
      solver = "eewhc_max";
    } else if (h->n > cap) {
      res = solve_eewhc_exact_decomposed(*h, cap);
      solver = "eewhc_exact_decomposed";
    } else {
      res = serial ? solve_eewhc_exact_serial(*h, cap) : solve_eewhc_exact(*h, cap);
      solver = "eewhc_exact";
    }
  } else if (auto* s = std::get_if<SubsetSumInstance>(&l.instance)) {
    const auto cap = effective_cap(o, kSubsetSumCap);
    res = serial ? solve_subset_sum_enumerate_serial(*s, cap) : solve_subset_sum(*s, cap);
    solver = "subset_sum";
  } else if (auto* rb = std::get_if<RbdsInstance>(&l.instance)) {
    res = solve_rbds(*rb, effective_cap(o, kRbdsCap));
    solver = "rbds";
  } else if (auto* f = std::get_if<CspFormula>(&l.instance)) {
    const auto cap = effective_cap(o, kCspCap);
    const CspMode m = mode == "max" ? CspMode::max : CspMode::exact;
    if (m == CspMode::exact && f->n > cap && !serial) {
      res = solve_csp_exact_decomposed(*f, cap);
      solver = "csp_exact_decomposed";
    } else {
      res = serial ? solve_csp_serial(*f, m, cap) : solve_csp(*f, m, cap);
      solver = m == CspMode::max ? "csp_max" : "csp_exact";
    }
  } else {
    const auto& g = std::get<NodeWeightedBipartiteGraph>(l.instance);
    MinCovers mc = min_weight_vertex_covers(g, effective_cap(o, kVertexCoverCap));
    res.yes = true;
    res.witness = mc.covers.front();
    res.states_explored = mc.covers.size();
    res.best = mc.min_weight;
    r["covers"] = mc.covers;
    r["matching_value"] = to_decimal(max_b_matching(g).value);
    solver = "min_weight_vertex_cover";
  }
  r["solver"] = solver;
  r["answer"] = res.yes ? "yes" : "no";
  r["witness"] = witness_json(res.witness);
  r["states_explored"] = res.states_explored;
  if (res.best) r["best"] = to_decimal(*res.best);
  print(r, clock);
  return kOk;
}

// kernelize / turing-max

json cert_json(const ModulusCert& c) {
  return {{"p", to_decimal(c.p)},       {"M", to_decimal(c.M)},
          {"U", to_decimal(c.U)},       {"epsilon", to_string(c.epsilon)},
          {"seed", c.seed},             {"n", c.n},
          {"log_n", c.log_n},           {"draws", c.draws},
          {"dropped", c.dropped}};
}

int cmd_kernelize(const std::string& path, const std::string& cert_path, const Options& o) {
  Stopwatch clock;
  const Rational eps = epsilon_of(o);
  const auto cap = effective_cap(o, kKernelCap);
  Loaded l = load(path);
  json cert;
  Instance kernel;
  if (auto* h = std::get_if<WeightedHypergraph>(&l.instance)) {
    auto k = kernelize_eewhc_exact(*h, eps, o.seed, cap);
    cert = cert_json(k.cert);
    kernel = std::move(k.instance);
  } else if (auto* s = std::get_if<SubsetSumInstance>(&l.instance)) {
    auto k = kernelize_subset_sum(*s, eps, o.seed, cap);
    cert = cert_json(k.cert);
    cert["kept"] = k.kept;
    kernel = std::move(k.instance);
  } else if (auto* f = std::get_if<CspFormula>(&l.instance)) {
    auto k = kernelize_csp_and(*f, eps, o.seed, cap);
    cert = cert_json(k.cert);
    kernel = std::move(k.instance);
  } else {
    throw InputError(path, {{"kind", kind_of(l.instance)}},
                     "kernelize takes eewhc, subset_sum or csp instances");
  }
  const std::string text = serialize(kernel);
  emit(text, o.out);
  if (!cert_path.empty()) write_file(cert_path, cert.dump() + "\n");
  if (!o.out.empty()) {
    json r = report("kernelize", {l}, o);
    r["output"] = o.out;
    r["bits"] = text.size() * 8;
    r["p"] = cert["p"];
    print(r, clock);
  }
  return kOk;
}

int cmd_turing_max(const std::string& path, const std::string& oracle, const Options& o) {
  Stopwatch clock;
  const Rational eps = epsilon_of(o);
  Loaded l = load(path);
  const auto& h = expect<WeightedHypergraph>(l, "eewhc");
  TuringFamily fam = turing_kernel_max_hyperclique(h, eps, o.seed, effective_cap(o, kKernelCap));
  json r = report("turing-max", {l}, o);
  r["l"] = to_decimal(fam.l);
  r["u"] = to_decimal(fam.u);
  r["queries"] = fam.queries.size();
  r["member_epsilon"] = to_string(fam.member_epsilon);

  if (!o.out.empty()) {
    fs::create_directories(o.out);
    json members = json::array();
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "member_%03zu.json", i);
      write_file((fs::path(o.out) / name).string(), serialize(fam.members[i].instance));
      members.push_back({{"file", name},
                         {"slack", big_json(fam.queries.queries[i].slack)},
                         {"target", to_decimal(fam.queries.queries[i].target)},
                         {"cert", cert_json(fam.members[i].cert)}});
    }
    json manifest = {{"l", r["l"]},           {"u", r["u"]},
                     {"seed", o.seed},        {"epsilon", to_string(eps)},
                     {"member_epsilon", r["member_epsilon"]},
                     {"decided", fam.decided ? json(*fam.decided) : json(nullptr)},
                     {"members", members}};
    write_file((fs::path(o.out) / "manifest.json").string(), manifest.dump() + "\n");
    r["output"] = o.out;
  }

  if (fam.decided) {
    r["answer"] = *fam.decided ? "yes" : "no";
  } else if (oracle == "internal") {
    const auto cap = effective_cap(o, kHyperCliqueCap);
    std::uint64_t states = 0;
    bool yes = decide_with_oracle(fam, [&](const WeightedHypergraph& member) {
      SolveResult s = solve_eewhc_exact_decomposed(member, cap);
      states += s.states_explored;
      return s.yes;
    });
    r["answer"] = yes ? "yes" : "no";
    r["states_explored"] = states;
  } else {
    r["answer"] = nullptr;
  }
  print(r, clock);
  return kOk;
}

// transformations

std::vector<Loaded> load_all(const std::vector<std::string>& paths) {
  std::vector<Loaded> out;
  for (const auto& p : paths) out.push_back(load(p));
  return out;
}

int cmd_compose(const std::vector<std::string>& paths, const std::string& variant,
                const Options& o) {
  Stopwatch clock;
  auto in = load_all(paths);
  std::vector<RbdsInstance> rs;
  for (const auto& l : in) rs.push_back(expect<RbdsInstance>(l, "rbds"));
  const std::size_t given = rs.size();
  const std::uint32_t z = pad_to_power(rs, 3);
  ComposedInstance c = rbds_cross_compose(
      rs, variant == "padded" ? CompositionVariant::padded_blocks : CompositionVariant::paper);
  emit(serialize(c.graph), o.out);
  if (!o.out.empty()) {
    json r = report("compose", in, o);
    r["output"] = o.out;
    r["variant"] = variant;
    r["z"] = z;
    r["padded_inputs"] = rs.size() - given;
    r["vertices"] = c.graph.n;
    r["base"] = c.layout.base();
    r["target"] = to_decimal(c.graph.target);
    print(r, clock);
  }
  return kOk;
}

int cmd_lift(const std::vector<std::string>& paths, std::uint32_t d, const Options& o) {
  Stopwatch clock;
  if (d < 3) throw UsageError("--d must be at least 3");
  auto in = load_all(paths);
  std::vector<WeightedHypergraph> hs;
  for (const auto& l : in) hs.push_back(expect<WeightedHypergraph>(l, "eewhc"));
  const std::size_t given = hs.size();
  const std::uint32_t z = pad_to_power(hs, d - 2);
  WeightedHypergraph lifted = hyperclique_lift(hs, d);
  emit(serialize(lifted), o.out);
  if (!o.out.empty()) {
    json r = report("lift", in, o);
    r["output"] = o.out;
    r["z"] = z;
    r["padded_inputs"] = hs.size() - given;
    r["vertices"] = lifted.n;
    r["d"] = d;
    print(r, clock);
  }
  return kOk;
}

int cmd_reduce(const std::string& which, const std::string& path, const Options& o) {
  Stopwatch clock;
  Loaded l = load(path);
  Instance out;
  if (which == "erbds2ss") {
    const auto& rb = expect<RbdsInstance>(l, "erbds");
    if (rb.mode != RbdsMode::exact) throw InputError(path, {}, "erbds2ss needs an exact-mode instance");
    out = erbds_to_subset_sum(rb);
  } else {
    out = hyperclique_to_csp(expect<WeightedHypergraph>(l, "eewhc"));
  }
  emit(serialize(out), o.out);
  if (!o.out.empty()) {
    json r = report("reduce", {l}, o);
    r["reduction"] = which;
    r["output"] = o.out;
    print(r, clock);
  }
  return kOk;
}

int cmd_csp_degree(const std::string& path, const Options& o) {
  Stopwatch clock;
  Loaded l = load(path);
  const auto& f = expect<CspFormula>(l, "csp");
  json r = report("csp degree", {l}, o);
  json per = json::array();
  for (const auto& c : f.language) {
    MultilinearPolynomial p = characteristic_polynomial(c);
    json terms = json::array();
    for (const auto& [mask, coeff] : p.coeffs) {
      if (coeff == 0) continue;
      std::vector<std::uint32_t> vars;
      for (std::uint32_t i = 0; i < p.arity; ++i) {
        if (mask >> i & 1) vars.push_back(i + 1);
      }
      terms.push_back({{"vars", vars}, {"coeff", to_decimal(coeff)}});
    }
    per.push_back({{"arity", c.arity}, {"degree", p.degree()}, {"terms", terms}});
  }
  r["degree"] = language_degree(f.language);
  r["constraints"] = per;
  print(r, clock);
  return kOk;
}

// vc

json trace_json(const CompressionTrace& t) {
  json r1 = json::array(), r2 = json::array();
  for (const auto& s : t.rule1) {
    r1.push_back({{"edge", {s.edge.first, s.edge.second}}, {"delta", to_decimal(s.delta)}});
  }
  for (const auto& s : t.rule2) {
    r2.push_back({{"vertex", s.vertex}, {"old_weight", to_decimal(s.old_weight)}});
  }
  return {{"initial_value", to_decimal(t.initial_value)},
          {"rule1", r1},
          {"rule2", r2},
          {"final_w", big_json(t.final_w)}};
}

int cmd_vc_compress(const std::string& path, const std::string& trace_path, const Options& o) {
  Stopwatch clock;
  Loaded l = load(path);
  auto g = expect<NodeWeightedBipartiteGraph>(l, "bwvc");
  Compression c = compress_vc_weights(g);
  if (!trace_path.empty()) write_file(trace_path, trace_json(c.trace).dump() + "\n");
  NodeWeightedBipartiteGraph out = g;
  out.w = c.w;
  emit(serialize(out), o.out);
  if (!o.out.empty()) {
    json r = report("vc compress", {l}, o);
    r["output"] = o.out;
    r["matching_value"] = to_decimal(c.trace.initial_value);
    r["rule1_steps"] = c.trace.rule1.size();
    r["rule2_steps"] = c.trace.rule2.size();
    print(r, clock);
  }
  return kOk;
}

// Second weighting: a bwvc instance on the same graph, or a bare array.
std::vector<BigWeight> load_weights(const std::string& path, const NodeWeightedBipartiteGraph& g,
                                    std::vector<Loaded>& in) {
  std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path, {{"byte", e.byte}}, e.what());
  }
  std::vector<BigWeight> w;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      std::optional<BigInt> v;
      if (doc[i].is_string()) v = parse_decimal(doc[i].get<std::string>(), false);
      if (doc[i].is_number_unsigned()) v = BigInt(doc[i].get<std::uint64_t>());
      if (!v) throw InputError(path, {{"field", "/" + std::to_string(i)}}, "weight must be a non-negative integer");
      w.push_back(*v);
    }
    in.push_back({path, sha256_hex(text), {}});
  } else {
    Loaded l = load(path);
    const auto& h = expect<NodeWeightedBipartiteGraph>(l, "bwvc");
    if (h.left != g.left || h.right != g.right || h.edges != g.edges) {
      throw InputError(path, {}, "second weighting is on a different graph");
    }
    w = h.w;
    in.push_back(std::move(l));
  }
  if (w.size() != g.vertex_count()) throw InputError(path, {}, "weight count differs from |V|");
  for (const auto& x : w) {
    if (x < 1) throw InputError(path, {}, "weights must be >= 1");
  }
  return w;
}

int cmd_vc_compare(const char* command, const std::string& gpath, const std::string& wpath,
                   const Options& o) {
  Stopwatch clock;
  std::vector<Loaded> in{load(gpath)};
  const auto g = expect<NodeWeightedBipartiteGraph>(in[0], "bwvc");
  auto w2 = load_weights(wpath, g, in);
  const auto cap = effective_cap(o, kVertexCoverCap);
  json r = report(command, in, o);
  if (std::string(command) == "vc verify-min") {
    CoverFamilyCheck c = verify_min_cover_preservation(g, g.w, w2, cap);
    r["answer"] = c.same ? "yes" : "no";
    r["counterexample"] = c.counterexample ? json(*c.counterexample) : json(nullptr);
  } else {
    EquivalenceCheck c = vertex_cover_equivalent(g, g.w, w2, cap);
    r["answer"] = c.equivalent ? "yes" : "no";
    r["counterexample"] =
        c.counterexample ? json{c.counterexample->first, c.counterexample->second} : json(nullptr);
  }
  print(r, clock);
  return kOk;
}

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(big_arg(item, "--w"));
  if (out.empty()) throw UsageError("--w needs at least one value");
  return out;
}

// gen

struct GenArgs {
  std::uint32_t n = 6;
  std::uint32_t d = 2;
  std::uint32_t blues = 4;
  std::uint32_t budget = 2;
  std::uint32_t right = 4;
  std::uint32_t applications = 8;
  std::uint32_t language = 2;
  std::uint32_t arity = 3;
  double density = 0.5;
  std::string max_weight = "100";
  std::string target = "0";
};

int cmd_gen(const std::string& kind, const GenArgs& a, const Options& o) {
  CounterRng rng(o.seed);
  const BigInt mw = big_arg(a.max_weight, "--max-weight");
  const BigInt t = big_arg(a.target, "--target");
  Instance inst;
  if (kind == "eewhc") {
    inst = gen::hypergraph(rng, a.n, a.d, a.density, mw, t);
  } else if (kind == "subset_sum") {
    inst = gen::subset_sum(rng, a.n, mw, t);
  } else if (kind == "rbds" || kind == "erbds") {
    inst = gen::rbds(rng, a.n, a.blues, a.budget, a.density,
                     kind == "erbds" ? RbdsMode::exact : RbdsMode::at_most);
  } else if (kind == "csp") {
    inst = gen::csp(rng, a.n, a.applications, a.language, a.arity, mw, t);
  } else {
    inst = gen::bipartite(rng, a.n, a.right, a.density, mw);
  }
  if (auto v = validate(inst)) throw UsageError("generated instance is invalid: " + v->to_string());
  emit(serialize(inst), o.out);
  return kOk;
}

int cmd_verify_suite(const std::string& scale) {
  using namespace wkern::acceptance;
  int failed = 0;
  run_all(scale == "full" ? Scale::full : Scale::small, [&](const CriterionResult& r) {
    std::cout << format_line(r) << std::endl;
    failed += !r.passed;
  });
  std::cout << (failed ? std::to_string(failed) + " checks failed" : std::string("all checks passed"))
            << std::endl;
  return failed ? kOther : kOk;
}

void fail(const char* kind, const std::string& message, json extra = json::object()) {
  extra["error"] = kind;
  extra["message"] = message;
  std::cerr << extra.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted clique kernels and compressions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "OpenMP threads")->check(CLI::PositiveNumber);
  app.add_option("--cap", o.cap, "enumeration cap (overrides WKERN_CAP)");

  std::map<CLI::App*, std::function<int()>> actions;
  auto seed_opt = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed");
    c->parse_complete_callback([&] { o.seed_used = true; });
  };

  std::string file, mode = "exact", cert, oracle = "internal", variant = "paper", scale = "small";
  std::string trace, wfile, wlist, tval = "0";
  std::vector<std::string> files;
  bool serial = false;
  std::uint32_t lift_d = 3, star_n = 2;
  GenArgs ga;

  auto* solve = app.add_subcommand("solve", "decide an instance exactly");
  solve->add_option("file", file)->required();
  solve->add_option("--mode", mode)->check(CLI::IsMember({"exact", "max"}));
  solve->add_flag("--serial", serial, "use the serial reference");
  actions[solve] = [&] { return cmd_solve(file, mode, serial, o); };

  auto* kern = app.add_subcommand("kernelize", "randomized prime-hash kernel");
  kern->add_option("file", file)->required();
  kern->add_option("--epsilon", o.epsilon, "failure probability, e.g. 1/10");
  seed_opt(kern);
  kern->add_option("-o,--out", o.out);
  kern->add_option("--emit-cert", cert, "write the modulus certificate here");
  actions[kern] = [&] { return cmd_kernelize(file, cert, o); };

  auto* tmax = app.add_subcommand("turing-max", "max-weight clique as kernelized exact queries");
  tmax->add_option("file", file)->required();
  tmax->add_option("--epsilon", o.epsilon);
  seed_opt(tmax);
  tmax->add_option("--oracle", oracle)->check(CLI::IsMember({"internal", "none"}));
  tmax->add_option("-o,--out", o.out, "directory for members and manifest");
  actions[tmax] = [&] { return cmd_turing_max(file, oracle, o); };

  auto* compose = app.add_subcommand("compose", "cross-composition");
  compose->require_subcommand(1);
  auto* crbds = compose->add_subcommand("rbds", "RBDS instances to one exact clique instance");
  crbds->add_option("files", files)->required();
  crbds->add_option("--variant", variant)->check(CLI::IsMember({"paper", "padded"}));
  crbds->add_option("-o,--out", o.out);
  actions[crbds] = [&] { return cmd_compose(files, variant, o); };

  auto* lift = app.add_subcommand("lift", "OR of graph instances as one d-uniform instance");
  lift->add_option("--d", lift_d)->required();
  lift->add_option("files", files)->required();
  lift->add_option("-o,--out", o.out);
  actions[lift] = [&] { return cmd_lift(files, lift_d, o); };

  auto* reduce = app.add_subcommand("reduce", "polynomial reductions");
  reduce->require_subcommand(1);
  for (const char* which : {"erbds2ss", "hc2csp"}) {
    auto* r = reduce->add_subcommand(which);
    r->add_option("file", file)->required();
    r->add_option("-o,--out", o.out);
    actions[r] = [&, w = std::string(which)] { return cmd_reduce(w, file, o); };
  }

  auto* csp = app.add_subcommand("csp", "constraint language tools");
  csp->require_subcommand(1);
  auto* degree = csp->add_subcommand("degree", "degree of the characteristic polynomials");
  degree->add_option("file", file)->required();
  actions[degree] = [&] { return cmd_csp_degree(file, o); };

  auto* vc = app.add_subcommand("vc", "vertex cover weight compression");
  vc->require_subcommand(1);
  auto* vcc = vc->add_subcommand("compress", "weights in [1, |V|] with the same minimum covers");
  vcc->add_option("file", file)->required();
  vcc->add_option("-o,--out", o.out);
  vcc->add_option("--trace", trace, "write the reduction trace here");
  actions[vcc] = [&] { return cmd_vc_compress(file, trace, o); };
  auto* vmin = vc->add_subcommand("verify-min", "compare minimum-cover families");
  vmin->add_option("graph", file)->required();
  vmin->add_option("weights", wfile)->required();
  actions[vmin] = [&] { return cmd_vc_compare("vc verify-min", file, wfile, o); };
  auto* veq = vc->add_subcommand("equiv", "compare the order on minimal covers");
  veq->add_option("graph", file)->required();
  veq->add_option("weights", wfile)->required();
  actions[veq] = [&] { return cmd_vc_compare("vc equiv", file, wfile, o); };
  auto* vgen = vc->add_subcommand("gen", "fixed families");
  vgen->require_subcommand(1);
  auto* star = vgen->add_subcommand("star");
  star->add_option("--n", star_n)->required();
  star->add_option("-o,--out", o.out);
  actions[star] = [&] {
    emit(serialize(star_witness(star_n)), o.out);
    return kOk;
  };
  auto* thr = vgen->add_subcommand("threshold");
  thr->add_option("--w", wlist, "comma-separated weights")->required();
  thr->add_option("--t", tval)->required();
  thr->add_option("-o,--out", o.out);
  actions[thr] = [&] {
    emit(serialize(threshold_gadget(parse_list(wlist), big_arg(tval, "--t"))), o.out);
    return kOk;
  };

  auto* gen = app.add_subcommand("gen", "random instances");
  std::string kind;
  gen->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"eewhc", "subset_sum", "rbds", "erbds", "csp", "bwvc"}));
  gen->add_option("--n", ga.n, "vertices, items, reds, variables or left vertices");
  gen->add_option("--d", ga.d, "edge size");
  gen->add_option("--blues", ga.blues);
  gen->add_option("--budget", ga.budget);
  gen->add_option("--right", ga.right);
  gen->add_option("--applications", ga.applications);
  gen->add_option("--language", ga.language);
  gen->add_option("--arity", ga.arity);
  gen->add_option("--density", ga.density)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--max-weight", ga.max_weight);
  gen->add_option("--target", ga.target);
  seed_opt(gen);
  gen->add_option("-o,--out", o.out);
  actions[gen] = [&] { return cmd_gen(kind, ga, o); };

  auto* suite = app.add_subcommand("verify-suite", "run the acceptance checks");
  suite->add_option("--scale", scale)->check(CLI::IsMember({"small", "full"}));
  actions[suite] = [&] { return cmd_verify_suite(scale); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    fail("usage", e.what());
    return kUsage;
  }
  if (o.jobs) omp_set_num_threads(*o.jobs);

  CLI::App* chosen = nullptr;
  for (const auto& [sub, _] : actions) {
    if (sub->parsed()) chosen = sub;
  }
  if (!chosen) {
    fail("usage", "no command given");
    return kUsage;
  }
  try {
    return actions[chosen]();
  } catch (const UsageError& e) {
    fail("usage", e.what());
    return kUsage;
  } catch (const InputError& e) {
    json extra = e.detail.is_object() ? e.detail : json::object();
    extra["file"] = e.path;
    fail("invalid_input", e.what(), extra);
    return kInput;
  } catch (const CapExceeded& e) {
    fail("cap_exceeded", e.what(), {{"size", e.size()}, {"cap", e.cap()}});
    return kOther;
  } catch (const std::invalid_argument& e) {
    fail("invalid_input", e.what());
    return kInput;
  } catch (const std::exception& e) {
    fail("error", e.what());
    return kOther;
  }
}
