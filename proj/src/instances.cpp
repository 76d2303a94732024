#include "wkern/instances.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include <json.hpp>

namespace wkern {

using nlohmann::json;

BigWeight WeightedHypergraph::max_weight() const {
  BigWeight best = 0;
  for (const auto& [tuple, weight] : edges) best = std::max(best, weight);
  return best;
}

RbdsInstance RbdsInstance::empty(std::uint32_t reds, std::uint32_t blues, std::uint32_t budget,
                                 RbdsMode mode) {
  RbdsInstance r;
  r.nR = reds;
  r.nB = blues;
  r.adj.assign(reds, std::vector<bool>(blues, false));
  r.d = budget;
  r.mode = mode;
  return r;
}

CspConstraint CspConstraint::conjunction(std::uint32_t arity) {
  CspConstraint c;
  c.arity = arity;
  c.table.assign(std::size_t{1} << arity, false);
  c.table.back() = true;
  return c;
}

std::vector<std::vector<VertexId>> NodeWeightedBipartiteGraph::neighbours() const {
  std::vector<std::vector<VertexId>> nb(w.size());
  for (const auto& [u, v] : edges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  return nb;
}

BigInt MultilinearPolynomial::eval(std::uint32_t assignment_bits) const {
  BigInt total = 0;
  for (const auto& [subset, c] : coeffs) {
    if ((subset & assignment_bits) == subset) total += c;
  }
  return total;
}

std::uint32_t MultilinearPolynomial::degree() const {
  std::uint32_t best = 0;
  for (const auto& [subset, c] : coeffs) {
    if (c != 0) best = std::max<std::uint32_t>(best, std::popcount(subset));
  }
  return best;
}

// ---------------------------------------------------------------------------
// validation

namespace {

std::string at(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

}  // namespace

std::optional<Violation> validate(const WeightedHypergraph& h) {
  if (h.d < 2) return Violation{"d", "arity must be ≥ 2"};
  if (h.target < 0) return Violation{"t", "target must be ≥ 0"};
  std::size_t i = 0;
  for (const auto& [tuple, weight] : h.edges) {
    std::string loc = at("edges", i++);
    if (tuple.size() != h.d) return Violation{loc, "tuple size differs from d"};
    for (std::size_t k = 0; k + 1 < tuple.size(); ++k) {
      if (tuple[k] >= tuple[k + 1]) return Violation{loc, "tuple not increasing"};
    }
    if (tuple.back() >= h.n) return Violation{loc, "vertex out of range"};
    if (weight < 0) return Violation{loc, "weight must be ≥ 0"};
  }
  return std::nullopt;
}

std::optional<Violation> validate(const SubsetSumInstance& s) {
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (s.items[i] < 1) return Violation{at("items", i), "item must be ≥ 1"};
  }
  if (s.target < 0) return Violation{"t", "target must be ≥ 0"};
  return std::nullopt;
}

std::optional<Violation> validate(const RbdsInstance& r) {
  if (r.adj.size() != r.nR) return Violation{"adj", "row count differs from nR"};
  for (std::size_t x = 0; x < r.adj.size(); ++x) {
    if (r.adj[x].size() != r.nB) return Violation{at("adj", x), "row length differs from nB"};
  }
  if (r.d < 1 || r.d > r.nR) return Violation{"d", "budget must lie in [1, nR]"};
  return std::nullopt;
}

std::optional<Violation> validate(const CspFormula& f) {
  for (std::size_t i = 0; i < f.language.size(); ++i) {
    const auto& c = f.language[i];
    if (c.arity < 1 || c.arity > 24) return Violation{at("language", i), "arity must lie in [1, 24]"};
    if (c.table.size() != (std::size_t{1} << c.arity)) {
      return Violation{at("language", i), "truth table length must be 2^arity"};
    }
  }
  for (std::size_t i = 0; i < f.applications.size(); ++i) {
    const auto& a = f.applications[i];
    std::string loc = at("applications", i);
    if (a.constraint >= f.language.size()) return Violation{loc, "unknown constraint"};
    if (a.indices.size() != f.language[a.constraint].arity) {
      return Violation{loc, "index count differs from constraint arity"};
    }
    for (VertexId v : a.indices) {
      if (v >= f.n) return Violation{loc, "variable out of range"};
    }
  }
  return std::nullopt;
}

std::optional<Violation> validate(const NodeWeightedBipartiteGraph& g) {
  const std::size_t n = g.w.size();
  std::vector<int> side(n, -1);
  for (VertexId v : g.left) {
    if (v >= n) return Violation{"left", "vertex out of range"};
    if (side[v] != -1) return Violation{"left", "vertex listed twice"};
    side[v] = 0;
  }
  for (VertexId v : g.right) {
    if (v >= n) return Violation{"right", "vertex out of range"};
    if (side[v] != -1) return Violation{"right", "vertex on both sides"};
    side[v] = 1;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v] == -1) return Violation{at("w", v), "vertex on neither side"};
  }
  std::size_t i = 0;
  for (const auto& [u, v] : g.edges) {
    std::string loc = at("edges", i++);
    if (u >= n || v >= n) return Violation{loc, "vertex out of range"};
    if (side[u] != 0 || side[v] != 1) return Violation{loc, "edge does not cross the bipartition"};
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.w[v] < 1) return Violation{at("w", v), "weight must be ≥ 1"};
  }
  return std::nullopt;
}

std::optional<Violation> validate(const Instance& instance) {
  return std::visit([](const auto& x) { return validate(x); }, instance);
}

std::optional<Violation> validate(const NodeWeightedBipartiteGraph& g, const BMatchingCert& z) {
  std::vector<BigWeight> load(g.w.size(), 0);
  BigWeight total = 0;
  for (const auto& [e, value] : z.z) {
    if (!g.edges.count(e)) return Violation{"z", "value on a non-edge"};
    if (value < 0) return Violation{"z", "negative edge value"};
    load[e.first] += value;
    load[e.second] += value;
    total += value;
  }
  for (std::size_t v = 0; v < g.w.size(); ++v) {
    if (load[v] > g.w[v]) return Violation{at("z", v), "capacity exceeded"};
  }
  if (total != z.value) return Violation{"value", "value differs from the sum of z"};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// serialization

std::string kind_of(const Instance& instance) {
  struct Visitor {
    std::string operator()(const WeightedHypergraph&) const { return "eewhc"; }
    std::string operator()(const SubsetSumInstance&) const { return "subset_sum"; }
    std::string operator()(const RbdsInstance& r) const {
      return r.mode == RbdsMode::exact ? "erbds" : "rbds";
    }
    std::string operator()(const CspFormula&) const { return "csp"; }
    std::string operator()(const NodeWeightedBipartiteGraph&) const { return "bwvc"; }
  };
  return std::visit(Visitor{}, instance);
}

namespace {

json big_array(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

json payload_of(const WeightedHypergraph& h) {
  json edges = json::array();
  for (const auto& [tuple, weight] : h.edges) {
    edges.push_back({{"v", tuple}, {"w", to_decimal(weight)}});
  }
  return {{"d", h.d}, {"n", h.n}, {"edges", std::move(edges)}, {"t", to_decimal(h.target)}};
}

json payload_of(const SubsetSumInstance& s) {
  return {{"items", big_array(s.items)}, {"t", to_decimal(s.target)}};
}

json payload_of(const RbdsInstance& r) {
  json edges = json::array();
  for (std::uint32_t x = 0; x < r.nR; ++x) {
    for (std::uint32_t q = 0; q < r.nB; ++q) {
      if (r.adj[x][q]) edges.push_back({x, q});
    }
  }
  return {{"nR", r.nR}, {"nB", r.nB}, {"d", r.d}, {"edges", std::move(edges)}};
}

json payload_of(const CspFormula& f) {
  json language = json::array();
  for (const auto& c : f.language) {
    std::string table;
    for (bool b : c.table) table.push_back(b ? '1' : '0');
    language.push_back({{"arity", c.arity}, {"table", table}});
  }
  json apps = json::array();
  for (const auto& a : f.applications) {
    apps.push_back({{"c", a.constraint}, {"v", a.indices}, {"w", to_decimal(a.weight)}});
  }
  return {{"n", f.n},
          {"language", std::move(language)},
          {"applications", std::move(apps)},
          {"t", to_decimal(f.target)}};
}

json payload_of(const NodeWeightedBipartiteGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"left", g.left}, {"right", g.right}, {"edges", std::move(edges)}, {"w", big_array(g.w)}};
}

// Reader that tracks the JSON pointer of the value being decoded.
class Field {
 public:
  Field(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, path_, "field " + (path_.empty() ? std::string("/") : path_) + ": " + what);
  }

  Field operator[](const char* key) const {
    if (!value_.is_object()) fail("expected an object");
    auto it = value_.find(key);
    if (it == value_.end()) {
      Field(value_, path_ + "/" + key).fail("missing");
    }
    return Field(*it, path_ + "/" + key);
  }

  Field item(std::size_t i) const { return Field(value_.at(i), path_ + "/" + std::to_string(i)); }

  void expect_keys(std::initializer_list<const char*> keys) const {
    if (!value_.is_object()) fail("expected an object");
    for (const auto& [k, v] : value_.items()) {
      bool known = std::any_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; });
      if (!known) Field(v, path_ + "/" + k).fail("unknown field name '" + k + "'");
    }
  }

  std::size_t size() const {
    if (!value_.is_array()) fail("expected an array");
    return value_.size();
  }

  std::uint32_t u32() const {
    if (!value_.is_number_unsigned() && !(value_.is_number_integer() && value_.get<std::int64_t>() >= 0)) {
      fail("expected a non-negative integer");
    }
    auto v = value_.get<std::uint64_t>();
    if (v > 0xFFFFFFFFu) fail("integer too large");
    return static_cast<std::uint32_t>(v);
  }

  BigInt big(bool allow_negative) const {
    if (!value_.is_string()) fail("expected a decimal string");
    auto v = parse_decimal(value_.get<std::string>(), allow_negative);
    if (!v) fail("malformed decimal string '" + value_.get<std::string>() + "'");
    return *v;
  }

  std::string str() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }

  std::vector<VertexId> ids() const {
    std::vector<VertexId> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = item(i).u32();
    return out;
  }

  std::vector<BigInt> bigs(bool allow_negative) const {
    std::vector<BigInt> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = item(i).big(allow_negative);
    return out;
  }

 private:
  const json& value_;
  std::string path_;
};

WeightedHypergraph read_eewhc(const Field& p) {
  p.expect_keys({"d", "n", "edges", "t"});
  WeightedHypergraph h;
  h.d = p["d"].u32();
  h.n = p["n"].u32();
  h.target = p["t"].big(false);
  Field edges = p["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Field e = edges.item(i);
    e.expect_keys({"v", "w"});
    Tuple t = e["v"].ids();
    if (h.edges.count(t)) e["v"].fail("duplicate tuple");
    h.edges.emplace(std::move(t), e["w"].big(false));
  }
  return h;
}

SubsetSumInstance read_subset_sum(const Field& p) {
  p.expect_keys({"items", "t"});
  SubsetSumInstance s;
  s.items = p["items"].bigs(false);
  s.target = p["t"].big(false);
  return s;
}

RbdsInstance read_rbds(const Field& p, RbdsMode mode) {
  p.expect_keys({"nR", "nB", "d", "edges"});
  RbdsInstance r = RbdsInstance::empty(p["nR"].u32(), p["nB"].u32(), p["d"].u32(), mode);
  Field edges = p["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Field e = edges.item(i);
    if (e.size() != 2) e.fail("expected a [red, blue] pair");
    auto x = e.item(0).u32();
    auto q = e.item(1).u32();
    if (x >= r.nR) e.item(0).fail("red vertex out of range");
    if (q >= r.nB) e.item(1).fail("blue vertex out of range");
    r.adj[x][q] = true;
  }
  return r;
}

CspFormula read_csp(const Field& p) {
  p.expect_keys({"n", "language", "applications", "t"});
  CspFormula f;
  f.n = p["n"].u32();
  f.target = p["t"].big(true);
  Field language = p["language"];
  for (std::size_t i = 0; i < language.size(); ++i) {
    Field c = language.item(i);
    c.expect_keys({"arity", "table"});
    CspConstraint con;
    con.arity = c["arity"].u32();
    for (char ch : c["table"].str()) {
      if (ch != '0' && ch != '1') c["table"].fail("truth table must contain only 0 and 1");
      con.table.push_back(ch == '1');
    }
    f.language.push_back(std::move(con));
  }
  Field apps = p["applications"];
  for (std::size_t i = 0; i < apps.size(); ++i) {
    Field a = apps.item(i);
    a.expect_keys({"c", "v", "w"});
    f.applications.push_back({a["c"].u32(), a["v"].ids(), a["w"].big(true)});
  }
  return f;
}

NodeWeightedBipartiteGraph read_bwvc(const Field& p) {
  p.expect_keys({"left", "right", "edges", "w"});
  NodeWeightedBipartiteGraph g;
  g.left = p["left"].ids();
  g.right = p["right"].ids();
  g.w = p["w"].bigs(false);
  Field edges = p["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Field e = edges.item(i);
    if (e.size() != 2) e.fail("expected a [left, right] pair");
    g.edges.emplace(e.item(0).u32(), e.item(1).u32());
  }
  return g;
}

}  // namespace

std::string serialize(const Instance& instance) {
  json payload = std::visit([](const auto& x) { return payload_of(x); }, instance);
  json doc = {{"kind", kind_of(instance)}, {"payload", std::move(payload)}};
  return doc.dump() + "\n";
}

Instance parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw ParseError(line, "", "line " + std::to_string(line) + ": " + e.what());
  }
  Field root(doc, "");
  root.expect_keys({"kind", "payload"});
  std::string kind = root["kind"].str();
  Field payload = root["payload"];
  if (kind == "eewhc") return read_eewhc(payload);
  if (kind == "subset_sum") return read_subset_sum(payload);
  if (kind == "rbds") return read_rbds(payload, RbdsMode::at_most);
  if (kind == "erbds") return read_rbds(payload, RbdsMode::exact);
  if (kind == "csp") return read_csp(payload);
  if (kind == "bwvc") return read_bwvc(payload);
  root["kind"].fail("unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// evaluation helpers

namespace {

void for_each_subset(std::span<const VertexId> vertices, std::uint32_t d, Tuple& scratch,
                     std::size_t start, const std::function<bool(const Tuple&)>& fn, bool& stop) {
  if (stop) return;
  if (scratch.size() == d) {
    if (!fn(scratch)) stop = true;
    return;
  }
  for (std::size_t i = start; i < vertices.size() && !stop; ++i) {
    scratch.push_back(vertices[i]);
    for_each_subset(vertices, d, scratch, i + 1, fn, stop);
    scratch.pop_back();
  }
}

}  // namespace

std::optional<BigWeight> clique_weight(const WeightedHypergraph& h,
                                       std::span<const VertexId> vertices) {
  BigWeight total = 0;
  bool ok = true;
  bool stop = false;
  Tuple scratch;
  for_each_subset(vertices, h.d, scratch, 0,
                  [&](const Tuple& t) {
                    auto it = h.edges.find(t);
                    if (it == h.edges.end()) {
                      ok = false;
                      return false;
                    }
                    total += it->second;
                    return true;
                  },
                  stop);
  if (!ok) return std::nullopt;
  return total;
}

BigWeight subset_total(const SubsetSumInstance& s, std::span<const std::size_t> indices) {
  BigWeight total = 0;
  for (std::size_t i : indices) total += s.items.at(i);
  return total;
}

bool is_rbds_solution(const RbdsInstance& r, std::span<const VertexId> reds) {
  if (r.mode == RbdsMode::exact ? reds.size() != r.d : reds.size() > r.d) return false;
  for (std::uint32_t q = 0; q < r.nB; ++q) {
    std::uint32_t hits = 0;
    for (VertexId x : reds) hits += r.adj.at(x)[q] ? 1 : 0;
    if (r.mode == RbdsMode::exact ? hits != 1 : hits == 0) return false;
  }
  return true;
}

bool is_vertex_cover(const NodeWeightedBipartiteGraph& g, std::span<const VertexId> cover) {
  std::vector<bool> in(g.w.size(), false);
  for (VertexId v : cover) in.at(v) = true;
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [&](const Edge& e) { return in[e.first] || in[e.second]; });
}

BigWeight cover_weight(std::span<const BigWeight> w, std::span<const VertexId> cover) {
  BigWeight total = 0;
  for (VertexId v : cover) total += w[v];
  return total;
}

std::vector<Tuple> all_tuples(std::uint32_t n, std::uint32_t d) {
  std::vector<Tuple> out;
  std::vector<VertexId> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  Tuple scratch;
  bool stop = false;
  for_each_subset(vertices, d, scratch, 0,
                  [&](const Tuple& t) {
                    out.push_back(t);
                    return true;
                  },
                  stop);
  return out;
}

}  // namespace wkern
