#include "primegraph/catalog.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

namespace pg {

namespace detail {
extern const std::string_view kCatalogJson;
}

using nlohmann::json;

std::string prime_id(Prime p) { return std::to_string(p); }

PrimeSet GroupFact::primes() const {
  PrimeSet out;
  for (const auto& [p, e] : order) out.insert(p);
  return out;
}

PrimeSet Realizer::primes() const {
  PrimeSet out;
  for (const auto& [p, e] : order) out.insert(p);
  return out;
}

Graph prime_graph(const std::vector<std::pair<Prime, Prime>>& edges, const PrimeSet& primes) {
  std::vector<std::string> ids;
  for (auto p : primes) ids.push_back(prime_id(p));
  Graph g(ids);
  for (auto [p, q] : edges) g.add_edge(prime_id(p), prime_id(q));
  return g;
}

namespace {

Factorization read_order(const json& j) {
  Factorization f;
  for (auto it = j.begin(); it != j.end(); ++it) f[std::stoull(it.key())] = it.value().get<int>();
  return f;
}

std::vector<std::pair<Prime, Prime>> read_edges(const json& j) {
  std::vector<std::pair<Prime, Prime>> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<Prime>(), e.at(1).get<Prime>());
  return out;
}

std::vector<PrimeSet> read_vectors(const json& j) {
  std::vector<PrimeSet> out;
  for (const auto& v : j) {
    PrimeSet s;
    for (const auto& p : v) s.insert(p.get<Prime>());
    out.push_back(s);
  }
  return out;
}

PrimeSet primes_of(const Factorization& f) {
  PrimeSet out;
  for (const auto& [p, e] : f) out.insert(p);
  return out;
}

Factorization factor(std::uint64_t n) {
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

}  // namespace

Catalog Catalog::from_json_text(std::string_view text) {
  const json j = json::parse(text);
  Catalog c;
  c.schema = j.at("schema").get<int>();
  c.version = j.value("version", "");
  for (const auto& g : j.at("groups")) {
    GroupFact f;
    f.name = g.at("name").get<std::string>();
    f.generic = g.value("generic", false);
    if (g.contains("order")) f.order = read_order(g.at("order"));
    if (g.contains("out")) f.out_order = g.at("out").get<int>();
    if (g.contains("schur")) f.schur_order = g.at("schur").get<int>();
    if (g.contains("fc"))
      for (auto it = g.at("fc").begin(); it != g.at("fc").end(); ++it)
        f.fc[std::stoull(it.key())] = it.value().get<bool>();
    if (g.contains("complement")) f.complement = prime_graph(read_edges(g.at("complement")), f.primes());
    f.shape = g.value("shape", "");
    if (g.contains("relevant_subgroups"))
      f.relevant_subgroups = g.at("relevant_subgroups").get<std::vector<std::string>>();
    if (g.contains("family") && !g.at("family").is_null()) f.family = g.at("family").get<std::string>();
    f.classified = g.value("classified", false);
    f.note = g.value("note", "");
    c.groups_.push_back(std::move(f));
  }
  for (const auto& k : j.at("covers")) {
    CoverFact f;
    f.name = k.at("name").get<std::string>();
    f.base = k.at("base").get<std::string>();
    f.center_order = k.at("center_order").get<int>();
    f.central = k.at("central").get<bool>();
    f.vectors = read_vectors(k.at("vectors"));
    f.vectors_complete = k.value("vectors_complete", true);
    f.note = k.value("note", "");
    if (k.contains("complement")) {
      PrimeSet ps;
      for (auto [p, q] : read_edges(k.at("complement"))) ps.insert({p, q});
      for (const auto& g : c.groups_)
        if (g.name == f.base) ps = g.primes();
      f.complement = prime_graph(read_edges(k.at("complement")), ps);
    }
    c.covers_.push_back(std::move(f));
  }
  for (const auto& x : j.at("extensions")) {
    ExtensionFact f;
    f.name = x.at("name").get<std::string>();
    f.alias = x.value("alias", "");
    f.base = x.at("base").get<std::string>();
    f.order = read_order(x.at("order"));
    f.complement = prime_graph(read_edges(x.at("complement")), primes_of(f.order));
    f.vectors = read_vectors(x.at("vectors"));
    f.vectors_complete = x.value("vectors_complete", true);
    f.note = x.value("note", "");
    c.extensions_.push_back(std::move(f));
  }
  return c;
}

const Catalog& catalog() {
  static const Catalog c = Catalog::from_json_text(detail::kCatalogJson);
  return c;
}

bool Catalog::has_group(const std::string& name) const {
  return std::any_of(groups_.begin(), groups_.end(), [&](const GroupFact& g) { return g.name == name; });
}

const GroupFact& Catalog::group(const std::string& name) const {
  for (const auto& g : groups_)
    if (g.name == name) return g;
  throw InputError("unknown group '" + name + "'");
}

CatalogRecord Catalog::lookup(const std::string& name) const {
  for (const auto& g : groups_)
    if (g.name == name) return g;
  for (const auto& k : covers_)
    if (k.name == name) return k;
  for (const auto& x : extensions_)
    if (x.name == name || (!x.alias.empty() && x.alias == name)) return x;
  throw InputError("unknown catalog name '" + name + "'");
}

std::vector<CoverFact> Catalog::covers_of(const std::string& base) const {
  std::vector<CoverFact> out;
  for (const auto& k : covers_)
    if (k.base == base) out.push_back(k);
  if (out.empty()) throw InputError("no cover data for '" + base + "'");
  return out;
}

Graph central_cover_complement(const Graph& base, int center_order) {
  Graph out = base;
  for (auto [i, j] : base.edge_indices()) {
    const auto p = std::stoull(base.id(i));
    const auto q = std::stoull(base.id(j));
    if (center_order % p == 0 || center_order % q == 0) out.remove_edge(i, j);
  }
  return out;
}

Realizer Catalog::realizer(const std::string& name) const {
  for (const auto& k : covers_) {
    if (k.name != name) continue;
    const GroupFact& base = group(k.base);
    if (!base.complement) throw InputError("no labeled complement for '" + k.base + "'");
    Realizer r;
    r.name = k.name;
    r.kind = k.center_order == 1 ? "group" : "cover";
    r.order = base.order;
    for (const auto& [p, e] : factor(static_cast<std::uint64_t>(k.center_order))) r.order[p] += e;
    r.complement = k.complement ? *k.complement : central_cover_complement(*base.complement, k.center_order);
    r.vectors = k.vectors;
    r.vectors_complete = k.vectors_complete;
    return r;
  }
  for (const auto& x : extensions_) {
    if (x.name != name && x.alias != name) continue;
    return Realizer{x.name, "extension", x.order, x.complement, x.vectors, x.vectors_complete};
  }
  throw InputError("'" + name + "' cannot serve as an extension (no cover or extension record)");
}

std::string shape_of(const Graph& g) {
  const auto e = g.edge_count();
  const auto tri = triangle_indices(g).size();
  if (g.size() == 3) return e == 3 ? "triangle" : "other";
  if (g.size() != 4) return "other";
  if (e == 6) return "K4-complete";
  if (e == 5) return "K4-minus-edge";
  if (e == 4 && tri == 1) return "triangle-plus-pendant";
  if (e == 3 && tri == 1) return "triangle-plus-isolated";
  return "other";
}

const std::vector<std::string>& required_k4_groups() {
  static const std::vector<std::string> names{
      "A7", "A8", "A9", "A10", "M11", "M12", "J2", "PSL(3,4)", "PSL(3,5)", "PSL(3,7)",
      "PSL(3,8)", "PSL(3,17)", "PSL(4,3)", "O5(4)", "O5(5)", "O5(7)", "O5(9)", "O7(2)",
      "O8+(2)", "Sz(8)", "Sz(32)", "U3(4)", "U3(5)", "U3(7)", "U3(8)", "U3(9)", "U4(3)",
      "U5(2)", "2F4(2)'", "G2(3)", "3D4(2)", "PSL(2,q)"};
  return names;
}

std::vector<std::string> validate_catalog(const Catalog& c) {
  std::vector<std::string> v;
  for (const auto& name : required_k4_groups())
    if (!c.has_group(name)) v.push_back("completeness: missing group " + name);
  for (const auto& g : c.groups()) {
    if (g.generic) continue;
    const auto primes = g.primes();
    const bool k4 = g.name != "A5";
    if (k4 && primes.size() != 4) v.push_back(g.name + ": expected four prime divisors");
    if (k4) {
      PrimeSet fcp;
      for (const auto& [p, f] : g.fc) fcp.insert(p);
      if (fcp != primes) v.push_back(g.name + ": FC flag primes differ from order primes");
    }
    if (g.complement) {
      PrimeSet ids;
      for (const auto& id : g.complement->vertices()) ids.insert(std::stoull(id));
      if (ids != primes) v.push_back(g.name + ": complement vertices differ from order primes");
      if (shape_of(*g.complement) != g.shape)
        v.push_back(g.name + ": shape tag " + g.shape + " but stored graph is " + shape_of(*g.complement));
    } else if (g.shape != "star" && g.shape != "A10-shape") {
      v.push_back(g.name + ": shape " + g.shape + " requires a labeled complement");
    }
  }
  std::set<std::string> bases;
  for (const auto& k : c.covers()) {
    bases.insert(k.base);
    if (!c.has_group(k.base)) {
      v.push_back(k.name + ": unknown base group " + k.base);
      continue;
    }
    const auto primes = c.group(k.base).primes();
    for (const auto& vec : k.vectors)
      if (!std::includes(primes.begin(), primes.end(), vec.begin(), vec.end()))
        v.push_back(k.name + ": vector outside the base prime set");
    if (std::find(k.vectors.begin(), k.vectors.end(), primes) == k.vectors.end())
      v.push_back(k.name + ": full vector missing");
    if (k.center_order == 1 && k.name != k.base) v.push_back(k.name + ": trivial cover must carry the base name");
  }
  for (const auto& b : bases) {
    const auto covers = c.covers_of(b);
    if (std::none_of(covers.begin(), covers.end(), [&](const CoverFact& k) { return k.center_order == 1; }))
      v.push_back(b + ": base group missing from its cover list");
  }
  for (const auto& x : c.extensions()) {
    if (!c.has_group(x.base)) {
      v.push_back(x.name + ": unknown base group " + x.base);
      continue;
    }
    const auto base = c.group(x.base).primes();
    for (const auto& id : x.complement.vertices())
      if (!base.count(std::stoull(id))) v.push_back(x.name + ": complement label outside base primes");
    if (std::find(x.vectors.begin(), x.vectors.end(), base) == x.vectors.end())
      v.push_back(x.name + ": full vector missing");
  }
  return v;
}

}  // namespace pg
