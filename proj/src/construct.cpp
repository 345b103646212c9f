#include "primegraph/construct.hpp"

#include <algorithm>

namespace pg {

std::map<std::string, BigInt> Blueprint::vertex_primes() const {
  std::map<std::string, BigInt> out;
  for (const auto& [v, p] : phi) out[v] = p;
  for (const auto* m : {&o_primes, &d_primes, &i_primes})
    for (const auto& [v, p] : *m) out[v] = p;
  return out;
}

namespace {

Prime pendant_prime(const Graph& complement) {
  for (std::size_t i = 0; i < complement.size(); ++i)
    if (complement.degree(i) == 1) return std::stoull(complement.id(i));
  throw ConstructError("unsupported", "complement has no pendant vertex");
}

std::string clause_of(const std::string& tag) {
  const auto colon = tag.rfind(':');
  return colon == std::string::npos ? tag : tag.substr(colon + 1);
}

// Missing primes of a vector, pulled back to X.
VertexSet pattern_of(const std::map<std::string, Prime>& phi, const PrimeSet& vec, const VertexSet& skip = {}) {
  VertexSet out;
  for (const auto& [x, p] : phi)
    if (!skip.count(x) && !vec.count(p)) out.insert(x);
  return out;
}

struct DirectPlan {
  std::map<std::string, Prime> phi;
  std::map<std::string, PrimeSet> reps;  // boundary vertices only
};

// Coloring of g minus X with the boundary color renamed to I.
Coloring construction_coloring(const Graph& g, const Verdict& v, const VertexSet& x) {
  if (!v.coloring) throw ConstructError("unsupported", "verdict carries no coloring");
  Coloring c;
  for (const auto& u : g.vertices()) {
    if (x.count(u)) continue;
    auto it = v.coloring->find(u);
    if (it == v.coloring->end()) throw ConstructError("unsupported", "coloring misses vertex " + u);
    c[u] = it->second;
  }
  const VertexSet boundary = [&] {
    VertexSet b = neighborhood(g, x);
    for (const auto& u : x) b.erase(u);
    return b;
  }();
  if (boundary.empty()) return c;
  const Color beta = c.at(*boundary.begin());
  for (const auto& u : boundary)
    if (c.at(u) != beta) throw ConstructError("unsupported", "boundary vertices are not monochromatic");
  for (auto& [u, col] : c) {
    if (col == beta) col = Color::I;
    else if (col == Color::I) col = beta;
  }
  return c;
}

Blueprint assemble(const Graph& g, const Verdict& v, const Realizer* e, const DirectPlan& plan,
                   const VertexSet& x) {
  Blueprint b;
  b.family = v.family;
  b.condition_tag = v.condition_tag;
  b.extension = e ? e->name : "";
  b.phi = plan.phi;

  const Coloring c = construction_coloring(g, v, x);
  const Graph h = remove_vertices(g, x);
  if (!is_proper(h, c)) throw ConstructError("unsupported", "coloring is not proper off X");
  if (!is_triangle_free(h)) throw ConstructError("unsupported", "graph minus X has a triangle");

  std::set<BigInt> used;
  if (e)
    for (auto p : e->primes()) used.insert(p);

  std::vector<std::string> os, ds, is;
  for (const auto& u : h.vertices()) {
    const Color col = c.at(u);
    (col == Color::O ? os : col == Color::D ? ds : is).push_back(u);
  }
  const auto ops = smallest_primes_outside(os.size(), used);
  BigInt p_all = 1;
  for (std::size_t k = 0; k < os.size(); ++k) {
    b.o_primes[os[k]] = ops[k];
    used.insert(ops[k]);
    p_all *= ops[k];
  }
  for (const auto& u : ds) {
    auto q = congruence_prime(p_all, used);
    if (!q) throw ConstructError("prime-search", "no D-prime within the search cap");
    b.d_primes[u] = *q;
    used.insert(*q);
  }

  const Orientation o = class_orientation(h, c);
  b.frobenius_edges = o.arcs;
  std::map<std::string, std::vector<std::string>> in;
  for (const auto& [t, hd] : o.arcs) in[hd].push_back(t);

  const BigInt order_e = e ? order_value(e->order) : BigInt(1);
  for (const auto& u : is) {
    std::set<std::string> n12;
    for (const auto& w : in[u]) {
      n12.insert(w);
      for (const auto& z : in[w]) n12.insert(z);
    }
    BigInt mod = order_e;
    for (const auto& w : n12) mod *= b.o_primes.count(w) ? b.o_primes.at(w) : b.d_primes.at(w);
    auto r = congruence_prime(mod, used);
    if (!r) throw ConstructError("prime-search", "no I-prime within the search cap");
    b.i_primes[u] = *r;
    used.insert(*r);
    if (e) {
      auto it = plan.reps.find(u);
      b.rep_choice[u] = it != plan.reps.end() ? it->second : e->primes();
    }
  }
  for (const auto& [u, rep] : plan.reps)
    if (!b.i_primes.count(u)) throw ConstructError("unsupported", "boundary vertex " + u + " is not colored I");
  return b;
}

// Bijections X -> pi(E) in a fixed order. `fixed` pins some vertices.
template <typename F>
void each_phi(const std::vector<std::string>& xs, const PrimeSet& primes, const std::map<std::string, Prime>& fixed,
              F&& visit) {
  std::vector<Prime> ps(primes.begin(), primes.end());
  do {
    std::map<std::string, Prime> phi;
    bool ok = true;
    for (std::size_t i = 0; i < xs.size() && ok; ++i) {
      phi[xs[i]] = ps[i];
      auto it = fixed.find(xs[i]);
      if (it != fixed.end() && it->second != ps[i]) ok = false;
    }
    if (ok && visit(phi)) return;
  } while (std::next_permutation(ps.begin(), ps.end()));
}

Blueprint direct(const Graph& g, const Verdict& v, const Realizer& e,
                 const std::map<std::string, Prime>& fixed = {}) {
  const VertexSet x = role_set(v);
  const PrimeSet primes = e.primes();
  if (x.size() != primes.size())
    throw ConstructError("unsupported", "role set size differs from |pi(" + e.name + ")|");
  std::vector<std::string> xs(x.begin(), x.end());
  VertexSet boundary = neighborhood(g, x);
  for (const auto& u : x) boundary.erase(u);

  bool shape_found = false;
  std::optional<DirectPlan> plan;
  each_phi(xs, primes, fixed, [&](const std::map<std::string, Prime>& phi) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        if (g.adjacent(xs[i], xs[j]) != e.complement.adjacent(prime_id(phi.at(xs[i])), prime_id(phi.at(xs[j]))))
          return false;
    shape_found = true;
    DirectPlan p{phi, {}};
    for (const auto& u : boundary) {
      VertexSet want;
      for (const auto& w : g.neighbor_ids(u))
        if (x.count(w)) want.insert(w);
      bool hit = false;
      for (const auto& vec : e.vectors)
        if (pattern_of(phi, vec) == want) {
          p.reps[u] = vec;
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    plan = p;
    return true;
  });
  if (!plan) {
    if (!shape_found) throw ConstructError("shape-mismatch", "X does not induce the complement of " + e.name);
    throw ConstructError(e.vectors_complete ? "no-matching-vector" : "pending",
                         "no fixed-point vector of " + e.name + " realizes the adjacency to X" +
                             (e.vectors_complete ? "" : " (vector data incomplete)"));
  }
  return assemble(g, v, &e, *plan, x);
}

}  // namespace

std::vector<Recipe> recipes_for(const Verdict& v) {
  if (!v.accepted) throw ConstructError("unsupported", "verdict is a rejection");
  const std::string& tag = v.condition_tag;
  if (tag == "solvable" || clause_of(tag) == "1") return {{"", std::nullopt}};
  const std::string fam = v.family;
  const std::string cl = clause_of(tag);
  const FamilyKind k = family_kind(fam);
  const Catalog& cat = catalog();
  switch (k) {
    case FamilyKind::A7:
      if (cl == "2.1") return {{"A7", {}}};
      if (cl == "2.2") return {{"64.A7", {}}};
      if (cl == "2.3") return {{"16.A7", {}}};
      if (cl == "2.4") return {{"2.A7", {}}};
      if (cl == "2.5") return {{"2.A7", 2}};
      break;
    case FamilyKind::M11:
      if (cl == "2.1") return {{"M11", {}}};
      if (cl == "2.2") return {{"3^5.M11", {}}};
      if (cl == "2.3") return {{"3^5.M11", 3}};
      break;
    case FamilyKind::M12:
      if (cl == "2") return {{"M12", {}}};
      if (cl == "3") return {{"2.M12", {}}};
      break;
    case FamilyKind::PSLfam:
    case FamilyKind::Spoon:
      if (cl == "3") return {{fam, {}}};
      if (cl == "2") return {{fam, pendant_prime(*cat.group(fam).complement)}};
      break;
    case FamilyKind::G2_3:
      if (cl == "2") return {{"G2(3)", {}}, {"Aut(G2(3))", {}}, {"G2(3)", 3}};
      break;
    case FamilyKind::PSL34:
      if (cl == "2") return {{"PSL(3,4)", {}}, {"PSL(3,4):2/E1", {}}, {"PSL(3,4):2/E2", {}}, {"PSL(3,4)", 2}};
      break;
    case FamilyKind::U43:
      if (cl == "2") return {{"U4(3)", {}}, {"U4(3):2/E", {}}, {"U4(3)", 2}};
      break;
    case FamilyKind::A5:
      if (cl == "2.1") return {{"A5", {}}};
      if (cl == "2.2") return {{"SL(2,5)", {}}};
      if (cl == "2.3") return {{"C2.S5", {}}};
      break;
    default:
      break;
  }
  throw ConstructError("unsupported", "no construction recipe for " + tag);
}

Blueprint build_blueprint(const Graph& g, const Verdict& v, const std::string& extension) {
  if (!v.accepted) throw ConstructError("unsupported", "verdict is a rejection");
  if (extension.empty()) {
    if (!role_set(v).empty()) throw ConstructError("unsupported", "clause with roles needs an extension");
    return assemble(g, v, nullptr, {}, {});
  }
  return direct(g, v, catalog().realizer(extension));
}

Blueprint build_via_product(const Graph& g, const Verdict& v, const std::string& extension, Prime t) {
  if (!v.accepted) throw ConstructError("unsupported", "verdict is a rejection");
  const Realizer e = catalog().realizer(extension);
  if (!e.primes().count(t)) throw ConstructError("unsupported", std::to_string(t) + " is not a prime of " + e.name);
  const VertexSet x = role_set(v);
  if (x.size() != e.primes().size())
    throw ConstructError("unsupported", "role set size differs from |pi(" + e.name + ")|");
  std::vector<std::string> xs(x.begin(), x.end());
  VertexSet boundary = neighborhood(g, x);
  for (const auto& u : x) boundary.erase(u);

  const std::string tid = prime_id(t);
  bool shape_found = false;
  std::optional<std::pair<std::map<std::string, Prime>, Graph>> found;
  each_phi(xs, e.primes(), {}, [&](const std::map<std::string, Prime>& phi) {
    std::string d;
    for (const auto& [u, p] : phi)
      if (p == t) d = u;
    if (g.degree(g.index_of(d)) != 0) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (xs[i] == d || xs[j] == d) continue;
        if (g.adjacent(xs[i], xs[j]) != e.complement.adjacent(prime_id(phi.at(xs[i])), prime_id(phi.at(xs[j]))))
          return false;
      }
    shape_found = true;
    Graph aug = g;
    for (const auto& u : xs)
      if (u != d && e.complement.adjacent(tid, prime_id(phi.at(u)))) aug.add_edge(d, u);
    for (const auto& u : boundary) {
      VertexSet want;
      for (const auto& w : g.neighbor_ids(u))
        if (x.count(w)) want.insert(w);
      std::optional<PrimeSet> pick;
      for (const auto& vec : e.vectors)
        if (pattern_of(phi, vec, {d}) == want && (!pick || (!pick->count(t) && vec.count(t)))) pick = vec;
      if (!pick) return false;
      if (!pick->count(t)) aug.add_edge(d, u);
    }
    found.emplace(phi, aug);
    return true;
  });
  if (!found) {
    if (!shape_found) throw ConstructError("shape-mismatch", "X minus the isolated role does not fit " + e.name);
    throw ConstructError(e.vectors_complete ? "no-matching-vector" : "pending",
                         "no fixed-point vector of " + e.name + " realizes the adjacency to X" +
                             (e.vectors_complete ? "" : " (vector data incomplete)"));
  }
  const auto& [phi, aug] = *found;
  Blueprint b = direct(aug, v, e, phi);
  for (const auto& [u, w] : aug.edges())
    if (!g.adjacent(u, w)) b.augmented_edges.emplace_back(u, w);
  b.post_products.push_back(t);
  return b;
}

Blueprint construct(const Graph& g, const Verdict& v) {
  std::vector<std::string> failures;
  bool pending = false;
  for (const auto& r : recipes_for(v)) {
    try {
      return r.isolate ? build_via_product(g, v, r.extension, *r.isolate) : build_blueprint(g, v, r.extension);
    } catch (const ConstructError& e) {
      if (e.kind() == "pending") pending = true;
      failures.push_back(r.extension + (r.isolate ? " x C_" + std::to_string(*r.isolate) : "") + ": " + e.what());
    }
  }
  std::string msg;
  for (const auto& f : failures) msg += (msg.empty() ? "" : "; ") + f;
  throw ConstructError(pending ? "pending" : "no-matching-vector", msg);
}

std::string compare_evaluation(const Graph& g, const Blueprint& b, const Graph& evaluated) {
  const auto vp = b.vertex_primes();
  if (vp.size() != g.size()) return "blueprint assigns " + std::to_string(vp.size()) + " primes to " +
                                    std::to_string(g.size()) + " vertices";
  std::map<std::string, std::string> rename;
  for (const auto& u : g.vertices()) {
    auto it = vp.find(u);
    if (it == vp.end()) return "vertex " + u + " has no prime";
    rename[u] = it->second.str();
  }
  if (evaluated.size() != g.size()) return "evaluated graph has " + std::to_string(evaluated.size()) + " vertices";
  for (const auto& [u, p] : rename)
    if (!evaluated.has_vertex(p)) return "prime " + p + " missing from the evaluated graph";
  if (!equal_under(g, evaluated, rename)) return "evaluated complement differs from the input under the prime map";
  if (g.size() <= kCanonicalCap && !isomorphic(g, evaluated)) return "canonical forms differ";
  return "";
}

RoundTrip verify_roundtrip(const Graph& g, const std::string& family) {
  RoundTrip r;
  r.family = family;
  r.verdict = classify(g, family);
  if (!r.verdict.accepted) {
    r.status = "rejected";
    r.message = r.verdict.refutation;
    return r;
  }
  try {
    r.blueprint = construct(g, r.verdict);
    r.evaluated = evaluate_blueprint(*r.blueprint);
    r.message = compare_evaluation(g, *r.blueprint, *r.evaluated);
    r.status = r.message.empty() ? "pass" : "fail";
  } catch (const ConstructError& e) {
    r.status = e.kind() == "pending" ? "pending" : "fail";
    r.message = e.what();
  } catch (const InputError& e) {
    r.status = "fail";
    r.message = e.what();
  }
  return r;
}

namespace {

json prime_map(const std::map<std::string, BigInt>& m) {
  json j = json::object();
  for (const auto& [v, p] : m) j[v] = p.str();
  return j;
}

std::map<std::string, BigInt> read_prime_map(const json& j) {
  std::map<std::string, BigInt> m;
  for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = parse_big(it.value().get<std::string>());
  return m;
}

json edge_list(const std::vector<std::pair<std::string, std::string>>& es) {
  json j = json::array();
  for (const auto& [u, v] : es) j.push_back({u, v});
  return j;
}

std::vector<std::pair<std::string, std::string>> read_edge_list(const json& j) {
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& e : j) es.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return es;
}

}  // namespace

json blueprint_to_json(const Blueprint& b) {
  json phi = json::object();
  for (const auto& [v, p] : b.phi) phi[v] = prime_id(p);
  json reps = json::object();
  for (const auto& [v, vec] : b.rep_choice) {
    json a = json::array();
    for (auto p : vec) a.push_back(prime_id(p));
    reps[v] = a;
  }
  json post = json::array();
  for (auto p : b.post_products) post.push_back(prime_id(p));
  return {{"schema", kSchemaVersion},
          {"family", b.family},
          {"condition_tag", b.condition_tag},
          {"extension", b.extension.empty() ? json(nullptr) : json(b.extension)},
          {"phi", phi},
          {"o_primes", prime_map(b.o_primes)},
          {"d_primes", prime_map(b.d_primes)},
          {"i_primes", prime_map(b.i_primes)},
          {"frobenius_edges", edge_list(b.frobenius_edges)},
          {"rep_choice", reps},
          {"post_products", post},
          {"augmented_edges", edge_list(b.augmented_edges)}};
}

Blueprint blueprint_from_json(const json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw InputError("unsupported blueprint schema");
    Blueprint b;
    b.family = j.at("family").get<std::string>();
    b.condition_tag = j.at("condition_tag").get<std::string>();
    if (!j.at("extension").is_null()) b.extension = j.at("extension").get<std::string>();
    for (auto it = j.at("phi").begin(); it != j.at("phi").end(); ++it)
      b.phi[it.key()] = std::stoull(it.value().get<std::string>());
    b.o_primes = read_prime_map(j.at("o_primes"));
    b.d_primes = read_prime_map(j.at("d_primes"));
    b.i_primes = read_prime_map(j.at("i_primes"));
    b.frobenius_edges = read_edge_list(j.at("frobenius_edges"));
    for (auto it = j.at("rep_choice").begin(); it != j.at("rep_choice").end(); ++it) {
      PrimeSet vec;
      for (const auto& p : it.value()) vec.insert(std::stoull(p.get<std::string>()));
      b.rep_choice[it.key()] = vec;
    }
    for (const auto& p : j.at("post_products")) b.post_products.push_back(std::stoull(p.get<std::string>()));
    b.augmented_edges = read_edge_list(j.value("augmented_edges", json::array()));
    return b;
  } catch (const json::exception& e) {
    throw InputError(std::string("blueprint JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InputError(std::string("blueprint JSON: ") + e.what());
  }
}

json roundtrip_to_json(const RoundTrip& r) {
  json j{{"schema", kSchemaVersion}, {"family", r.family}, {"status", r.status}, {"message", r.message}};
  j["verdict"] = verdict_to_json(r.verdict);
  j["blueprint"] = r.blueprint ? blueprint_to_json(*r.blueprint) : json(nullptr);
  j["evaluated"] = r.evaluated ? graph_to_json(*r.evaluated) : json(nullptr);
  return j;
}

}  // namespace pg
