#include "primegraph/classify.hpp"

#include <algorithm>
#include <functional>

namespace pg {

namespace {

using Roles = std::vector<std::string>;  // a, b, c[, d]

const char* kRoleNames[] = {"a", "b", "c", "d"};

struct Ctx {
  const Graph& g;
  std::set<VertexSet> tri;  // triangle census as vertex sets
  std::vector<std::vector<std::string>> tri_list;
  std::map<std::string, VertexSet> nb;

  explicit Ctx(const Graph& graph) : g(graph) {
    tri_list = triangles(g);
    for (const auto& t : tri_list) tri.insert(VertexSet(t.begin(), t.end()));
    for (const auto& v : g.vertices()) nb[v] = g.neighbor_ids(v);
  }
  const VertexSet& N(const std::string& v) const { return nb.at(v); }
};

VertexSet S(std::initializer_list<std::string> xs) { return VertexSet(xs); }

VertexSet minus(VertexSet a, const VertexSet& b) {
  for (const auto& x : b) a.erase(x);
  return a;
}

bool subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  for (const auto& x : a)
    if (b.count(x)) return false;
  return true;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  for (const auto& x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

bool exactly_triangles(const Ctx& c, std::initializer_list<VertexSet> want) {
  return c.tri == std::set<VertexSet>(want);
}

// Vertices adjacent to but outside the role set.
std::vector<VertexSet> boundary_mono(const Ctx& c, const Roles& r) {
  VertexSet x(r.begin(), r.end());
  return {minus(neighborhood(c.g, x), x)};
}

enum class Gen { TrianglePlusD, TriangleEdgePlusA, ComponentUnion };

struct Clause {
  std::string tag;  // suffix after the family prefix
  Gen gen;
  std::function<bool(const Ctx&, const Roles&)> holds;
  std::function<std::vector<VertexSet>(const Ctx&, const Roles&)> mono;
  bool partial = false;  // color the graph minus X only
};

std::vector<VertexSet> no_mono(const Ctx&, const Roles&) { return {}; }

// Two-triangle clause shared by A7 and M11.
bool two_triangles(const Ctx& c, const Roles& r) {
  const auto &a = r[0], &b = r[1], &cc = r[2], &d = r[3];
  return exactly_triangles(c, {S({a, b, cc}), S({b, cc, d})}) && c.N(a) == S({b, cc}) &&
         c.N(b) == S({a, cc, d}) && c.N(d) == S({b, cc});
}

bool pendant_at_c(const Ctx& c, const Roles& r) {
  const auto &a = r[0], &b = r[1], &cc = r[2], &d = r[3];
  return exactly_triangles(c, {S({a, b, cc})}) && c.N(d) == S({cc}) && c.N(a) == S({b, cc}) &&
         c.N(b) == S({a, cc});
}

bool isolated_d_quiet_ab(const Ctx& c, const Roles& r) {
  const auto &a = r[0], &b = r[1], &cc = r[2], &d = r[3];
  return exactly_triangles(c, {S({a, b, cc})}) && c.N(d).empty() && c.N(a) == S({b, cc}) &&
         c.N(b) == S({a, cc});
}

std::vector<VertexSet> mono_c_minus_abd(const Ctx& c, const Roles& r) {
  return {minus(c.N(r[2]), S({r[0], r[1], r[3]}))};
}

bool spoon_isolated(const Ctx& c, const Roles& r) {
  const auto &a = r[0], &b = r[1], &cc = r[2], &d = r[3];
  return exactly_triangles(c, {S({a, b, cc})}) && c.N(a) == S({b, cc}) && c.N(b) == S({a, cc}) &&
         c.N(cc) == S({a, b}) && c.N(d).empty();
}

bool spoon_pendant(const Ctx& c, const Roles& r) {
  const auto &a = r[0], &b = r[1], &cc = r[2], &d = r[3];
  return exactly_triangles(c, {S({a, b, cc})}) && c.N(a) == S({b, cc}) && c.N(b) == S({a, cc}) &&
         c.N(cc) == S({a, b, d}) && c.N(d) == S({cc});
}

bool closed_set(const Ctx& c, const Roles& r) {
  VertexSet x(r.begin(), r.end());
  return subset(neighborhood(c.g, x), x);
}

bool rest_triangle_free(const Ctx& c, const Roles& r) {
  return is_triangle_free(remove_vertices(c.g, VertexSet(r.begin(), r.end())));
}

bool x_not_complete(const Ctx& c, const Roles& r) {
  return !is_complete(induced(c.g, VertexSet(r.begin(), r.end())));
}

// Every triangle contains b and c but not a.
bool triangles_through_bc(const Ctx& c, const std::string& a, const std::string& b, const std::string& cc) {
  if (c.tri.empty()) return false;
  for (const auto& t : c.tri)
    if (!t.count(b) || !t.count(cc) || t.count(a)) return false;
  return true;
}

std::vector<Clause> clauses_for(FamilyKind k) {
  switch (k) {
    case FamilyKind::A7:
      return {
          {"2.1", Gen::TrianglePlusD, two_triangles, boundary_mono},
          {"2.2", Gen::TrianglePlusD, pendant_at_c, boundary_mono},
          {"2.3", Gen::TrianglePlusD,
           [](const Ctx& c, const Roles& r) {
             const auto &a = r[0], &b = r[1], &cc = r[2], &d = r[3];
             return exactly_triangles(c, {S({a, b, cc})}) && c.N(d) == S({b}) && c.N(a) == S({b, cc}) &&
                    c.N(b) == S({a, cc, d});
           },
           boundary_mono},
          {"2.4", Gen::TrianglePlusD,
           [](const Ctx& c, const Roles& r) {
             const auto &a = r[0], &b = r[1], &cc = r[2], &d = r[3];
             return exactly_triangles(c, {S({a, b, cc})}) && c.N(a) == S({b, cc}) &&
                    disjoint(c.N(d), S({a, b, cc})) && subset(minus(c.N(b), S({a, cc})), c.N(d)) &&
                    disjoint(c.N(cc), c.N(d));
           },
           boundary_mono},
          {"2.5", Gen::TrianglePlusD,
           [](const Ctx& c, const Roles& r) {
             const auto &a = r[0], &b = r[1], &cc = r[2], &d = r[3];
             return exactly_triangles(c, {S({a, b, cc})}) && c.N(d).empty() && c.N(a) == S({b, cc});
           },
           boundary_mono},
      };
    case FamilyKind::M11:
      return {
          {"2.1", Gen::TrianglePlusD, two_triangles, boundary_mono},
          {"2.2", Gen::TrianglePlusD, pendant_at_c, boundary_mono},
          {"2.3", Gen::TrianglePlusD, isolated_d_quiet_ab, boundary_mono},
      };
    case FamilyKind::M12:
      return {
          {"2", Gen::TrianglePlusD,
           [](const Ctx& c, const Roles& r) {
             return pendant_at_c(c, r) && c.N(r[2]) == S({r[0], r[1], r[3]});
           },
           no_mono},
          {"3", Gen::TrianglePlusD, isolated_d_quiet_ab,
           [](const Ctx& c, const Roles& r) { return std::vector<VertexSet>{minus(c.N(r[2]), S({r[0], r[1]}))}; }},
      };
    // Clause 3 first: it is realized by T itself, clause 2 needs a product.
    case FamilyKind::PSLfam:
      return {
          {"3", Gen::TrianglePlusD, pendant_at_c, mono_c_minus_abd},
          {"2", Gen::TrianglePlusD, isolated_d_quiet_ab, mono_c_minus_abd},
      };
    case FamilyKind::Spoon:
      return {
          {"3", Gen::TrianglePlusD, spoon_pendant, no_mono},
          {"2", Gen::TrianglePlusD, spoon_isolated, no_mono},
      };
    case FamilyKind::G2_3:
    case FamilyKind::U43:
      return {{"2", Gen::ComponentUnion,
               [](const Ctx& c, const Roles& r) {
                 return closed_set(c, r) && rest_triangle_free(c, r) && x_not_complete(c, r);
               },
               no_mono}};
    case FamilyKind::PSL34:
      return {{"2", Gen::ComponentUnion,
               [](const Ctx& c, const Roles& r) { return closed_set(c, r) && rest_triangle_free(c, r); },
               no_mono, true}};
    case FamilyKind::A5:
      return {
          {"2.1", Gen::TrianglePlusD,
           [](const Ctx& c, const Roles& r) {
             const auto &a = r[0], &b = r[1], &cc = r[2];
             return exactly_triangles(c, {S({a, b, cc})}) && c.N(a) == S({b, cc}) && c.N(b) == S({a, cc});
           },
           boundary_mono},
          {"2.2", Gen::TriangleEdgePlusA,
           [](const Ctx& c, const Roles& r) {
             const auto &a = r[0], &b = r[1], &cc = r[2];
             return triangles_through_bc(c, a, b, cc) && !c.N(a).count(b) && !c.N(a).count(cc) &&
                    subset(minus(c.N(b), S({cc})), intersect(c.N(a), c.N(cc)));
           },
           boundary_mono},
          {"2.3", Gen::TriangleEdgePlusA,
           [](const Ctx& c, const Roles& r) {
             const auto &a = r[0], &b = r[1], &cc = r[2];
             return triangles_through_bc(c, a, b, cc) && c.N(a).empty() &&
                    subset(minus(c.N(b), S({cc})), c.N(cc));
           },
           boundary_mono},
      };
    default:
      return {};
  }
}

std::size_t role_count(FamilyKind k) { return k == FamilyKind::A5 ? 3 : 4; }

// Candidate role tuples in a fixed order.
void generate(const Ctx& c, Gen gen, std::size_t arity, const std::function<bool(const Roles&)>& visit) {
  const auto& vs = c.g.vertices();
  switch (gen) {
    case Gen::TrianglePlusD:
      for (const auto& t : c.tri_list) {
        Roles p = t;
        std::sort(p.begin(), p.end());
        do {
          if (arity == 3) {
            if (visit(p)) return;
            continue;
          }
          for (const auto& d : vs) {
            if (std::find(p.begin(), p.end(), d) != p.end()) continue;
            Roles r = p;
            r.push_back(d);
            if (visit(r)) return;
          }
        } while (std::next_permutation(p.begin(), p.end()));
      }
      return;
    case Gen::TriangleEdgePlusA: {
      if (c.tri_list.empty()) return;
      // b, c lie in every triangle, so they come from the first one.
      const auto& t = c.tri_list.front();
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          for (const auto& a : vs) {
            if (a == t[i] || a == t[j]) continue;
            if (visit({a, t[i], t[j]})) return;
          }
        }
      return;
    }
    case Gen::ComponentUnion: {
      const auto comps = components(c.g);
      const std::size_t m = comps.size();
      // N(X) inside X means X is a union of components; only unions of total
      // size 4 are visited.
      std::function<bool(std::size_t, std::size_t, std::vector<std::size_t>&)> rec =
          [&](std::size_t from, std::size_t need, std::vector<std::size_t>& acc) -> bool {
        if (need == 0) {
          Roles r;
          for (auto i : acc) r.push_back(c.g.id(i));
          std::sort(r.begin(), r.end());
          return visit(r);
        }
        for (std::size_t k = from; k < m; ++k) {
          if (comps[k].size() > need) continue;
          acc.insert(acc.end(), comps[k].begin(), comps[k].end());
          if (rec(k + 1, need - comps[k].size(), acc)) return true;
          acc.resize(acc.size() - comps[k].size());
        }
        return false;
      };
      std::vector<std::size_t> acc;
      rec(0, 4, acc);
      return;
    }
  }
}

std::string set_str(const VertexSet& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v;
  return out + "}";
}

std::string roles_str(const Roles& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) out += (i ? " " : "") + std::string(kRoleNames[i]) + "=" + r[i];
  return out;
}

bool clause_one(FamilyKind k) { return k != FamilyKind::Solvable && k != FamilyKind::TriangleFree; }

Verdict run(const Graph& g, const std::string& family, FamilyKind kind) {
  Verdict v;
  v.family = family;
  const std::string prefix = kind == FamilyKind::Solvable ? "" : tag_prefix(family);
  v.trace.push_back("subset relations are read as non-strict inclusion");
  const Ctx c(g);
  const auto full = find_3coloring(g);
  const bool tri_free = c.tri.empty();

  if (tri_free && full) {
    v.accepted = true;
    v.condition_tag = kind == FamilyKind::Solvable ? "solvable" : prefix + ":1";
    v.coloring = full;
    return v;
  }
  if (!clause_one(kind)) {
    if (!tri_free) {
      const auto& t = c.tri_list.front();
      v.refutation = "triangle {" + t[0] + "," + t[1] + "," + t[2] + "}";
      v.refutation_kind = "triangle";
    } else {
      v.refutation = "complement is not 3-colorable";
      v.refutation_kind = "not-3-colorable";
    }
    return v;
  }
  if (!full && kind != FamilyKind::PSL34) {
    v.refutation = "complement is not 3-colorable";
    v.refutation_kind = "not-3-colorable";
    return v;
  }

  std::size_t structural = 0;
  std::string last_mono;
  std::map<std::pair<VertexSet, std::vector<VertexSet>>, std::optional<Coloring>> cache;
  for (const auto& cl : clauses_for(kind)) {
    generate(c, cl.gen, role_count(kind), [&](const Roles& r) {
      if (!cl.holds(c, r)) return false;
      ++structural;
      const auto mono = cl.mono(c, r);
      VertexSet drop = cl.partial ? VertexSet(r.begin(), r.end()) : VertexSet{};
      auto key = std::make_pair(drop, mono);
      auto it = cache.find(key);
      if (it == cache.end()) {
        const Graph h = cl.partial ? remove_vertices(g, drop) : g;
        it = cache.emplace(key, find_3coloring(h, mono)).first;
      }
      if (!it->second) {
        std::string m;
        for (const auto& s : mono) m += set_str(s);
        last_mono = prefix + ":" + cl.tag + " with " + roles_str(r) +
                    (cl.partial ? ": remainder not 3-colorable"
                                : ": no 3-coloring with " + m + " monochromatic");
        return false;
      }
      v.accepted = true;
      v.condition_tag = prefix + ":" + cl.tag;
      for (std::size_t i = 0; i < r.size(); ++i) v.assignment[kRoleNames[i]] = r[i];
      v.coloring = it->second;
      if (cl.partial) v.trace.push_back("coloring covers the graph minus X");
      return true;
    });
    if (v.accepted) break;
  }

  if (v.accepted) {
    // Note sibling clauses that match the same graph structurally.
    const std::string won = v.condition_tag.substr(prefix.size() + 1);
    for (const auto& cl : clauses_for(kind)) {
      if (cl.tag == won) continue;
      bool hit = false;
      generate(c, cl.gen, role_count(kind), [&](const Roles& r) { return hit = cl.holds(c, r); });
      if (hit) v.trace.push_back("clause " + cl.tag + " also matches structurally; reporting " + won);
    }
    return v;
  }
  if (structural > 0) {
    v.refutation = last_mono;
    v.refutation_kind = "coloring-constraint";
  } else if (tri_free) {
    v.refutation = "complement is not 3-colorable";
    v.refutation_kind = "not-3-colorable";
  } else {
    v.refutation = "no role assignment satisfies any clause (" + std::to_string(c.tri.size()) + " triangles)";
    v.refutation_kind = "no-structural-match";
  }
  return v;
}

}  // namespace

FamilyKind family_kind(const std::string& family) {
  if (family == "solvable") return FamilyKind::Solvable;
  const Catalog& cat = catalog();
  if (!cat.has_group(family)) throw InputError("unknown family '" + family + "'");
  const GroupFact& t = cat.group(family);
  if (!t.classified || t.family.empty()) throw InputError(family + " is not classified");
  static const std::map<std::string, FamilyKind> kinds{
      {"A7", FamilyKind::A7},       {"M11", FamilyKind::M11},
      {"M12", FamilyKind::M12},     {"PSLfam", FamilyKind::PSLfam},
      {"spoon", FamilyKind::Spoon}, {"trianglefree", FamilyKind::TriangleFree},
      {"G2(3)", FamilyKind::G2_3},  {"PSL(3,4)", FamilyKind::PSL34},
      {"U4(3)", FamilyKind::U43},   {"A5", FamilyKind::A5}};
  auto it = kinds.find(t.family);
  if (it == kinds.end()) throw InputError("no classifier for family tag '" + t.family + "'");
  return it->second;
}

std::vector<std::string> classified_families() {
  std::vector<std::string> out{"solvable"};
  for (const auto& t : catalog().groups())
    if (t.classified && !t.family.empty()) out.push_back(t.name);
  return out;
}

std::string tag_prefix(const std::string& family) {
  if (family == "solvable") return "solvable";
  return catalog().group(family).family;
}

Verdict classify(const Graph& g, const std::string& family) { return run(g, family, family_kind(family)); }

std::map<std::string, Verdict> classify_all(const Graph& g) {
  std::map<std::string, Verdict> out;
  for (const auto& f : classified_families()) out.emplace(f, classify(g, f));
  return out;
}

namespace {

Verdict checked(const Graph& g, const std::string& t, FamilyKind want) {
  if (family_kind(t) != want) throw InputError(t + " is not in the requested family");
  return run(g, t, want);
}

}  // namespace

Verdict classify_solvable(const Graph& g) { return run(g, "solvable", FamilyKind::Solvable); }
Verdict classify_A7(const Graph& g) { return run(g, "A7", FamilyKind::A7); }
Verdict classify_M11(const Graph& g) { return run(g, "M11", FamilyKind::M11); }
Verdict classify_M12(const Graph& g) { return run(g, "M12", FamilyKind::M12); }
Verdict classify_G2_3(const Graph& g) { return run(g, "G2(3)", FamilyKind::G2_3); }
Verdict classify_PSL34(const Graph& g) { return run(g, "PSL(3,4)", FamilyKind::PSL34); }
Verdict classify_U43(const Graph& g) { return run(g, "U4(3)", FamilyKind::U43); }
Verdict classify_A5(const Graph& g) { return run(g, "A5", FamilyKind::A5); }
Verdict classify_trianglefree_family(const Graph& g, const std::string& t) {
  return checked(g, t, FamilyKind::TriangleFree);
}
Verdict classify_spoon_family(const Graph& g, const std::string& t) { return checked(g, t, FamilyKind::Spoon); }
Verdict classify_pslfam(const Graph& g, const std::string& t) { return checked(g, t, FamilyKind::PSLfam); }

VertexSet role_set(const Verdict& v) {
  VertexSet x;
  for (const auto& [role, vert] : v.assignment) x.insert(vert);
  return x;
}

bool partial_coloring_clause(const std::string& tag) { return tag == "PSL(3,4):2"; }

std::string recheck(const Graph& g, const Verdict& v) {
  if (!v.accepted) return "verdict is a rejection";
  if (!v.coloring) return "no coloring certificate";
  const FamilyKind kind = family_kind(v.family);
  const Ctx c(g);
  const std::string prefix = kind == FamilyKind::Solvable ? "solvable" : tag_prefix(v.family);
  if (v.condition_tag == "solvable" || v.condition_tag == prefix + ":1") {
    if (!c.tri.empty()) return "clause (1) claimed but the complement has a triangle";
    if (!is_proper(g, *v.coloring)) return "coloring is not proper";
    return "";
  }
  if (v.condition_tag.rfind(prefix + ":", 0) != 0) return "tag does not belong to family";
  const std::string suffix = v.condition_tag.substr(prefix.size() + 1);
  for (const auto& cl : clauses_for(kind)) {
    if (cl.tag != suffix) continue;
    Roles r;
    for (std::size_t i = 0; i < role_count(kind); ++i) {
      auto it = v.assignment.find(kRoleNames[i]);
      if (it == v.assignment.end()) return std::string("missing role ") + kRoleNames[i];
      if (!g.has_vertex(it->second)) return "role vertex not in graph";
      r.push_back(it->second);
    }
    if (VertexSet(r.begin(), r.end()).size() != r.size()) return "assignment is not injective";
    if (!cl.holds(c, r)) return "clause predicate fails for the assignment";
    const Graph h = cl.partial ? remove_vertices(g, VertexSet(r.begin(), r.end())) : g;
    Coloring restricted;
    for (const auto& x : h.vertices()) {
      auto it = v.coloring->find(x);
      if (it == v.coloring->end()) return "coloring misses vertex " + x;
      restricted[x] = it->second;
    }
    if (!satisfies(h, restricted, cl.mono(c, r))) return "coloring violates the clause constraints";
    return "";
  }
  return "unknown clause tag " + v.condition_tag;
}

json verdict_to_json(const Verdict& v) {
  json j{{"schema", kSchemaVersion}, {"family", v.family}, {"accepted", v.accepted}};
  j["condition_tag"] = v.accepted ? json(v.condition_tag) : json(nullptr);
  j["assignment"] = v.assignment;
  j["coloring"] = v.coloring ? coloring_to_json(*v.coloring) : json(nullptr);
  j["refutation"] = v.accepted ? json(nullptr) : json(v.refutation);
  j["refutation_kind"] = v.accepted ? json(nullptr) : json(v.refutation_kind);
  j["trace"] = v.trace;
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.family = j.at("family").get<std::string>();
  v.accepted = j.at("accepted").get<bool>();
  if (!j.at("condition_tag").is_null()) v.condition_tag = j.at("condition_tag").get<std::string>();
  v.assignment = j.at("assignment").get<std::map<std::string, std::string>>();
  if (!j.at("coloring").is_null()) v.coloring = coloring_from_json(j.at("coloring"));
  if (!j.at("refutation").is_null()) v.refutation = j.at("refutation").get<std::string>();
  if (!j.at("refutation_kind").is_null()) v.refutation_kind = j.at("refutation_kind").get<std::string>();
  v.trace = j.at("trace").get<std::vector<std::string>>();
  return v;
}

}  // namespace pg
