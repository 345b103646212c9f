#include "primegraph/cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "primegraph/catalog.hpp"
#include "primegraph/classify.hpp"
#include "primegraph/construct.hpp"
#include "primegraph/criteria.hpp"

namespace pg::cli {

namespace {

json order_json(const Factorization& f) {
  json j = json::object();
  for (const auto& [p, e] : f) j[prime_id(p)] = e;
  return j;
}

json edges_json(const Graph& g) {
  json j = json::array();
  for (const auto& [u, v] : g.edges()) j.push_back({u, v});
  return j;
}

json vectors_json(const std::vector<PrimeSet>& vs) {
  json j = json::array();
  for (const auto& v : vs) {
    json a = json::array();
    for (auto p : v) a.push_back(p);
    j.push_back(a);
  }
  return j;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream s;
  s << v.family << ": " << (v.accepted ? "accepted" : "rejected");
  if (v.accepted) {
    s << " (" << v.condition_tag << ")";
    for (const auto& [r, x] : v.assignment) s << " " << r << "=" << x;
    if (v.coloring) {
      s << " coloring";
      for (const auto& [x, c] : *v.coloring) s << " " << x << ":" << color_letter(c);
    }
  } else {
    s << " [" << v.refutation_kind << "] " << v.refutation;
  }
  return s.str();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

json catalog_record_json(const std::string& name) {
  const Catalog& cat = catalog();
  const CatalogRecord rec = cat.lookup(name);
  json j{{"schema", kSchemaVersion}};
  if (const auto* g = std::get_if<GroupFact>(&rec)) {
    j["kind"] = "group";
    j["name"] = g->name;
    j["order"] = order_json(g->order);
    j["out"] = g->out_order ? json(*g->out_order) : json(nullptr);
    j["schur"] = g->schur_order ? json(*g->schur_order) : json(nullptr);
    json fc = json::object();
    for (const auto& [p, f] : g->fc) fc[prime_id(p)] = f;
    j["fc"] = fc;
    j["shape"] = g->shape;
    j["complement"] = g->complement ? edges_json(*g->complement) : json(nullptr);
    j["relevant_subgroups"] = g->relevant_subgroups;
    j["family"] = g->family.empty() ? json(nullptr) : json(g->family);
    j["classified"] = g->classified;
    json covers = json::array();
    for (const auto& k : cat.covers())
      if (k.base == g->name) covers.push_back(k.name);
    j["covers"] = covers;
  } else if (const auto* k = std::get_if<CoverFact>(&rec)) {
    const Realizer r = cat.realizer(k->name);
    j["kind"] = "cover";
    j["name"] = k->name;
    j["base"] = k->base;
    j["center_order"] = k->center_order;
    j["central"] = k->central;
    j["vectors"] = vectors_json(k->vectors);
    j["vectors_complete"] = k->vectors_complete;
    j["complement"] = edges_json(r.complement);
  } else {
    const auto& x = std::get<ExtensionFact>(rec);
    j["kind"] = "extension";
    j["name"] = x.name;
    j["alias"] = x.alias.empty() ? json(nullptr) : json(x.alias);
    j["base"] = x.base;
    j["order"] = order_json(x.order);
    j["complement"] = edges_json(x.complement);
    j["vectors"] = vectors_json(x.vectors);
    j["vectors_complete"] = x.vectors_complete;
  }
  return j;
}

std::map<std::size_t, std::map<std::string, FamilyCounts>> enumerate_report(
    std::size_t max_vertices, const std::vector<std::string>& families, bool roundtrip, std::size_t sample,
    std::uint64_t seed, std::size_t min_vertices) {
  if (max_vertices > 7) throw InputError("enumerate supports at most 7 vertices");
  if (min_vertices < 1) min_vertices = 1;
  for (const auto& f : families) family_kind(f);
  std::map<std::size_t, std::map<std::string, FamilyCounts>> report;
  std::mt19937_64 rng(seed);
  for (std::size_t n = min_vertices; n <= max_vertices; ++n) {
    auto graphs = enumerate_graphs(n);
    if (sample > 0 && sample < graphs.size()) {
      std::vector<std::size_t> idx(graphs.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(sample);
      std::sort(idx.begin(), idx.end());
      std::vector<Graph> picked;
      for (auto i : idx) picked.push_back(graphs[i]);
      graphs.swap(picked);
    }
    auto& row = report[n];
    for (const auto& g : graphs) {
      const bool solv = classify_solvable(g).accepted;
      for (const auto& f : families) {
        auto& c = row[f];
        ++c.classes;
        const Verdict v = classify(g, f);
        if (v.accepted) ++c.accepted;
        if (solv && !v.accepted) ++c.containment_violations;
        if (roundtrip && v.accepted) {
          const RoundTrip rt = verify_roundtrip(g, f);
          if (rt.status == "pass") ++c.roundtrip_pass;
          else if (rt.status == "pending") ++c.roundtrip_pending;
          else ++c.roundtrip_fail;
        }
      }
    }
  }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"prime graph complement classifier and group blueprint builder", "primegraph"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  std::uint64_t seed = 1;
  app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "seed for sampled suites");

  bool as_prime_graph = false;
  bool as_complement = true;
  auto graph_flags = [&](CLI::App* sub) {
    sub->add_flag("--as-complement", as_complement, "input lists complement edges (default)");
    sub->add_flag("--as-prime-graph", as_prime_graph, "input lists prime graph edges");
  };

  std::string family, graph_path, blueprint_path, name;
  auto* c_classify = app.add_subcommand("classify", "decide realizability for one family or all");
  c_classify->add_option("--family", family, "group name, solvable, or all")->required();
  c_classify->add_option("graph", graph_path, "graph file")->required();
  graph_flags(c_classify);

  auto* c_construct = app.add_subcommand("construct", "emit a blueprint for an accepted graph");
  c_construct->add_option("--family", family, "group name or solvable")->required();
  c_construct->add_option("graph", graph_path, "graph file")->required();
  graph_flags(c_construct);

  auto* c_round = app.add_subcommand("roundtrip", "classify, construct, evaluate and compare");
  c_round->add_option("--family", family, "group name or solvable")->required();
  c_round->add_option("graph", graph_path, "graph file")->required();
  graph_flags(c_round);

  auto* c_verify = app.add_subcommand("verify-blueprint", "evaluate a blueprint and compare with a graph");
  c_verify->add_option("blueprint", blueprint_path, "blueprint JSON")->required();
  c_verify->add_option("graph", graph_path, "graph file")->required();
  graph_flags(c_verify);

  std::size_t max_vertices = 0, min_vertices = 1, sample = 0;
  std::vector<std::string> families;
  bool roundtrip = false;
  auto* c_enum = app.add_subcommand("enumerate", "per-family acceptance counts over all small graphs");
  c_enum->add_option("--max-vertices", max_vertices, "largest vertex count (at most 7)")->required();
  c_enum->add_option("--min-vertices", min_vertices, "smallest vertex count");
  c_enum->add_option("--family", families, "families to test (default: all)");
  c_enum->add_option("--sample", sample, "visit this many random classes per size");
  c_enum->add_flag("--roundtrip", roundtrip, "also construct and evaluate every accepted class");

  auto* c_criteria = app.add_subcommand("criteria", "boundary report for a group");
  c_criteria->add_option("group", name, "group name")->required();

  auto* c_catalog = app.add_subcommand("catalog", "inspect the embedded catalog");
  c_catalog->require_subcommand(1);
  auto* c_show = c_catalog->add_subcommand("show", "dump one record");
  c_show->add_option("name", name, "record name")->required();
  auto* c_validate = c_catalog->add_subcommand("validate", "cross-check the catalog");
  auto* c_list = c_catalog->add_subcommand("list", "list record names");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (as_prime_graph) as_complement = false;
  const bool text = output == "text";

  try {
    if (c_classify->parsed()) {
      const Graph g = read_graph_file(graph_path, as_complement);
      if (family == "all") {
        const auto all = classify_all(g);
        if (text) {
          for (const auto& f : classified_families()) out << verdict_text(all.at(f)) << "\n";
        } else {
          json j{{"schema", kSchemaVersion}};
          json verdicts = json::object();
          for (const auto& [f, v] : all) verdicts[f] = verdict_to_json(v);
          j["verdicts"] = verdicts;
          emit(out, j);
        }
        return 0;
      }
      const Verdict v = classify(g, family);
      if (text) out << verdict_text(v) << "\n";
      else emit(out, verdict_to_json(v));
      return v.accepted ? 0 : 1;
    }
    if (c_construct->parsed()) {
      const Graph g = read_graph_file(graph_path, as_complement);
      const Verdict v = classify(g, family);
      if (!v.accepted) {
        if (text) out << verdict_text(v) << "\n";
        else emit(out, verdict_to_json(v));
        return 1;
      }
      try {
        const Blueprint b = construct(g, v);
        if (text) {
          out << b.condition_tag << " via " << (b.extension.empty() ? "trivial E" : b.extension) << "\n";
          for (const auto& [u, p] : b.vertex_primes()) out << "  " << u << " -> " << p << "\n";
          for (auto t : b.post_products) out << "  x C_" << t << "\n";
        } else {
          emit(out, blueprint_to_json(b));
        }
        return 0;
      } catch (const ConstructError& e) {
        json j{{"schema", kSchemaVersion}, {"status", e.kind()}, {"message", e.what()}};
        if (text) out << e.kind() << ": " << e.what() << "\n";
        else emit(out, j);
        return 1;
      }
    }
    if (c_round->parsed()) {
      const Graph g = read_graph_file(graph_path, as_complement);
      const RoundTrip r = verify_roundtrip(g, family);
      if (text) out << family << ": " << r.status << (r.message.empty() ? "" : " (" + r.message + ")") << "\n";
      else emit(out, roundtrip_to_json(r));
      return r.status == "pass" ? 0 : 1;
    }
    if (c_verify->parsed()) {
      const Graph g = read_graph_file(graph_path, as_complement);
      json bj;
      try {
        bj = json::parse(read_text_file(blueprint_path));
      } catch (const json::parse_error& e) {
        throw InputError(std::string("blueprint JSON: ") + e.what());
      }
      const Blueprint b = blueprint_from_json(bj);
      std::string status = "pass", message;
      json evaluated = nullptr;
      try {
        const Graph ev = evaluate_blueprint(b);
        evaluated = graph_to_json(ev);
        message = compare_evaluation(g, b, ev);
        if (!message.empty()) status = "fail";
      } catch (const InputError& e) {
        status = "fail";
        message = e.what();
      }
      if (text) out << status << (message.empty() ? "" : ": " + message) << "\n";
      else emit(out, {{"schema", kSchemaVersion}, {"status", status}, {"message", message}, {"evaluated", evaluated}});
      return status == "pass" ? 0 : 1;
    }
    if (c_enum->parsed()) {
      if (families.empty()) families = classified_families();
      const auto rep = enumerate_report(max_vertices, families, roundtrip, sample, seed, min_vertices);
      if (text) {
        for (const auto& [n, row] : rep)
          for (const auto& f : families) {
            const auto& c = row.at(f);
            out << "n=" << n << " " << f << " accepted " << c.accepted << "/" << c.classes
                << " containment-violations " << c.containment_violations;
            if (roundtrip)
              out << " roundtrip pass " << c.roundtrip_pass << " pending " << c.roundtrip_pending << " fail "
                  << c.roundtrip_fail;
            out << "\n";
          }
      } else {
        json rows = json::array();
        for (const auto& [n, row] : rep)
          for (const auto& f : families) {
            const auto& c = row.at(f);
            json r{{"vertices", n},
                   {"family", f},
                   {"classes", c.classes},
                   {"accepted", c.accepted},
                   {"containment_violations", c.containment_violations}};
            if (roundtrip) {
              r["roundtrip_pass"] = c.roundtrip_pass;
              r["roundtrip_pending"] = c.roundtrip_pending;
              r["roundtrip_fail"] = c.roundtrip_fail;
            }
            rows.push_back(r);
          }
        emit(out, {{"schema", kSchemaVersion}, {"seed", seed}, {"sample", sample}, {"rows", rows}});
      }
      return 0;
    }
    if (c_criteria->parsed()) {
      const BoundaryReport r = boundary(name);
      if (text) {
        out << r.group << " allowed {";
        bool first = true;
        for (auto p : r.allowed) out << (first ? "" : ",") << p, first = false;
        out << "} forbidden";
        for (const auto& [p, tag] : r.forbidden) out << " " << p << ":" << tag;
        out << "\n";
      } else {
        emit(out, boundary_to_json(r));
      }
      return 0;
    }
    if (c_show->parsed()) {
      const json j = catalog_record_json(name);
      if (text) out << j.dump() << "\n";
      else emit(out, j);
      return 0;
    }
    if (c_validate->parsed()) {
      const auto v = validate_catalog(catalog());
      if (text) {
        out << v.size() << " violations\n";
        for (const auto& s : v) out << "  " << s << "\n";
      } else {
        emit(out, {{"schema", kSchemaVersion}, {"version", catalog().version}, {"violations", v}});
      }
      return v.empty() ? 0 : 1;
    }
    if (c_list->parsed()) {
      const Catalog& cat = catalog();
      json j{{"schema", kSchemaVersion}};
      json g = json::array(), k = json::array(), x = json::array();
      for (const auto& r : cat.groups()) g.push_back(r.name);
      for (const auto& r : cat.covers()) k.push_back(r.name);
      for (const auto& r : cat.extensions()) x.push_back(r.name);
      j["groups"] = g;
      j["covers"] = k;
      j["extensions"] = x;
      if (text) out << j.dump() << "\n";
      else emit(out, j);
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pg::cli
