#include "primegraph/io.hpp"

#include <fstream>
#include <sstream>

namespace pg {

namespace {

Graph finish(Graph g, bool complement_semantics) {
  return complement_semantics ? g : complement(g);
}

}  // namespace

Graph parse_graph_json(std::string_view text, bool as_complement) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices")) throw InputError("graph JSON needs a \"vertices\" array");
  bool complement_semantics = as_complement;
  const json* edges = nullptr;
  if (j.contains("complement_edges")) {
    edges = &j.at("complement_edges");
    complement_semantics = true;
  } else if (j.contains("edges")) {
    edges = &j.at("edges");
  }
  try {
    Graph g(j.at("vertices").get<std::vector<std::string>>());
    if (edges)
      for (const auto& e : *edges) {
        if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: every edge is a pair of ids");
        g.add_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>());
      }
    return finish(std::move(g), complement_semantics);
  } catch (const json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
}

Graph parse_edge_list(std::string_view text, bool as_complement) {
  Graph g;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() > 2) throw InputError("edge list line " + std::to_string(lineno) + ": expected one or two ids");
    for (const auto& t : tok)
      if (!g.has_vertex(t)) g.add_vertex(t);
    if (tok.size() == 2) {
      if (tok[0] == tok[1]) throw InputError("edge list line " + std::to_string(lineno) + ": self-loop");
      g.add_edge(tok[0], tok[1]);
    }
  }
  return finish(std::move(g), as_complement);
}

Graph parse_graph(std::string_view text, bool as_complement) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_graph_json(text, as_complement);
  return parse_edge_list(text, as_complement);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Graph read_graph_file(const std::string& path, bool as_complement) {
  return parse_graph(read_text_file(path), as_complement);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"schema", kSchemaVersion}, {"vertices", g.vertices()}, {"complement_edges", edges}};
}

std::string graph_to_edge_list(const Graph& g) {
  std::string out;
  std::set<std::string> touched;
  for (const auto& [u, v] : g.edges()) {
    out += u + " " + v + "\n";
    touched.insert(u);
    touched.insert(v);
  }
  for (const auto& v : g.vertices())
    if (!touched.count(v)) out += v + "\n";
  return out;
}

json coloring_to_json(const Coloring& c) {
  json j = json::object();
  for (const auto& [v, col] : c) j[v] = std::string(1, color_letter(col));
  return j;
}

Coloring coloring_from_json(const json& j) {
  Coloring c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto s = it.value().get<std::string>();
    if (s.size() != 1) throw InputError("bad color '" + s + "'");
    c[it.key()] = color_from_letter(s[0]);
  }
  return c;
}

}  // namespace pg
