#include "fixtures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fx {

using pg::Graph;

namespace {

std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& s) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    out.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Graph from_edges(const std::vector<std::string>& vertices,
                 const std::vector<std::pair<std::string, std::string>>& edges) {
  return Graph(vertices, edges);
}

Graph a7_clause_2_4() {
  return from_edges(
      words("2 3 5 7 r1 r2 r3 r4 r5 r6 q1 q2 q3 q4 q5 q6 p1 p2 p3 p4 p5 p6"),
      parse_pairs("3-5 5-7 3-7 5-r1 5-r2 2-r1 2-r2 2-r3 7-r5 7-r6 q2-r2 p1-q4 p1-q2 p6-q4 q4-r6 q6-r6 "
                  "q1-r2 p3-q4 q5-r6 p2-r1 q1-r1 p1-q1 q3-r4 p5-r6 p2-q2 p3-q3 p4-q5 p6-q6"));
}

Graph psl35_clause_3() {
  return from_edges(words("31 5 3 2 r1 r2 r3 r4 r5 r6 q2 q3 q4 q5 p2 p3 p4 p5 p6"),
                    parse_pairs("31-3 31-5 3-5 31-2 31-r1 31-r3 31-r6 q2-r2 q2-r1 p6-q4 q4-r6 p3-q4 q5-r6 "
                                "q3-r4 p5-r6 p3-q3 p4-q5 p2-q2 q2-r3 p3-q2"));
}

Graph psl35_bad_coloring() {
  return from_edges(words("31 5 3 2 r1 r2 r3 r4 r5 p1 p2 p3 p4 p5"),
                    parse_pairs("31-5 31-3 5-3 31-2 31-r1 31-r2 31-r3 31-r4 31-r5 p1-r1 p2-r2 p3-r3 p4-r4 "
                                "p5-r5 p1-p2 p2-p3 p3-p4 p4-p5 p5-p1"));
}

Graph m11_m12_shared() {
  return from_edges(words("5 x 11 y r1 r2 r3 r4 r5 r6 q2 q3 q4 q5 p3 p4 p5"),
                    parse_pairs("5-11 5-x 11-x 5-r2 5-r4 5-r5 5-r6 q2-r3 q3-r3 p3-q4 q3-r4 p3-q2 q4-r4 "
                                "q5-r6 p4-q5 p3-q3 p4-q4 p4-r5 p5-q5 q5-r4"));
}

Graph a5_clause_2_3() {
  return from_edges(words("a b c d e f"), parse_pairs("b-c c-d b-d b-e c-e d-f"));
}

Graph cycle(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  Graph g(ids);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(std::size_t n) {
  Graph g = empty(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return Graph(ids);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g = empty(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph relabel(const Graph& g, const std::vector<std::size_t>& perm, const std::string& prefix) {
  // Vertex i of g becomes prefix+perm[i]; ids are listed in new-index order.
  std::vector<std::string> ids(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) ids[perm[i]] = prefix + std::to_string(perm[i]);
  Graph h(ids);
  for (auto [i, j] : g.edge_indices()) h.add_edge(perm[i], perm[j]);
  return h;
}

bool brute_3colorable(const Graph& g, const std::vector<pg::VertexSet>& mono) {
  const std::size_t n = g.size();
  std::vector<int> col(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  const auto edges = g.edge_indices();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    bool ok = true;
    for (auto [i, j] : edges)
      if (col[i] == col[j]) {
        ok = false;
        break;
      }
    for (std::size_t k = 0; ok && k < mono.size(); ++k) {
      int seen = -1;
      for (const auto& v : mono[k]) {
        const int cv = col[g.index_of(v)];
        if (seen >= 0 && cv != seen) ok = false;
        seen = cv;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::size_t brute_triangles(const Graph& g) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k)
        if (g.adjacent(i, j) && g.adjacent(j, k) && g.adjacent(i, k)) ++count;
  return count;
}

std::size_t brute_classes(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> forms;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = empty(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if (mask >> bit & 1) g.add_edge(i, j);
    forms.insert(pg::canonical_form(g).bits);
  }
  return forms.size();
}

}  // namespace fx
