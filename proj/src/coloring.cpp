#include "primegraph/coloring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace pg {

char color_letter(Color c) {
  switch (c) {
    case Color::O: return 'O';
    case Color::D: return 'D';
    case Color::I: return 'I';
  }
  return '?';
}

Color color_from_letter(char c) {
  switch (c) {
    case 'O': return Color::O;
    case 'D': return Color::D;
    case 'I': return Color::I;
    default: throw InputError(std::string("bad color letter '") + c + "'");
  }
}

bool is_proper(const Graph& g, const Coloring& c) {
  for (const auto& v : g.vertices())
    if (!c.count(v)) return false;
  for (const auto& [u, v] : g.edges())
    if (c.at(u) == c.at(v)) return false;
  return true;
}

bool satisfies(const Graph& g, const Coloring& c, const std::vector<VertexSet>& mono_sets,
               const Coloring& fixed) {
  if (!is_proper(g, c)) return false;
  for (const auto& s : mono_sets) {
    std::optional<Color> seen;
    for (const auto& v : s) {
      if (seen && c.at(v) != *seen) return false;
      seen = c.at(v);
    }
  }
  for (const auto& [v, col] : fixed)
    if (c.at(v) != col) return false;
  return true;
}

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Search {
  std::size_t k = 0;                               // number of classes
  std::vector<std::vector<std::size_t>> adj;       // quotient adjacency
  std::vector<int> fixed;                          // -1 or color
  std::vector<std::size_t> order;
  std::vector<int> color;
  bool symmetric = true;

  bool run(std::size_t pos, int max_used) {
    if (pos == order.size()) return true;
    const auto c = order[pos];
    unsigned allowed = 0b111;
    if (fixed[c] >= 0) allowed = 1u << fixed[c];
    for (auto w : adj[c])
      if (color[w] >= 0) allowed &= ~(1u << color[w]);
    const int limit = symmetric ? std::min(2, max_used + 1) : 2;
    for (int col = 0; col <= limit; ++col) {
      if (!(allowed >> col & 1)) continue;
      color[c] = col;
      if (forward_ok(c) && run(pos + 1, std::max(max_used, col))) return true;
      color[c] = -1;
    }
    return false;
  }

  // Every uncolored neighbor of c still has a color left.
  bool forward_ok(std::size_t c) const {
    for (auto w : adj[c]) {
      if (color[w] >= 0) continue;
      unsigned allowed = fixed[w] >= 0 ? (1u << fixed[w]) : 0b111;
      for (auto x : adj[w])
        if (color[x] >= 0) allowed &= ~(1u << color[x]);
      if (!allowed) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<Coloring> find_3coloring(const Graph& g, const std::vector<VertexSet>& mono_sets,
                                       const Coloring& fixed) {
  const std::size_t n = g.size();
  Dsu dsu(n);
  for (const auto& s : mono_sets) {
    std::optional<std::size_t> first;
    for (const auto& v : s) {
      const auto i = g.index_of(v);
      if (first) dsu.unite(*first, i);
      else first = i;
    }
  }
  std::vector<std::size_t> cls(n);
  std::vector<std::size_t> rep_to_cls(n, n);
  Search s;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = dsu.find(i);
    if (rep_to_cls[r] == n) rep_to_cls[r] = s.k++;
    cls[i] = rep_to_cls[r];
  }
  s.adj.assign(s.k, {});
  s.fixed.assign(s.k, -1);
  for (const auto& [v, col] : fixed) {
    const auto c = cls[g.index_of(v)];
    const int want = static_cast<int>(col);
    if (s.fixed[c] >= 0 && s.fixed[c] != want) return std::nullopt;
    s.fixed[c] = want;
  }
  s.symmetric = fixed.empty();
  for (auto [i, j] : g.edge_indices()) {
    const auto a = cls[i], b = cls[j];
    if (a == b) return std::nullopt;
    s.adj[a].push_back(b);
    s.adj[b].push_back(a);
  }
  for (auto& a : s.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  s.order.resize(s.k);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](std::size_t a, std::size_t b) { return s.adj[a].size() > s.adj[b].size(); });
  s.color.assign(s.k, -1);
  if (!s.run(0, -1)) return std::nullopt;
  Coloring out;
  for (std::size_t i = 0; i < n; ++i) out[g.id(i)] = static_cast<Color>(s.color[cls[i]]);
  return out;
}

bool orients(const Orientation& o, const Graph& g) {
  if (o.vertices.size() != g.size()) return false;
  for (const auto& v : o.vertices)
    if (!g.has_vertex(v)) return false;
  if (o.arcs.size() != g.edge_count()) return false;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [u, v] : o.arcs) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || !g.adjacent(u, v)) return false;
    auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

namespace {

struct Digraph {
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> out, in;
  explicit Digraph(const Orientation& o) {
    for (const auto& v : o.vertices) index.emplace(v, index.size());
    out.assign(index.size(), {});
    in.assign(index.size(), {});
  }
  void add(std::size_t a, std::size_t b) {
    out[a].push_back(b);
    in[b].push_back(a);
  }
  bool reaches(std::size_t from, std::size_t to) const {
    std::vector<char> seen(out.size(), 0);
    std::vector<std::size_t> stack{from};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      if (seen[v]) continue;
      seen[v] = 1;
      for (auto w : out[v]) stack.push_back(w);
    }
    return false;
  }
};

}  // namespace

bool has_3path(const Orientation& o) {
  Digraph d(o);
  for (const auto& [u, v] : o.arcs) d.add(d.index.at(u), d.index.at(v));
  // Middle arc v->w, then some u->v and w->x with all four vertices distinct.
  for (std::size_t v = 0; v < d.out.size(); ++v)
    for (auto w : d.out[v])
      for (auto u : d.in[v]) {
        if (u == w) continue;
        for (auto x : d.out[w])
          if (x != u && x != v) return true;
      }
  return false;
}

Coloring ghrv_coloring(const Orientation& o) {
  if (has_3path(o)) throw InputError("orientation has a directed 3-path");
  Digraph d(o);
  for (const auto& [u, v] : o.arcs) {
    const auto a = d.index.at(u), b = d.index.at(v);
    if (!d.reaches(b, a)) d.add(a, b);
  }
  const std::size_t n = d.out.size();
  std::vector<int> layer(n, -1);
  // The kept arcs are acyclic, so memoized DFS terminates.
  std::function<int(std::size_t)> depth = [&](std::size_t v) -> int {
    if (layer[v] >= 0) return layer[v];
    int best = 0;
    for (auto w : d.out[v]) best = std::max(best, depth(w) + 1);
    return layer[v] = std::min(best, 2);
  };
  Coloring c;
  for (const auto& [v, i] : d.index) {
    const int l = depth(i);
    c[v] = l == 0 ? Color::I : (l == 1 ? Color::D : Color::O);
  }
  return c;
}

Orientation class_orientation(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw InputError("class orientation needs a proper coloring");
  Orientation o;
  o.vertices = g.vertices();
  for (const auto& [u, v] : g.edges()) {
    if (c.at(u) < c.at(v)) o.arcs.emplace_back(u, v);
    else o.arcs.emplace_back(v, u);
  }
  return o;
}

}  // namespace pg
