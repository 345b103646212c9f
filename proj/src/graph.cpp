#include "primegraph/graph.hpp"

#include <algorithm>

namespace pg {

Graph::Graph(const std::vector<std::string>& vertices) {
  for (const auto& v : vertices) add_vertex(v);
}

Graph::Graph(const std::vector<std::string>& vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : Graph(vertices) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_vertex(const std::string& v) {
  if (v.empty()) throw InputError("empty vertex id");
  if (index_.count(v)) throw InputError("duplicate vertex id '" + v + "'");
  const std::size_t n = ids_.size();
  std::vector<std::uint8_t> next((n + 1) * (n + 1), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) next[i * (n + 1) + j] = adj_[i * n + j];
  adj_.swap(next);
  index_.emplace(v, n);
  ids_.push_back(v);
}

std::size_t Graph::index_of(const std::string& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InputError("unknown vertex id '" + v + "'");
  return it->second;
}

void Graph::add_edge(const std::string& u, const std::string& v) {
  add_edge(index_of(u), index_of(v));
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) throw InputError("self-loop at '" + ids_.at(i) + "'");
  const std::size_t n = ids_.size();
  adj_.at(i * n + j) = 1;
  adj_.at(j * n + i) = 1;
}

void Graph::remove_edge(std::size_t i, std::size_t j) {
  const std::size_t n = ids_.size();
  adj_.at(i * n + j) = 0;
  adj_.at(j * n + i) = 0;
}

bool Graph::adjacent(const std::string& u, const std::string& v) const {
  return adjacent(index_of(u), index_of(v));
}

std::size_t Graph::degree(std::size_t i) const {
  const std::size_t n = ids_.size();
  std::size_t d = 0;
  for (std::size_t j = 0; j < n; ++j) d += adj_[i * n + j];
  return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ids_.size(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

VertexSet Graph::neighbor_ids(const std::string& v) const {
  VertexSet out;
  for (auto j : neighbors(index_of(v))) out.insert(ids_[j]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_indices() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < ids_.size(); ++i)
    for (std::size_t j = i + 1; j < ids_.size(); ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [i, j] : edge_indices()) out.emplace_back(ids_[i], ids_[j]);
  return out;
}

std::size_t Graph::edge_count() const { return edge_indices().size(); }

bool Graph::operator==(const Graph& other) const {
  if (size() != other.size()) return false;
  for (const auto& v : ids_)
    if (!other.has_vertex(v)) return false;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (adjacent(i, j) != other.adjacent(ids_[i], ids_[j])) return false;
  return true;
}

Graph complement(const Graph& g) {
  Graph out(g.vertices());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!g.adjacent(i, j)) out.add_edge(i, j);
  return out;
}

std::vector<std::array<std::size_t, 3>> triangle_indices(const Graph& g) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (g.adjacent(i, k) && g.adjacent(j, k)) out.push_back({i, j, k});
    }
  return out;
}

std::vector<std::vector<std::string>> triangles(const Graph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& t : triangle_indices(g)) {
    std::vector<std::string> tri{g.id(t[0]), g.id(t[1]), g.id(t[2])};
    std::sort(tri.begin(), tri.end());
    out.push_back(tri);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<std::size_t> idx;
  for (const auto& v : s) idx.push_back(g.index_of(v));
  VertexSet out;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (auto i : idx)
      if (g.adjacent(i, j)) {
        out.insert(g.id(j));
        break;
      }
  return out;
}

Graph induced(const Graph& g, const VertexSet& keep) {
  std::vector<std::string> ids;
  for (const auto& v : g.vertices())
    if (keep.count(v)) ids.push_back(v);
  for (const auto& v : keep) g.index_of(v);
  Graph out(ids);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j])) out.add_edge(i, j);
  return out;
}

Graph remove_vertices(const Graph& g, const VertexSet& drop) {
  VertexSet keep;
  for (const auto& v : g.vertices())
    if (!drop.count(v)) keep.insert(v);
  return induced(g, keep);
}

bool is_triangle_free(const Graph& g) { return triangle_indices(g).empty(); }

bool is_complete(const Graph& g) {
  const std::size_t n = g.size();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool equal_under(const Graph& a, const Graph& b, const std::map<std::string, std::string>& rename) {
  if (a.size() != b.size() || rename.size() != a.size()) return false;
  VertexSet image;
  for (const auto& v : a.vertices()) {
    auto it = rename.find(v);
    if (it == rename.end() || !b.has_vertex(it->second)) return false;
    image.insert(it->second);
  }
  if (image.size() != a.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a.adjacent(i, j) != b.adjacent(rename.at(a.id(i)), rename.at(a.id(j)))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> components(const Graph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

}  // namespace pg
