#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pg {

// Raised for malformed input: unknown vertex ids, self-loops, size caps.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexSet = std::set<std::string>;

// Undirected simple graph over opaque string ids. Every graph handled by the
// library is a prime graph complement; the edge set is the complement's.
class Graph {
 public:
  Graph() = default;
  explicit Graph(const std::vector<std::string>& vertices);
  Graph(const std::vector<std::string>& vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  void add_vertex(const std::string& v);
  void add_edge(const std::string& u, const std::string& v);
  void add_edge(std::size_t i, std::size_t j);
  void remove_edge(std::size_t i, std::size_t j);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& vertices() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  bool has_vertex(const std::string& v) const { return index_.count(v) != 0; }
  std::size_t index_of(const std::string& v) const;

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * ids_.size() + j] != 0; }
  bool adjacent(const std::string& u, const std::string& v) const;
  std::size_t degree(std::size_t i) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  VertexSet neighbor_ids(const std::string& v) const;

  // Edges as (i, j) with i < j, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edge_indices() const;
  std::vector<std::pair<std::string, std::string>> edges() const;
  std::size_t edge_count() const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint8_t> adj_;
};

Graph complement(const Graph& g);

// All 3-cliques, each as sorted vertex indices, in lexicographic order.
std::vector<std::array<std::size_t, 3>> triangle_indices(const Graph& g);
std::vector<std::vector<std::string>> triangles(const Graph& g);

// Vertices with at least one neighbor in S. Members of S appear only when
// adjacent to another member.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

Graph induced(const Graph& g, const VertexSet& keep);
Graph remove_vertices(const Graph& g, const VertexSet& drop);
bool is_triangle_free(const Graph& g);
bool is_complete(const Graph& g);

// Same edge relation after renaming ids through `rename`; throws if the map is
// not a bijection onto the other graph's ids.
bool equal_under(const Graph& a, const Graph& b, const std::map<std::string, std::string>& rename);

// Connected components as index lists, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> components(const Graph& g);

struct CanonicalForm {
  std::uint64_t bits = 0;           // upper-triangle adjacency after relabeling
  std::size_t n = 0;
  std::vector<std::size_t> order;   // order[k] = original index placed at position k
  bool operator==(const CanonicalForm& o) const { return n == o.n && bits == o.bits; }
};

inline constexpr std::size_t kCanonicalCap = 10;
inline constexpr std::size_t kEnumerateCap = 8;

CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class on n vertices, ids "0".."n-1".
std::vector<Graph> enumerate_graphs(std::size_t n);
void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& visit);

}  // namespace pg
