#include <algorithm>
#include <string>
#include <unordered_set>

#include "primegraph/graph.hpp"

namespace pg {

namespace {

// Pair (i, k), i < k, occupies sequence slot k*(k-1)/2 + i. Slot s is stored at
// bit L-1-s so that integer order equals lexicographic order of the sequence.
struct Minimizer {
  std::size_t n;
  std::size_t total;
  std::vector<std::uint64_t> rows;  // adjacency bitmask per original vertex
  std::vector<std::size_t> order, best_order;
  std::uint64_t best = 0;
  bool have_best = false;
  std::uint64_t used = 0;

  std::uint64_t prefix_mask(std::size_t k) const {
    // Bits for all pairs among the first k positions.
    const std::size_t slots = k * (k - 1) / 2;
    if (slots == 0) return 0;
    return ~std::uint64_t{0} << (total - slots) & mask_all();
  }
  std::uint64_t mask_all() const {
    return total == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << total) - 1);
  }

  void place(std::size_t k, std::uint64_t value) {
    if (k == n) {
      if (!have_best || value < best) {
        best = value;
        best_order = order;
        have_best = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      std::uint64_t next = value;
      for (std::size_t i = 0; i < k; ++i)
        if (rows[order[i]] >> v & 1) next |= std::uint64_t{1} << (total - 1 - (k * (k - 1) / 2 + i));
      if (have_best) {
        const auto m = prefix_mask(k + 1);
        if ((next & m) > (best & m)) continue;
      }
      order.push_back(v);
      used |= std::uint64_t{1} << v;
      place(k + 1, next);
      used &= ~(std::uint64_t{1} << v);
      order.pop_back();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kCanonicalCap)
    throw InputError("canonical form is capped at " + std::to_string(kCanonicalCap) + " vertices");
  Minimizer m{n, n * (n - (n > 0 ? 1 : 0)) / 2, std::vector<std::uint64_t>(n, 0), {}, {}, 0, false, 0};
  for (auto [i, j] : g.edge_indices()) {
    m.rows[i] |= std::uint64_t{1} << j;
    m.rows[j] |= std::uint64_t{1} << i;
  }
  m.place(0, 0);
  CanonicalForm out;
  out.n = n;
  out.bits = m.best;
  out.order = m.best_order;
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

Graph from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  Graph g(ids);
  const std::size_t total = n * (n - (n > 0 ? 1 : 0)) / 2;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = 0; i < k; ++i)
      if (bits >> (total - 1 - (k * (k - 1) / 2 + i)) & 1) g.add_edge(i, k);
  return g;
}

}  // namespace

void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n == 0 || n > kEnumerateCap)
    throw InputError("enumeration supports 1.." + std::to_string(kEnumerateCap) + " vertices");
  // Grow class representatives one vertex at a time: every graph on n vertices
  // is a representative on n-1 vertices plus one vertex with some neighborhood.
  std::vector<std::uint64_t> level{0};
  for (std::size_t m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> next;
    for (auto bits : level) {
      const Graph base = from_bits(m - 1, bits);
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (m - 1)); ++nb) {
        std::vector<std::string> ids = base.vertices();
        ids.push_back(std::to_string(m - 1));
        Graph g(ids);
        for (auto [i, j] : base.edge_indices()) g.add_edge(i, j);
        for (std::size_t i = 0; i + 1 < m; ++i)
          if (nb >> i & 1) g.add_edge(i, m - 1);
        const auto form = canonical_form(g);
        if (seen.insert(form.bits).second) next.push_back(form.bits);
      }
    }
    std::sort(next.begin(), next.end());
    level.swap(next);
  }
  for (auto bits : level) visit(from_bits(n, bits));
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace pg
