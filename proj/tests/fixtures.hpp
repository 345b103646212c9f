#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "primegraph/coloring.hpp"
#include "primegraph/graph.hpp"

namespace fx {

// Hand-entered example graphs (complement edges).
pg::Graph a7_clause_2_4();        // A7, clause 2.4, 22 vertices
pg::Graph psl35_clause_3();       // PSL(3,5), clause 3
pg::Graph psl35_bad_coloring();   // PSL(3,5) shape, boundary coloring impossible
pg::Graph m11_m12_shared();       // accepted by both M11 and M12
pg::Graph a5_clause_2_3();        // six vertices, A5 clause 2.3

pg::Graph from_edges(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges);
pg::Graph cycle(std::size_t n);
pg::Graph complete(std::size_t n);
pg::Graph empty(std::size_t n);

// Seeded generators for property tests.
pg::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);
pg::Graph relabel(const pg::Graph& g, const std::vector<std::size_t>& perm, const std::string& prefix = "v");
std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n);

// Brute-force oracles.
bool brute_3colorable(const pg::Graph& g, const std::vector<pg::VertexSet>& mono = {});
std::size_t brute_triangles(const pg::Graph& g);
std::size_t brute_classes(std::size_t n);  // labeled graphs deduplicated by canonical form

}  // namespace fx
