#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/graph.hpp"

namespace pg {

// O < D < I is also the orientation order used by class_orientation.
enum class Color { O = 0, D = 1, I = 2 };

using Coloring = std::map<std::string, Color>;

char color_letter(Color c);
Color color_from_letter(char c);

// Arcs as (tail, head) ids. Validation against a graph is separate so that an
// orientation can be built incrementally.
struct Orientation {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arcs;
};

bool is_proper(const Graph& g, const Coloring& c);
// Proper on g and every mono set is single-colored.
bool satisfies(const Graph& g, const Coloring& c, const std::vector<VertexSet>& mono_sets,
               const Coloring& fixed = {});

// Complete search. Mono sets are merged before branching, so "same color"
// constraints shrink the problem instead of filtering leaves.
std::optional<Coloring> find_3coloring(const Graph& g, const std::vector<VertexSet>& mono_sets = {},
                                       const Coloring& fixed = {});

bool orients(const Orientation& o, const Graph& g);
bool has_3path(const Orientation& o);

// Layer = longest directed path leaving v, capped at 2; layer 0 -> I,
// 1 -> D, 2 -> O. Paths are measured inside a maximal acyclic sub-orientation
// (arcs kept in listed order), which agrees with the plain definition whenever
// the orientation is acyclic.
Coloring ghrv_coloring(const Orientation& o);

Orientation class_orientation(const Graph& g, const Coloring& c);

}  // namespace pg
