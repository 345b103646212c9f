#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/catalog.hpp"
#include "primegraph/coloring.hpp"
#include "primegraph/graph.hpp"
#include "primegraph/io.hpp"

namespace pg {

struct Verdict {
  std::string family;          // group name or "solvable"
  bool accepted = false;
  std::string condition_tag;   // e.g. "A7:2.4", "PSLfam:3", "solvable"
  std::map<std::string, std::string> assignment;  // role -> vertex
  std::optional<Coloring> coloring;
  std::string refutation;
  // not-3-colorable | triangle | no-structural-match | coloring-constraint
  std::string refutation_kind;
  std::vector<std::string> trace;
};

enum class FamilyKind { Solvable, A7, M11, M12, PSLfam, Spoon, TriangleFree, G2_3, PSL34, U43, A5 };

// Throws InputError for unknown or unclassified names.
FamilyKind family_kind(const std::string& family);
// "solvable" followed by every classified catalog group, in catalog order.
std::vector<std::string> classified_families();
// Tag prefix for a family: "PSLfam", "spoon", "trianglefree", or the group name.
std::string tag_prefix(const std::string& family);

Verdict classify(const Graph& g, const std::string& family);
std::map<std::string, Verdict> classify_all(const Graph& g);

Verdict classify_solvable(const Graph& g);
Verdict classify_A7(const Graph& g);
Verdict classify_M11(const Graph& g);
Verdict classify_M12(const Graph& g);
Verdict classify_trianglefree_family(const Graph& g, const std::string& t);
Verdict classify_spoon_family(const Graph& g, const std::string& t);
Verdict classify_pslfam(const Graph& g, const std::string& t);
Verdict classify_G2_3(const Graph& g);
Verdict classify_PSL34(const Graph& g);
Verdict classify_U43(const Graph& g);
Verdict classify_A5(const Graph& g);

// Re-validates an accepting verdict's assignment and coloring against the
// clause it names. Returns an empty string on success, else the problem.
std::string recheck(const Graph& g, const Verdict& v);

// Role vertices X of an accepted verdict (empty for clause (1) and solvable).
VertexSet role_set(const Verdict& v);
// True when the clause colors only the graph minus X.
bool partial_coloring_clause(const std::string& tag);

json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

}  // namespace pg
