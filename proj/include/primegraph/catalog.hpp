#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "primegraph/graph.hpp"

namespace pg {

using Prime = std::uint64_t;
using PrimeSet = std::set<Prime>;
using Factorization = std::map<Prime, int>;

struct GroupFact {
  std::string name;
  Factorization order;               // empty for the generic PSL(2,q) row
  std::optional<int> out_order;
  std::optional<int> schur_order;
  std::map<Prime, bool> fc;          // true = Sylow subgroup satisfies the Frobenius criterion
  std::optional<Graph> complement;   // vertex ids are decimal primes
  std::string shape;
  std::vector<std::string> relevant_subgroups;
  std::string family;                // classifier family, empty when unclassified
  bool classified = false;
  bool generic = false;
  std::string note;

  PrimeSet primes() const;
};

struct CoverFact {
  std::string name;
  std::string base;
  int center_order = 1;
  bool central = true;
  std::vector<PrimeSet> vectors;
  bool vectors_complete = true;
  std::optional<Graph> complement;   // stored only where it cannot be derived
  std::string note;
};

struct ExtensionFact {
  std::string name;
  std::string alias;
  std::string base;
  Factorization order;
  Graph complement;
  std::vector<PrimeSet> vectors;
  bool vectors_complete = true;
  std::string note;
};

using CatalogRecord = std::variant<GroupFact, CoverFact, ExtensionFact>;

// Anything that can play the role of E in a construction.
struct Realizer {
  std::string name;
  std::string kind;  // group | cover | extension
  Factorization order;
  Graph complement;
  std::vector<PrimeSet> vectors;
  bool vectors_complete = true;

  PrimeSet primes() const;
};

class Catalog {
 public:
  static Catalog from_json_text(std::string_view text);

  const std::vector<GroupFact>& groups() const { return groups_; }
  const std::vector<CoverFact>& covers() const { return covers_; }
  const std::vector<ExtensionFact>& extensions() const { return extensions_; }

  // Group rows win over the trivial cover of the same name.
  CatalogRecord lookup(const std::string& name) const;
  const GroupFact& group(const std::string& name) const;
  bool has_group(const std::string& name) const;
  std::vector<CoverFact> covers_of(const std::string& base) const;
  Realizer realizer(const std::string& name) const;

  // Mutators for fault-injection tests.
  std::vector<GroupFact>& mutable_groups() { return groups_; }
  std::vector<CoverFact>& mutable_covers() { return covers_; }

  int schema = 0;
  std::string version;

 private:
  std::vector<GroupFact> groups_;
  std::vector<CoverFact> covers_;
  std::vector<ExtensionFact> extensions_;
};

// The embedded catalog, parsed once.
const Catalog& catalog();

// Shape tag of a four-vertex (or three-vertex) complement, or "other".
std::string shape_of(const Graph& g);

// Names every K4 row the catalog must carry.
const std::vector<std::string>& required_k4_groups();

std::vector<std::string> validate_catalog(const Catalog& c);

// Complement of a central extension: primes dividing the center become
// isolated, everything else matches the base group.
Graph central_cover_complement(const Graph& base, int center_order);

Graph prime_graph(const std::vector<std::pair<Prime, Prime>>& edges, const PrimeSet& primes);
std::string prime_id(Prime p);

}  // namespace pg
