#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/catalog.hpp"
#include "primegraph/classify.hpp"
#include "primegraph/io.hpp"
#include "primegraph/primes.hpp"

namespace pg {

// Symbolic G = J x| (E x K) with K = Q x| P, followed by direct products with
// cyclic groups. Vertex ids refer to the (possibly augmented) input graph.
struct Blueprint {
  std::string family;
  std::string condition_tag;
  std::string extension;                       // catalog name of E; empty = trivial
  std::map<std::string, Prime> phi;            // X vertex -> prime of E
  std::map<std::string, BigInt> o_primes;
  std::map<std::string, BigInt> d_primes;
  std::map<std::string, BigInt> i_primes;
  std::vector<std::pair<std::string, std::string>> frobenius_edges;  // (tail, head)
  std::map<std::string, PrimeSet> rep_choice;  // I-vertex -> fixed-point vector
  std::vector<Prime> post_products;            // C_p factors, applied in order
  std::vector<std::pair<std::string, std::string>> augmented_edges;  // added before the products

  // Every vertex of the input graph with its prime.
  std::map<std::string, BigInt> vertex_primes() const;
};

class ConstructError : public std::runtime_error {
 public:
  ConstructError(const std::string& kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  // no-matching-vector | pending | unsupported | prime-search
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// One way of realizing a clause: E and, for product recipes, the prime t whose
// vertex is isolated by a final direct product with C_t.
struct Recipe {
  std::string extension;
  std::optional<Prime> isolate;
};

std::vector<Recipe> recipes_for(const Verdict& v);

// Direct mode: phi maps X onto the complement of E.
Blueprint build_blueprint(const Graph& g, const Verdict& v, const std::string& extension);
// Augment, build directly on the augmented graph, then append C_t.
Blueprint build_via_product(const Graph& g, const Verdict& v, const std::string& extension, Prime t);
// Tries the recipes in order. Throws ConstructError("pending") when every
// recipe fails and a failure involved incomplete vector data.
Blueprint construct(const Graph& g, const Verdict& v);

// Checks distinctness, congruences and vector membership. Empty = fine.
std::vector<std::string> check_blueprint(const Blueprint& b);

// Prime-labeled complement of the blueprint's group. Throws InputError when
// an invariant is violated.
Graph evaluate_blueprint(const Blueprint& b);

// Complement of the prime graph of a direct product.
Graph product_complement(const Graph& g1, const Graph& g2);

struct RoundTrip {
  std::string family;
  Verdict verdict;
  std::string status;   // pass | fail | pending | rejected
  std::string message;
  std::optional<Blueprint> blueprint;
  std::optional<Graph> evaluated;
};

// Compare an evaluated graph with g through the blueprint's vertex primes,
// and by canonical form when small enough.
std::string compare_evaluation(const Graph& g, const Blueprint& b, const Graph& evaluated);

RoundTrip verify_roundtrip(const Graph& g, const std::string& family);

json blueprint_to_json(const Blueprint& b);
Blueprint blueprint_from_json(const json& j);
json roundtrip_to_json(const RoundTrip& r);

}  // namespace pg
