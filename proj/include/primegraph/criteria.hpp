#pragma once

#include <map>
#include <string>
#include <vector>

#include "primegraph/catalog.hpp"
#include "primegraph/io.hpp"

namespace pg {

// Which primes of pi(T) may carry complement edges to primes outside pi(T).
struct BoundaryReport {
  std::string group;
  std::map<Prime, std::string> forbidden;  // prime -> "FC" | "SCHUR"
  PrimeSet allowed;
  std::vector<std::string> trace;
};

// Sylow r-subgroup fails the Frobenius criterion.
bool fc_rule(const GroupFact& t, Prime r);
// r odd, coprime to |M(T)|, and in every vector of every central cover.
// Groups without cover rows never fire (no data to quantify over).
bool schur_rule(const Catalog& cat, const GroupFact& t, Prime r, std::string* why = nullptr);

bool fc_rule(const std::string& group, Prime r);
bool schur_rule(const std::string& group, Prime r);

BoundaryReport boundary(const Catalog& cat, const std::string& group);
BoundaryReport boundary(const std::string& group);

json boundary_to_json(const BoundaryReport& r);

}  // namespace pg
