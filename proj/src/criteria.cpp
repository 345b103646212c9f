#include "primegraph/criteria.hpp"

#include <numeric>

namespace pg {

namespace {

void require_prime(const GroupFact& t, Prime r) {
  if (!t.order.count(r)) throw InputError(std::to_string(r) + " does not divide |" + t.name + "|");
}

std::string vec_str(const PrimeSet& v) {
  std::string s = "(";
  for (auto p : v) s += (s.size() > 1 ? "," : "") + std::to_string(p);
  return s + ")";
}

}  // namespace

bool fc_rule(const GroupFact& t, Prime r) {
  require_prime(t, r);
  auto it = t.fc.find(r);
  if (it == t.fc.end()) throw InputError("no FC flag for " + std::to_string(r) + " in " + t.name);
  return !it->second;
}

bool schur_rule(const Catalog& cat, const GroupFact& t, Prime r, std::string* why) {
  require_prime(t, r);
  auto say = [&](const std::string& s) {
    if (why) *why = s;
  };
  if (r == 2) {
    say("2 is even");
    return false;
  }
  if (!t.schur_order) {
    say("no multiplier order on record");
    return false;
  }
  if (std::gcd<Prime, Prime>(r, static_cast<Prime>(*t.schur_order)) != 1) {
    say(std::to_string(r) + " divides |M| = " + std::to_string(*t.schur_order));
    return false;
  }
  bool any = false;
  for (const auto& k : cat.covers()) {
    if (k.base != t.name || !k.central) continue;
    any = true;
    for (const auto& v : k.vectors)
      if (!v.count(r)) {
        say(k.name + " has vector " + vec_str(v) + " without " + std::to_string(r));
        return false;
      }
  }
  if (!any) {
    say("no cover data");
    return false;
  }
  say("every central cover vector contains " + std::to_string(r));
  return true;
}

bool fc_rule(const std::string& group, Prime r) { return fc_rule(catalog().group(group), r); }

bool schur_rule(const std::string& group, Prime r) {
  return schur_rule(catalog(), catalog().group(group), r);
}

BoundaryReport boundary(const Catalog& cat, const std::string& group) {
  const GroupFact& t = cat.group(group);
  if (!t.classified) throw InputError(group + " is not classified");
  if (t.fc.empty()) throw InputError(group + " has no Frobenius criterion data");
  BoundaryReport rep;
  rep.group = t.name;
  for (auto r : t.primes()) {
    const bool fc = fc_rule(t, r);
    std::string why;
    const bool schur = schur_rule(cat, t, r, &why);
    const std::string p = std::to_string(r);
    rep.trace.push_back(p + ": FC " + (fc ? "fires (Sylow subgroup fails the criterion)" : "silent"));
    rep.trace.push_back(p + ": SCHUR " + (schur ? "fires" : "silent") + " (" + why + ")");
    if (fc) rep.forbidden[r] = "FC";
    else if (schur) rep.forbidden[r] = "SCHUR";
    else rep.allowed.insert(r);
  }
  for (const auto& k : cat.covers())
    if (k.base == t.name && !k.central) rep.trace.push_back(k.name + " skipped: not a central extension");
  return rep;
}

BoundaryReport boundary(const std::string& group) { return boundary(catalog(), group); }

json boundary_to_json(const BoundaryReport& r) {
  json forbidden = json::object();
  for (const auto& [p, tag] : r.forbidden) forbidden[std::to_string(p)] = tag;
  json allowed = json::array();
  for (auto p : r.allowed) allowed.push_back(std::to_string(p));
  return {{"schema", kSchemaVersion}, {"group", r.group}, {"forbidden", forbidden},
          {"allowed", allowed},       {"trace", r.trace}};
}

}  // namespace pg
