#include <algorithm>

#include "primegraph/construct.hpp"

namespace pg {

namespace {

struct Classes {
  const Blueprint& b;
  bool is_o(const std::string& v) const { return b.o_primes.count(v) != 0; }
  bool is_d(const std::string& v) const { return b.d_primes.count(v) != 0; }
  bool is_i(const std::string& v) const { return b.i_primes.count(v) != 0; }
  BigInt prime(const std::string& v) const {
    if (is_o(v)) return b.o_primes.at(v);
    if (is_d(v)) return b.d_primes.at(v);
    return b.i_primes.at(v);
  }
};

std::map<std::string, std::vector<std::string>> in_arcs(const Blueprint& b) {
  std::map<std::string, std::vector<std::string>> in;
  for (const auto& [t, h] : b.frobenius_edges) in[h].push_back(t);
  return in;
}

// N1 and N2 of an I-vertex: in-distance exactly 1 and exactly 2.
std::pair<std::set<std::string>, std::set<std::string>> in_layers(
    const std::map<std::string, std::vector<std::string>>& in, const std::string& v) {
  std::set<std::string> n1, n2;
  if (auto it = in.find(v); it != in.end()) n1.insert(it->second.begin(), it->second.end());
  for (const auto& w : n1)
    if (auto it = in.find(w); it != in.end())
      for (const auto& z : it->second)
        if (!n1.count(z) && z != v) n2.insert(z);
  return {n1, n2};
}

}  // namespace

std::vector<std::string> check_blueprint(const Blueprint& b) {
  std::vector<std::string> bad;
  std::optional<Realizer> e;
  if (!b.extension.empty()) {
    try {
      e = catalog().realizer(b.extension);
    } catch (const InputError& err) {
      bad.push_back(err.what());
      return bad;
    }
  }
  const PrimeSet pe = e ? e->primes() : PrimeSet{};
  PrimeSet image;
  for (const auto& [x, p] : b.phi) image.insert(p);
  if (image != pe || b.phi.size() != pe.size()) bad.push_back("phi is not a bijection onto pi(E)");

  std::set<BigInt> pe_big(pe.begin(), pe.end());
  const Classes cls{b};
  std::set<BigInt> seen;
  std::set<std::string> verts;
  for (const auto* m : {&b.o_primes, &b.d_primes, &b.i_primes})
    for (const auto& [v, p] : *m) {
      if (b.phi.count(v) || !verts.insert(v).second) bad.push_back("vertex " + v + " has two roles");
      if (!is_prime(p)) bad.push_back(p.str() + " is not prime");
      if (pe_big.count(p)) bad.push_back(p.str() + " lies in pi(E)");
      if (!seen.insert(p).second) bad.push_back(p.str() + " assigned twice");
    }

  for (const auto& [t, h] : b.frobenius_edges) {
    const bool ok = (cls.is_o(t) && (cls.is_d(h) || cls.is_i(h))) || (cls.is_d(t) && cls.is_i(h));
    if (!ok) bad.push_back("arc " + t + "->" + h + " is not O->D, O->I or D->I");
  }

  BigInt p_all = 1;
  for (const auto& [v, p] : b.o_primes) p_all *= p;
  for (const auto& [v, q] : b.d_primes)
    if (q % p_all != 1 % p_all) bad.push_back("D-prime " + q.str() + " is not 1 mod the O-primes");

  const BigInt order_e = e ? order_value(e->order) : BigInt(1);
  const auto in = in_arcs(b);
  for (const auto& [v, r] : b.i_primes) {
    const auto [n1, n2] = in_layers(in, v);
    BigInt mod = order_e;
    for (const auto* s : {&n1, &n2})
      for (const auto& w : *s)
        if (cls.is_o(w) || cls.is_d(w)) mod *= cls.prime(w);
    if (r % mod != 1 % mod) bad.push_back("I-prime " + r.str() + " is not 1 mod |E x B|");
    if (e) {
      auto it = b.rep_choice.find(v);
      if (it == b.rep_choice.end()) bad.push_back("I-vertex " + v + " has no representation");
      else if (std::find(e->vectors.begin(), e->vectors.end(), it->second) == e->vectors.end())
        bad.push_back("vector chosen for " + v + " is not a catalog vector of " + e->name);
    }
  }
  for (const auto& [v, vec] : b.rep_choice)
    if (!cls.is_i(v)) bad.push_back("representation chosen for non-I vertex " + v);
  for (auto t : b.post_products)
    if (!is_prime(BigInt(t))) bad.push_back("post product order " + std::to_string(t) + " is not prime");
  return bad;
}

Graph evaluate_blueprint(const Blueprint& b) {
  const auto bad = check_blueprint(b);
  if (!bad.empty()) {
    std::string msg = "blueprint invariant violated: ";
    for (std::size_t i = 0; i < bad.size(); ++i) msg += (i ? "; " : "") + bad[i];
    throw InputError(msg);
  }
  std::optional<Realizer> e;
  if (!b.extension.empty()) e = catalog().realizer(b.extension);
  const Classes cls{b};

  std::vector<std::string> ids;
  if (e)
    for (auto p : e->primes()) ids.push_back(prime_id(p));
  for (const auto* m : {&b.o_primes, &b.d_primes, &b.i_primes})
    for (const auto& [v, p] : *m) ids.push_back(p.str());
  Graph out(ids);

  // Inside pi(E): the complement of E itself.
  if (e)
    for (const auto& [u, w] : e->complement.edges()) out.add_edge(u, w);

  // Frobenius actions of O-primes on D-primes.
  for (const auto& [t, h] : b.frobenius_edges)
    if (cls.is_o(t) && cls.is_d(h)) out.add_edge(cls.prime(t).str(), cls.prime(h).str());

  const auto in = in_arcs(b);
  for (const auto& [v, r] : b.i_primes) {
    // Fit(B): the D-primes of B and the O-primes of B acting on no D-prime of B.
    const auto [n1, n2] = in_layers(in, v);
    std::set<std::string> bset(n1);
    bset.insert(n2.begin(), n2.end());
    for (const auto& u : bset) {
      bool in_fit = cls.is_d(u);
      if (cls.is_o(u)) {
        in_fit = true;
        for (const auto& [t, h] : b.frobenius_edges)
          if (t == u && cls.is_d(h) && bset.count(h)) in_fit = false;
      }
      if (in_fit) out.add_edge(cls.prime(u).str(), r.str());
    }
    // Elements of E without fixed points in the chosen representation.
    if (e)
      for (const auto& [x, p] : b.phi)
        if (!b.rep_choice.at(v).count(p)) out.add_edge(prime_id(p), r.str());
  }

  for (auto t : b.post_products) out = product_complement(out, Graph({prime_id(t)}));
  return out;
}

Graph product_complement(const Graph& g1, const Graph& g2) {
  std::vector<std::string> ids = g1.vertices();
  for (const auto& v : g2.vertices())
    if (!g1.has_vertex(v)) ids.push_back(v);
  Graph out(ids);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const auto &p = ids[i], &q = ids[j];
      const bool p1 = g1.has_vertex(p), q1 = g1.has_vertex(q);
      const bool p2 = g2.has_vertex(p), q2 = g2.has_vertex(q);
      if ((p1 && q2) || (p2 && q1)) continue;
      const bool in1 = p1 && q1, in2 = p2 && q2;
      bool edge = in1 || in2;
      if (in1) edge = edge && g1.adjacent(p, q);
      if (in2) edge = edge && g2.adjacent(p, q);
      if (edge) out.add_edge(p, q);
    }
  return out;
}

}  // namespace pg
