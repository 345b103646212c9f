#include "primegraph/primes.hpp"

#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "primegraph/graph.hpp"

namespace pg {

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::mt19937 gen(12345);
  return boost::multiprecision::miller_rabin_test(n, 25, gen);
}

std::vector<BigInt> smallest_primes_outside(std::size_t count, const std::set<BigInt>& avoid) {
  std::vector<BigInt> out;
  for (BigInt n = 2; out.size() < count; ++n)
    if (!avoid.count(n) && is_prime(n)) out.push_back(n);
  return out;
}

std::optional<BigInt> congruence_prime(const BigInt& modulus, const std::set<BigInt>& avoid, std::uint64_t cap) {
  if (modulus < 1) throw InputError("congruence modulus must be positive");
  BigInt n = modulus == 1 ? BigInt(2) : modulus + 1;
  const BigInt step = modulus;
  for (std::uint64_t tried = 0; tried < cap; ++tried, n += step)
    if (!avoid.count(n) && is_prime(n)) return n;
  return std::nullopt;
}

BigInt order_value(const Factorization& f) {
  BigInt v = 1;
  for (const auto& [p, e] : f)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

BigInt parse_big(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("bad prime literal '" + s + "'");
  return BigInt(s);
}

}  // namespace pg
