#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "primegraph/catalog.hpp"

namespace pg {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kPrimeSearchCap = 10'000'000;

// Miller-Rabin with a fixed-seed generator, so answers are reproducible.
bool is_prime(const BigInt& n);

// The `count` smallest primes not in `avoid`, ascending.
std::vector<BigInt> smallest_primes_outside(std::size_t count, const std::set<BigInt>& avoid);

// Smallest prime p = 1 + k*modulus (k >= 1; any prime when modulus is 1) not
// in `avoid`. Gives up after `cap` candidates.
std::optional<BigInt> congruence_prime(const BigInt& modulus, const std::set<BigInt>& avoid,
                                       std::uint64_t cap = kPrimeSearchCap);

BigInt order_value(const Factorization& f);
BigInt parse_big(const std::string& s);

}  // namespace pg
