#pragma once

#include <cstdint>
#include <vector>

namespace rcn {

/// Deterministic Miller-Rabin primality test, valid for the whole uint64 range.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// All primes <= limit, ascending. Plain sieve; limits above ~10^8 are rejected.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// True iff n has no factor 2 or 3 (n >= 1). The 5-rough numbers 1, 5, 7, 11, 13...
bool is_rough5(std::uint64_t n);

}  // namespace rcn
