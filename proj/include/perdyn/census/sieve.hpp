#ifndef PERDYN_CENSUS_SIEVE_HPP
#define PERDYN_CENSUS_SIEVE_HPP

#include <cstdint>
#include <vector>

namespace perdyn {

/// Primes in [lo, hi] by a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

bool is_prime(std::uint64_t n);

} // namespace perdyn

#endif
