// oracle.hpp
// Brute-force ground truth at desk scale: a plain segmented sieve of
// Eratosthenes and its restriction to the progression 1 mod M. Exists to
// falsify the fast path; performance is a non-goal.

#pragma once

#include <cstdint>
#include <vector>

namespace oppermann {

// Exactly the primes p with lo < p < hi (strict), ascending.
// Refuses hi - lo > 10^8 (std::invalid_argument); desk scale only.
std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

// primes_in_range filtered to p = 1 (mod modulus); modulus 1 degenerates
// to primes_in_range.
std::vector<uint64_t> ap_primes_in_range(uint64_t lo, uint64_t hi, uint64_t modulus);

}  // namespace oppermann
