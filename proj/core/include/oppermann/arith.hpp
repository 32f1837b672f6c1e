// arith.hpp
// Exact 128-bit number-theoretic primitives. Candidate values reach
// (n+t)^2 which needs up to ~2^128; all modular arithmetic is exact
// (double-width intermediates, no probabilistic reduction).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oppermann {

using u128 = unsigned __int128;

// Thrown by modinv when gcd(a, p) != 1.
class not_invertible_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Decimal conversion. parse_u128 throws std::invalid_argument on malformed
// input and std::out_of_range past 2^128-1.
std::string to_string(u128 v);
u128 parse_u128(std::string_view s);
double to_double(u128 v);

u128 gcd(u128 a, u128 b);

// (a * b) mod m, exact for any m >= 1. Native 128-bit product below 2^64,
// binary shift-add above.
u128 mulmod(u128 a, u128 b, u128 m);

// base^exponent mod modulus. Throws std::invalid_argument if modulus < 2.
u128 powmod(u128 base, u128 exponent, u128 modulus);

// x with a*x = 1 (mod p), 0 < x < p. Throws std::invalid_argument if p < 2,
// not_invertible_error if gcd(a, p) != 1.
u128 modinv(u128 a, u128 p);

// floor(sqrt(n)), exact.
u128 isqrt(u128 n);
bool is_perfect_square(u128 n);

// floor(cbrt(n)), exact. Cube roots of u128 values fit in 43 bits.
uint64_t icbrt(u128 n);

// Strong (Miller-Rabin) probable-prime test to one base.
// Requires n odd, n >= 3, 2 <= base < n; throws std::invalid_argument.
bool strong_probable_prime(u128 n, u128 base);

// Smallest composite passing the strong test to all of the first 13 prime
// bases: 3317044064679887385961981. Below it, passing all 13 proves
// primality unconditionally.
inline constexpr u128 deterministic_prime_bound =
    ((u128)179817ULL << 64) | 5885577656943027709ULL;

inline constexpr uint64_t deterministic_prime_bases[13] = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Unconditional primality for n < deterministic_prime_bound.
// Throws std::out_of_range at or above the bound (callers must escalate).
bool deterministic_prime(u128 n);

// All primes <= limit, ascending (plain sieve of Eratosthenes).
std::vector<uint32_t> primes_up_to(uint32_t limit);

}  // namespace oppermann
