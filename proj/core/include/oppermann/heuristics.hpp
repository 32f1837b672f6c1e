// heuristics.hpp
// Cramer-model estimators used for parameter sanity checks and run
// statistics. Nothing here proves anything.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "oppermann/arith.hpp"

namespace oppermann {

inline constexpr double euler_gamma = 0.5772156649015329;

// Reliability inputs for sizing a sample: a set of ln(n)*ln(v) integers
// near n fails to contain a prime with probability ~1/v when the smooth
// bound b of the modulus is accounted for separately.
struct HeuristicParams {
    double v = 2.0;   // > 1
    uint64_t b = 2;   // >= 2
};

// 1 / ln x, the chance a random integer near x is prime.
// Throws std::invalid_argument for x <= e.
double prime_prob(double x);

// (M/phi(M)) / ln x for M = R * prod(p^e), given m's prime factorization
// and prime R: phi(M) = phi(m) * (R - 1). Throws std::invalid_argument on
// an invalid factorization (non-prime base, zero exponent, duplicate) or
// non-prime R.
double ap_prime_prob(double x, const std::vector<std::pair<uint64_t, unsigned>>& m_factorization,
                     uint64_t r);

// (1 - 1/ln x)^count: all of `count` independent integers near x composite.
double all_composite_prob(uint64_t count, double x);

// ln(n^2) / ln B: expected failed tests per interval before a hit, for
// candidates of magnitude ~n^2 pre-sieved to bound B. Requires B >= 3.
double expected_failed_tests(u128 n, uint32_t sieve_bound);

// Mertens-asymptotic density gain e^gamma * ln b of embedding all primes
// p <= b in the modulus; diagnostic companion to the exact phi ratio.
double mertens_density_factor(double b);

// ln(x) * ln(v): sample size near x that misses a prime with
// probability ~1/v.
double sample_size_for_reliability(double x, double v);

}  // namespace oppermann
