#include "oppermann/heuristics.hpp"

#include <cmath>
#include <stdexcept>

namespace oppermann {

double prime_prob(double x) {
    if (!(x > std::exp(1.0)))
        throw std::invalid_argument("prime_prob: x must exceed e");
    return 1.0 / std::log(x);
}

double ap_prime_prob(double x, const std::vector<std::pair<uint64_t, unsigned>>& m_factorization,
                     uint64_t r) {
    double ratio = 1.0;  // m / phi(m) = prod p/(p-1)
    for (size_t i = 0; i < m_factorization.size(); ++i) {
        const auto& [p, e] = m_factorization[i];
        if (e == 0 || !deterministic_prime(p))
            throw std::invalid_argument("ap_prime_prob: invalid factorization");
        for (size_t j = 0; j < i; ++j) {
            if (m_factorization[j].first == p)
                throw std::invalid_argument("ap_prime_prob: duplicate prime in factorization");
        }
        ratio *= double(p) / double(p - 1);
    }
    if (!deterministic_prime(r))
        throw std::invalid_argument("ap_prime_prob: r must be prime");
    ratio *= double(r) / double(r - 1);
    return ratio * prime_prob(x);
}

double all_composite_prob(uint64_t count, double x) {
    return std::pow(1.0 - prime_prob(x), double(count));
}

double expected_failed_tests(u128 n, uint32_t sieve_bound) {
    if (sieve_bound < 3)
        throw std::invalid_argument("expected_failed_tests: B must be >= 3");
    return 2.0 * std::log(to_double(n)) / std::log(double(sieve_bound));
}

double mertens_density_factor(double b) {
    if (!(b >= 2.0))
        throw std::invalid_argument("mertens_density_factor: b must be >= 2");
    return std::exp(euler_gamma) * std::log(b);
}

double sample_size_for_reliability(double x, double v) {
    if (!(x > std::exp(1.0)) || !(v > 1.0))
        throw std::invalid_argument("sample_size_for_reliability: need x > e and v > 1");
    return std::log(x) * std::log(v);
}

}  // namespace oppermann
