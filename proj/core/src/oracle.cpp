#include "oppermann/oracle.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#include "oppermann/arith.hpp"

namespace oppermann {

namespace {

constexpr uint64_t kMaxSpan = 100000000;  // memory guard

// Base primes shared across calls; grown geometrically, snapshotted so
// concurrent readers never see a vector being replaced.
std::mutex g_base_mutex;
std::shared_ptr<const std::vector<uint32_t>> g_base_primes;
uint32_t g_base_limit = 0;

std::shared_ptr<const std::vector<uint32_t>> base_primes(uint32_t limit) {
    std::lock_guard<std::mutex> lock(g_base_mutex);
    if (limit > g_base_limit || !g_base_primes) {
        uint32_t grown = g_base_limit < 1024 ? 1024 : g_base_limit;
        while (grown < limit) grown = grown > UINT32_MAX / 2 ? UINT32_MAX : grown * 2;
        g_base_primes = std::make_shared<const std::vector<uint32_t>>(primes_up_to(grown));
        g_base_limit = grown;
    }
    return g_base_primes;
}

}  // namespace

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    if (hi <= lo + 1) return out;
    if (hi - lo - 1 > kMaxSpan)
        throw std::invalid_argument("primes_in_range: span over 10^8 refused");

    const uint64_t first = lo + 1, last = hi - 1;  // inclusive window
    const uint32_t root = uint32_t(isqrt((u128)last));
    auto bases = base_primes(root);

    std::vector<uint8_t> composite(size_t(last - first + 1), 0);
    for (uint64_t v = first; v < 2 && v <= last; ++v) composite[size_t(v - first)] = 1;
    for (uint32_t p : *bases) {
        if (p > root) break;
        const uint64_t rem = first % p;
        uint64_t start = rem == 0 ? first : first + (p - rem);
        if (start < first) continue;                           // wrapped past 2^64
        if (start < uint64_t(p) * p) start = uint64_t(p) * p;  // keep p itself prime
        for (uint64_t v = start; v <= last; v += p) {
            composite[size_t(v - first)] = 1;
            if (last - v < p) break;  // avoid wraparound near 2^64
        }
    }
    for (uint64_t v = first; v <= last; ++v) {
        if (!composite[size_t(v - first)]) out.push_back(v);
    }
    return out;
}

std::vector<uint64_t> ap_primes_in_range(uint64_t lo, uint64_t hi, uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("ap_primes_in_range: modulus 0");
    std::vector<uint64_t> all = primes_in_range(lo, hi);
    if (modulus == 1) return all;
    std::vector<uint64_t> out;
    for (uint64_t p : all) {
        if (p % modulus == 1) out.push_back(p);
    }
    return out;
}

}  // namespace oppermann
