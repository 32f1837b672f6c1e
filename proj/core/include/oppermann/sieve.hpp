// sieve.hpp
// Per-segment planning (t, R, m, M, q) and the bit-vector sieve over the
// progression 1 mod M. Bit j represents M(q+j)+1; 1 means composite.
// Primes below 64 are applied by OR-ing precomputed stride masks.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "oppermann/arith.hpp"
#include "oppermann/rtable.hpp"

namespace oppermann {

struct SieveConfig {
    uint32_t segment_bits = 17;  // L = 2^segment_bits
    uint32_t s = 128;            // target minimum candidates per interval
    uint32_t t_min = 256;
    uint32_t t_max = 512;

    uint32_t bit_length() const { return uint32_t(1) << segment_bits; }
    uint32_t t_target() const { return (t_min + t_max) / 2; }
    void validate() const;  // throws std::invalid_argument
};

struct SegmentPlan {
    uint64_t n = 0;       // segment base
    uint32_t t = 0;       // segment width in n-steps
    uint32_t s = 0;
    uint64_t r = 0;       // prime R with R^3 > (n+t_max)^2
    uint64_t m = 0;       // even smooth multiplier, gcd(m, R) = 1
    u128 modulus = 0;     // M = R*m
    u128 q = 0;           // ceil(n^2 / M); first candidate is M*q+1
    uint32_t candidate_count = 0;  // candidates below (n+t)^2, <= bit_length
    uint32_t sieve_bound = 0;      // B (= L)
    uint32_t bit_length = 0;       // L
    uint32_t t_target = 0;
    uint64_t r_threshold = 0;      // icbrt((n+t_max)^2); R class must exceed it

    u128 candidate(uint64_t j) const { return modulus * (q + j) + 1; }
    u128 segment_end() const { return (u128)(n + t) * (n + t); }
};

class BitVector {
public:
    explicit BitVector(uint32_t bits);

    void clear();
    void set(uint32_t j) { words_[j >> 6] |= uint64_t(1) << (j & 63); }
    bool test(uint32_t j) const { return (words_[j >> 6] >> (j & 63)) & 1; }
    uint32_t size() const { return bits_; }
    uint64_t popcount() const;

    uint64_t* words() { return words_.data(); }
    const uint64_t* words() const { return words_.data(); }
    size_t word_count() const { return words_.size(); }

private:
    uint32_t bits_;
    std::vector<uint64_t> words_;
};

// One mask per prime p < 64: bits set at multiples of p over L+64 bits,
// so an offset OR reads one word past the end instead of wrapping.
struct SmallPrimeMasks {
    static constexpr std::array<uint32_t, 18> kPrimes{2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37,
                                                      41, 43, 47, 53, 59, 61};
    uint32_t bit_length = 0;
    std::array<std::vector<uint64_t>, 18> masks;

    static SmallPrimeMasks build(uint32_t bit_length);
};

// Immutable per-run sieving state shared across workers.
struct SieveContext {
    std::vector<uint32_t> primes;  // all primes <= B
    SmallPrimeMasks masks;
    bool use_masks = true;

    static SieveContext make(const SieveConfig& config);
};

// Plan the segment starting at n: pick R from the first class above
// icbrt((n+t_max)^2), m as the even value nearest M*/R (M* = 2*n*t_target/L,
// ties to the smaller), t ~ L*M/(2n+t_target) clamped above by t_max (t may
// fall below t_min when the R threshold forces M large at small n).
// Propagates table_exhausted.
SegmentPlan plan_segment(uint64_t n, const RTable& table, const SieveConfig& config);

// Least j >= 0 with M(q+j)+1 = 0 (mod p), via -(Mq+1) * M^-1 mod p.
// Throws std::invalid_argument when p divides M (or p == 0).
uint32_t first_hit(uint64_t p, const SegmentPlan& plan);

// Sets bit first_hit(p) and every p-th bit after it, for every prime
// p <= B with p not dividing M. Expects x cleared.
void sieve_segment(BitVector& x, const SegmentPlan& plan, const SieveContext& ctx);

}  // namespace oppermann
