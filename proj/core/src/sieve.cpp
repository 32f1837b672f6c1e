#include "oppermann/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace oppermann {

namespace {

inline u128 ceil_div(u128 a, u128 b) { return (a + b - 1) / b; }

// Extended Euclid on 64-bit values; p need not be prime, a coprime to p.
uint64_t modinv64(uint64_t a, uint64_t p) {
    int64_t r0 = int64_t(p), r1 = int64_t(a % p);
    int64_t x0 = 0, x1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t x2 = x0 - q * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    if (x0 < 0) x0 += int64_t(p);
    return uint64_t(x0);
}

}  // namespace

void SieveConfig::validate() const {
    if (segment_bits < 6 || segment_bits > 27)
        throw std::invalid_argument("segment_bits out of 6..27");
    if (s == 0) throw std::invalid_argument("s must be positive");
    if (t_min == 0 || t_min > t_max)
        throw std::invalid_argument("need 1 <= t_min <= t_max");
}

BitVector::BitVector(uint32_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

void BitVector::clear() { std::memset(words_.data(), 0, words_.size() * sizeof(uint64_t)); }

uint64_t BitVector::popcount() const {
    uint64_t n = 0;
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t word = words_[w];
        // ignore bits past size() in the last word
        if (w == words_.size() - 1 && (bits_ & 63) != 0)
            word &= (uint64_t(1) << (bits_ & 63)) - 1;
        n += uint64_t(std::popcount(word));
    }
    return n;
}

SmallPrimeMasks SmallPrimeMasks::build(uint32_t bit_length) {
    SmallPrimeMasks out;
    out.bit_length = bit_length;
    const uint32_t total = bit_length + 64;
    for (size_t k = 0; k < kPrimes.size(); ++k) {
        std::vector<uint64_t>& mask = out.masks[k];
        mask.assign((total + 63) / 64, 0);
        for (uint32_t b = 0; b < total; b += kPrimes[k])
            mask[b >> 6] |= uint64_t(1) << (b & 63);
    }
    return out;
}

SieveContext SieveContext::make(const SieveConfig& config) {
    config.validate();
    SieveContext ctx;
    ctx.primes = primes_up_to(config.bit_length());
    ctx.masks = SmallPrimeMasks::build(config.bit_length());
    return ctx;
}

SegmentPlan plan_segment(uint64_t n, const RTable& table, const SieveConfig& config) {
    config.validate();
    if (n < 2) throw std::invalid_argument("plan_segment: n must be >= 2");

    SegmentPlan plan;
    plan.n = n;
    plan.s = config.s;
    plan.bit_length = config.bit_length();
    plan.sieve_bound = config.bit_length();
    plan.t_target = config.t_target();
    plan.r_threshold = icbrt((u128)(n + config.t_max) * (n + config.t_max));
    plan.r = select_r(table, plan.r_threshold, 0);

    // m = even value nearest M*/R (ties to the smaller), at least 2,
    // where M* = 2*n*t_target / L as an exact rational. R > (n+t_max)^(2/3)
    // keeps m below ~2*t_max*n^(1/3)/L, well inside 64 bits.
    const u128 mstar_num = (u128)2 * n * plan.t_target;
    const u128 denom_r = (u128)plan.bit_length * plan.r;
    const uint64_t m_lo = 2 * uint64_t(mstar_num / (2 * denom_r));
    const u128 rem = mstar_num - (u128)m_lo * denom_r;  // in [0, 2*denom_r)
    uint64_t m = rem > denom_r ? m_lo + 2 : m_lo;
    if (m < 2) m = 2;
    while (m % plan.r == 0) m += 2;  // keep gcd(m, R) = 1
    plan.m = m;
    plan.modulus = (u128)plan.r * m;

    u128 t_raw = (u128)plan.bit_length * plan.modulus / ((u128)2 * n + plan.t_target);
    uint32_t t = t_raw > config.t_max ? config.t_max : uint32_t(t_raw);
    if (t == 0) t = 1;

    plan.q = ceil_div((u128)n * n, plan.modulus);
    const u128 first = plan.modulus * plan.q + 1;
    for (;;) {
        u128 end = (u128)(n + t) * (n + t);
        u128 count = end > first ? ceil_div(end - first, plan.modulus) : 0;
        if (count <= plan.bit_length) {
            plan.t = t;
            plan.candidate_count = uint32_t(count);
            break;
        }
        if (t == 1)
            throw std::runtime_error(
                "plan_segment: one n-step exceeds the bit vector; increase segment_bits");
        --t;
    }
    return plan;
}

uint32_t first_hit(uint64_t p, const SegmentPlan& plan) {
    if (p == 0 || plan.modulus % p == 0)
        throw std::invalid_argument("first_hit: p divides M");
    const uint64_t m_mod = uint64_t(plan.modulus % p);
    const uint64_t q_mod = uint64_t(plan.q % p);
    const uint64_t c = uint64_t(((u128)m_mod * q_mod + 1) % p);  // (Mq+1) mod p
    const uint64_t inv = modinv64(m_mod, p);
    return uint32_t((u128)((p - c) % p) * inv % p);
}

namespace {

// OR the p-stride mask into x so that bits f, f+p, f+2p, ... are set:
// x.bit[j] |= mask.bit[j + d] with d = (p - f) mod p < 64 reads at most
// one word past L, which the mask provides.
void or_mask(BitVector& x, const std::vector<uint64_t>& mask, uint32_t p, uint32_t f) {
    const uint32_t d = (p - f % p) % p;
    uint64_t* xw = x.words();
    const uint64_t* mw = mask.data();
    const size_t nwords = x.word_count();
    if (d == 0) {
        for (size_t w = 0; w < nwords; ++w) xw[w] |= mw[w];
    } else {
        for (size_t w = 0; w < nwords; ++w)
            xw[w] |= (mw[w] >> d) | (mw[w + 1] << (64 - d));
    }
}

}  // namespace

void sieve_segment(BitVector& x, const SegmentPlan& plan, const SieveContext& ctx) {
    const uint32_t L = plan.bit_length;
    for (size_t k = 0; k < ctx.primes.size(); ++k) {
        const uint32_t p = ctx.primes[k];
        if (p > plan.sieve_bound) break;
        if (plan.modulus % p == 0) continue;
        const uint32_t f = first_hit(p, plan);
        if (ctx.use_masks && p < 64) {
            // primes[k] == SmallPrimeMasks::kPrimes[k] for the first 18 primes
            or_mask(x, ctx.masks.masks[k], p, f);
        } else {
            for (uint64_t j = f; j < L; j += p) x.set(uint32_t(j));
        }
    }
}

}  // namespace oppermann
