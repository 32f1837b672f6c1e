#include "oppermann/search.hpp"

#include <algorithm>

namespace oppermann {

namespace {

// Smallest k with modulus*k + 1 > lo.
u128 first_index_above(u128 lo, u128 modulus) {
    return lo == 0 ? 0 : (lo - 1) / modulus + 1;
}

const std::vector<uint32_t>& small_trial_primes() {  // p <= 61
    static const std::vector<uint32_t> primes = primes_up_to(63);
    return primes;
}

const std::vector<uint32_t>& algorithm_a_trial_primes() {  // p <= 1000
    static const std::vector<uint32_t> primes = primes_up_to(1000);
    return primes;
}

// Alternate-R multiplier, derived exactly as in plan_segment.
uint64_t derive_m(const SegmentPlan& plan, uint64_t r_alt) {
    const u128 mstar_num = (u128)2 * plan.n * plan.t_target;
    const u128 denom_r = (u128)plan.bit_length * r_alt;
    const uint64_t m_lo = 2 * uint64_t(mstar_num / (2 * denom_r));
    const u128 rem = mstar_num - (u128)m_lo * denom_r;
    uint64_t m = rem > denom_r ? m_lo + 2 : m_lo;
    if (m < 2) m = 2;
    while (m % r_alt == 0) m += 2;
    return m;
}

}  // namespace

Interval make_interval(const SegmentPlan& plan, uint32_t i, IntervalCase which) {
    Interval iv;
    iv.n = plan.n + i;
    iv.i = i;
    iv.which = which;
    const u128 a = (u128)iv.n * iv.n;
    const u128 b = (u128)iv.n * (iv.n + 1);
    if (which == IntervalCase::A) {
        iv.lo = a;
        iv.hi = b;
    } else {
        iv.lo = b;
        iv.hi = (u128)(iv.n + 1) * (iv.n + 1);
    }
    const u128 k = first_index_above(iv.lo, plan.modulus);
    iv.q_index = k > plan.q ? uint64_t(k - plan.q) : 0;
    return iv;
}

IntervalResult scan_interval(const BitVector& x, const SegmentPlan& plan,
                             const Interval& interval) {
    IntervalResult res;
    res.interval = interval;
    for (uint64_t j = interval.q_index; j < plan.candidate_count; ++j) {
        const u128 cand = plan.candidate(j);
        if (cand >= interval.hi) break;
        if (x.test(uint32_t(j))) continue;
        ++res.candidates_tested;
        BlsResult bls = bls_test(cand, plan.r);
        if (bls.outcome == BlsOutcome::prime) {
            res.outcome = IntervalOutcome::found;
            res.prime = cand;
            res.proof = ProofKind::bls;
            res.certificate = bls.certificate;
            return res;
        }
        ++res.bls_failures;
        if (bls.outcome == BlsOutcome::inconclusive)
            res.inconclusive_skips.push_back(cand);
    }
    res.outcome = IntervalOutcome::exhausted;
    return res;
}

IntervalResult fallback_alt_r(const SegmentPlan& plan, const Interval& interval,
                              const RTable& table, unsigned level) {
    if (level < 1 || level > 4)
        throw std::invalid_argument("fallback_alt_r: level out of 1..4");
    IntervalResult res;
    res.interval = interval;
    res.fallback_level = uint8_t(level);

    const uint64_t r_alt = select_r(table, plan.r_threshold, level);
    const uint64_t m_alt = derive_m(plan, r_alt);
    const u128 modulus = (u128)r_alt * m_alt;

    for (u128 k = first_index_above(interval.lo, modulus);; ++k) {
        const u128 cand = modulus * k + 1;
        if (cand >= interval.hi) break;
        if (cand < 3) continue;  // degenerate toy bounds
        bool composite = false;
        for (uint32_t p : small_trial_primes()) {
            if (modulus % p == 0) continue;
            if (cand % p == 0) {
                composite = true;
                break;
            }
        }
        if (composite) continue;
        ++res.candidates_tested;
        if (!strong_probable_prime(cand, 2)) {
            ++res.bls_failures;
            continue;
        }
        BlsResult bls = bls_test(cand, r_alt);
        if (bls.outcome == BlsOutcome::prime) {
            res.outcome = IntervalOutcome::found;
            res.prime = cand;
            res.proof = ProofKind::bls;
            res.certificate = bls.certificate;
            return res;
        }
        ++res.bls_failures;
        if (bls.outcome == BlsOutcome::inconclusive)
            res.inconclusive_skips.push_back(cand);
    }
    res.outcome = IntervalOutcome::exhausted;
    return res;
}

IntervalResult fallback_algorithm_a(const Interval& interval) {
    IntervalResult res;
    res.interval = interval;
    res.fallback_level = 5;
    for (u128 cand = interval.lo + 1; cand < interval.hi; ++cand) {
        ++res.candidates_tested;
        bool composite = false;
        for (uint32_t p : algorithm_a_trial_primes()) {
            if (cand % p == 0) {
                composite = cand != p;
                break;
            }
        }
        if (composite) continue;
        if (cand < deterministic_prime_bound) {
            if (!deterministic_prime(cand)) continue;
            res.outcome = IntervalOutcome::found;
            res.prime = cand;
            res.proof = ProofKind::deterministic_mr;
            return res;
        }
        // Beyond the witness-set bound: strongest available evidence, flagged.
        bool passes = true;
        for (uint64_t b : deterministic_prime_bases) {
            if (!strong_probable_prime(cand, b)) {
                passes = false;
                break;
            }
        }
        if (passes) {
            res.outcome = IntervalOutcome::found;
            res.prime = cand;
            res.proof = ProofKind::strong_probable_only;
            return res;
        }
    }
    res.outcome = IntervalOutcome::counterexample;
    return res;
}

namespace {

IntervalResult process_interval(const SegmentPlan& plan, const BitVector& x,
                                const RTable& table, const Interval& interval) {
    IntervalResult res = scan_interval(x, plan, interval);
    if (res.outcome == IntervalOutcome::found) return res;

    uint32_t failures = res.bls_failures;
    std::vector<u128> skips = std::move(res.inconclusive_skips);
    for (unsigned level = 1; level <= 4; ++level) {
        IntervalResult alt = fallback_alt_r(plan, interval, table, level);
        failures += alt.bls_failures;
        skips.insert(skips.end(), alt.inconclusive_skips.begin(),
                     alt.inconclusive_skips.end());
        if (alt.outcome == IntervalOutcome::found) {
            alt.bls_failures = failures;
            alt.inconclusive_skips = std::move(skips);
            return alt;
        }
    }
    IntervalResult last = fallback_algorithm_a(interval);
    last.bls_failures = failures;
    last.inconclusive_skips = std::move(skips);
    if (last.outcome == IntervalOutcome::counterexample) last.fallback_level = 6;
    return last;
}

}  // namespace

std::vector<IntervalResult> verify_segment(const SegmentPlan& plan, const BitVector& x,
                                           const RTable& table, uint32_t t_limit) {
    const uint32_t t = t_limit == 0 ? plan.t : std::min(t_limit, plan.t);
    std::vector<IntervalResult> results;
    results.reserve(size_t(2) * t);
    for (uint32_t i = 0; i < t; ++i) {
        results.push_back(process_interval(plan, x, table, make_interval(plan, i, IntervalCase::A)));
        results.push_back(process_interval(plan, x, table, make_interval(plan, i, IntervalCase::B)));
    }
    return results;
}

}  // namespace oppermann
