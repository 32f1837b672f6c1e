// search.hpp
// Interval-by-interval prime finding over a sieved segment, with the
// layered fallback chain: primary sieved scan (level 0), up to four
// alternate-R trial-division scans (levels 1-4), then a sequential scan
// with unconditional proving (level 5).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oppermann/prover.hpp"
#include "oppermann/rtable.hpp"
#include "oppermann/sieve.hpp"

namespace oppermann {

enum class IntervalCase : uint8_t { A, B };

// One half-step of Oppermann for instance n: case A is (n^2, n(n+1)),
// case B is (n(n+1), (n+1)^2); found primes are strictly inside.
struct Interval {
    uint64_t n = 0;       // instance (segment base + i)
    uint32_t i = 0;       // offset within the segment
    IntervalCase which = IntervalCase::A;
    u128 lo = 0, hi = 0;
    uint64_t q_index = 0;  // smallest j with M(q+j)+1 > lo
};

Interval make_interval(const SegmentPlan& plan, uint32_t i, IntervalCase which);

enum class IntervalOutcome : uint8_t {
    found,
    exhausted,       // this level found nothing; caller escalates
    counterexample,  // every level exhausted: report loudly
};

enum class ProofKind : uint8_t {
    none,
    bls,                   // certificate attached
    deterministic_mr,      // 13-witness test inside its validity bound
    strong_probable_only,  // beyond the bound; run becomes "conditional"
};

struct IntervalResult {
    Interval interval;
    IntervalOutcome outcome = IntervalOutcome::exhausted;
    u128 prime = 0;
    ProofKind proof = ProofKind::none;
    std::optional<PrimeCertificate> certificate;
    uint32_t candidates_tested = 0;  // at the level that produced the result
    uint32_t bls_failures = 0;       // failed BLS tests across all levels tried
    uint8_t fallback_level = 0;      // 0..5; 6 = exhausted everywhere
    std::vector<u128> inconclusive_skips;  // BLS-inconclusive candidate values
};

// Level 0: walk zero bits from q_index while the candidate stays below hi,
// BLS-testing each. Composite and inconclusive candidates are skipped
// (inconclusive ones logged); exhaustion is returned in-band.
IntervalResult scan_interval(const BitVector& x, const SegmentPlan& plan,
                             const Interval& interval);

// Levels 1..4: alternate prime R' = select(table, threshold, level) with a
// re-derived multiplier m'; candidates 1 mod R'm' inside (lo, hi) are
// trial-divided by primes <= 64 coprime to M', strong-probable-prime
// checked to base 2, then BLS-proven against R'.
IntervalResult fallback_alt_r(const SegmentPlan& plan, const Interval& interval,
                              const RTable& table, unsigned level);

// Level 5: scan lo+1, lo+2, ... < hi. Trial division by primes <= 1000,
// then the 13-witness deterministic test. Past the witness-set validity
// bound a candidate passing all 13 strong tests is reported with
// ProofKind::strong_probable_only. A truly empty scan is a
// counterexample candidate.
IntervalResult fallback_algorithm_a(const Interval& interval);

// All 2t intervals of the segment in (i, case) order with full escalation.
// t_limit truncates to the first t_limit values of i (0 = the plan's t).
std::vector<IntervalResult> verify_segment(const SegmentPlan& plan, const BitVector& x,
                                           const RTable& table, uint32_t t_limit = 0);

}  // namespace oppermann
