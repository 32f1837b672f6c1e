// prover.hpp
// BLS n-1 primality test specialized to a single large prime factor r of
// l-1 with r^3 > l. Prime outcomes carry a certificate sufficient for
// independent re-verification.

#pragma once

#include <cstdint>

#include "oppermann/arith.hpp"

namespace oppermann {

enum class BlsBranch : uint8_t {
    discriminant_nonsquare,  // c1^2 - 4*c2 is negative or not a square
    trivial_square_root,     // square discriminant, but only the trivial split
};

// l = c2*r^2 + c1*r + 1 with 0 <= c1, c2 < r and r^3 > l.
struct PrimeCertificate {
    u128 candidate = 0;
    uint64_t r = 0;
    uint32_t base = 2;
    uint64_t c1 = 0;
    uint64_t c2 = 0;
    BlsBranch branch = BlsBranch::discriminant_nonsquare;
};

enum class BlsOutcome : uint8_t { prime, composite, inconclusive };

struct BlsResult {
    BlsOutcome outcome = BlsOutcome::inconclusive;
    PrimeCertificate certificate{};  // meaningful only when outcome == prime
    // Nontrivial factor of the candidate when composite and one is known;
    // 0 means the witness is a failed base-2 Fermat condition only.
    u128 factor = 0;
};

// Decision procedure (base fixed at 2):
//   1. 2^(l-1) != 1 (mod l)                        -> composite
//   2. g = gcd(2^((l-1)/r) - 1, l): 1 < g < l      -> composite (factor g)
//      g = l                                        -> inconclusive
//   3. otherwise every prime factor of l is 1 mod r; write the base-r
//      digits l = c2*r^2 + c1*r + 1 and D = c1^2 - 4*c2
//   4. D not a perfect square                       -> prime
//   5. D = s^2, a = (c1-s)/2: a >= 1 and a*r+1 | l  -> composite (a*r+1)
//      otherwise only the trivial split exists      -> prime
// Requires l odd, l > r, l = 1 (mod r), r^3 > l, r prime (caller's
// contract, from the verified R-table); throws std::invalid_argument on
// the checkable violations.
BlsResult bls_test(u128 ell, uint64_t r);

// Full recheck of a certificate from scratch: digit identity and bounds,
// r^3 > l, r proven prime, both exponentiation conditions, and the
// recorded branch condition. Never throws; false on any failure.
bool verify_certificate(const PrimeCertificate& cert);

}  // namespace oppermann
