#include "oppermann/prover.hpp"

namespace oppermann {

namespace {

// r^3 > ell, without forming r^3 when it would overflow.
bool cube_exceeds(uint64_t r, u128 ell) {
    u128 r2 = (u128)r * r;
    if (r2 / r != (u128)r) return true;  // r^2 >= 2^128 > ell
    u128 r3 = r2 * r;
    if (r3 / r != r2) return true;
    return r3 > ell;
}

struct Digits {
    uint64_t c1, c2;
};

Digits base_r_digits(u128 ell, uint64_t r) {
    u128 r2 = (u128)r * r;
    u128 em1 = ell - 1;
    return Digits{uint64_t((em1 % r2) / r), uint64_t(em1 / r2)};
}

// If c1^2 - 4*c2 is a nonnegative perfect square s^2 and a = (c1-s)/2
// names a nontrivial divisor a*r+1 of ell, return it; else 0.
u128 square_split_factor(u128 ell, uint64_t r, Digits d) {
    u128 c1sq = (u128)d.c1 * d.c1;
    u128 four_c2 = (u128)4 * d.c2;
    if (c1sq < four_c2) return 0;  // negative discriminant
    u128 disc = c1sq - four_c2;
    u128 s = isqrt(disc);
    if (s * s != disc) return 0;
    uint64_t a = (d.c1 - uint64_t(s)) / 2;  // s <= c1 and s = c1 (mod 2)
    if (a == 0) return 0;
    u128 f = (u128)a * r + 1;
    if (f <= 1 || f >= ell) return 0;
    return ell % f == 0 ? f : 0;
}

}  // namespace

BlsResult bls_test(u128 ell, uint64_t r) {
    if ((ell & 1) == 0) throw std::invalid_argument("bls_test: candidate must be odd");
    if (r < 2 || ell <= r) throw std::invalid_argument("bls_test: need candidate > r >= 2");
    if ((ell - 1) % r != 0) throw std::invalid_argument("bls_test: candidate != 1 (mod r)");
    if (!cube_exceeds(r, ell)) throw std::invalid_argument("bls_test: r^3 <= candidate");

    Digits d = base_r_digits(ell, r);

    if (powmod(2, ell - 1, ell) != 1) {
        // Fermat witness; name an explicit factor when the digit split
        // happens to produce one (divisibility is checked directly).
        return BlsResult{BlsOutcome::composite, {}, square_split_factor(ell, r, d)};
    }

    u128 x = powmod(2, (ell - 1) / r, ell);
    u128 g = gcd(x >= 1 ? x - 1 : ell - 1, ell);
    if (g == ell) return BlsResult{BlsOutcome::inconclusive, {}, 0};
    if (g > 1) return BlsResult{BlsOutcome::composite, {}, g};

    // Every prime factor of ell is 1 (mod r). With r^3 > ell a two-factor
    // split (a*r+1)(b*r+1) forces c1 = a+b, c2 = ab exactly, so the
    // discriminant (a-b)^2 decides.
    PrimeCertificate cert{ell, r, 2, d.c1, d.c2, BlsBranch::discriminant_nonsquare};
    u128 f = square_split_factor(ell, r, d);
    if (f != 0) return BlsResult{BlsOutcome::composite, {}, f};

    u128 c1sq = (u128)d.c1 * d.c1;
    u128 four_c2 = (u128)4 * d.c2;
    if (c1sq >= four_c2 && is_perfect_square(c1sq - four_c2))
        cert.branch = BlsBranch::trivial_square_root;
    return BlsResult{BlsOutcome::prime, cert, 0};
}

bool verify_certificate(const PrimeCertificate& cert) {
    const u128 ell = cert.candidate;
    const uint64_t r = cert.r;
    if (r < 2 || ell <= r || (ell & 1) == 0) return false;
    if (cert.c1 >= r || cert.c2 >= r) return false;
    if (!cube_exceeds(r, ell)) return false;
    if ((u128)cert.c2 * r * r + (u128)cert.c1 * r + 1 != ell) return false;
    if (cert.base < 2 || (u128)cert.base >= ell) return false;

    try {
        if (!deterministic_prime(r)) return false;  // r < 2^64 < bound
    } catch (const std::out_of_range&) {
        return false;
    }

    if (powmod(cert.base, ell - 1, ell) != 1) return false;
    u128 x = powmod(cert.base, (ell - 1) / r, ell);
    if (gcd(x >= 1 ? x - 1 : ell - 1, ell) != 1) return false;

    u128 c1sq = (u128)cert.c1 * cert.c1;
    u128 four_c2 = (u128)4 * cert.c2;
    bool square = c1sq >= four_c2 && is_perfect_square(c1sq - four_c2);
    if (cert.branch == BlsBranch::discriminant_nonsquare) return !square;
    if (!square) return false;
    Digits d{cert.c1, cert.c2};
    return square_split_factor(ell, r, d) == 0;
}

}  // namespace oppermann
