#include "oppermann/arith.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace oppermann {

namespace {

constexpr uint64_t kU64Max = std::numeric_limits<uint64_t>::max();

// (a + b) mod m for a, b < m; correct even when m > 2^127.
// On 2^128 wraparound the unsigned `r - m` re-wraps to a + b - m.
inline u128 addmod(u128 a, u128 b, u128 m) {
    u128 r = a + b;
    if (r < a)
        r -= m;
    else if (r >= m)
        r -= m;
    return r;
}

inline u128 submod(u128 a, u128 b, u128 m) {
    u128 r = a - b;
    if (a < b) r += m;
    return r;
}

}  // namespace

std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int pos = 40;
    while (v != 0) {
        buf[--pos] = char('0' + (unsigned)(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, buf + 40);
}

u128 parse_u128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_u128: empty input");
    constexpr u128 max = ~(u128)0;
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_u128: non-digit character");
        unsigned d = unsigned(c - '0');
        if (v > (max - d) / 10)
            throw std::out_of_range("parse_u128: value exceeds 2^128-1");
        v = v * 10 + d;
    }
    return v;
}

double to_double(u128 v) {
    return double(uint64_t(v >> 64)) * 18446744073709551616.0 +
           double(uint64_t(v));
}

u128 gcd(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 mulmod(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (m <= kU64Max) {
        // a, b < m <= 2^64, so a*b < 2^128: the native product is exact.
        return a * b % m;
    }
    if (a < b) std::swap(a, b);
    u128 r = 0;
    while (b != 0) {
        if (b & 1) r = addmod(r, a, m);
        b >>= 1;
        if (b != 0) a = addmod(a, a, m);
    }
    return r;
}

u128 powmod(u128 base, u128 exponent, u128 modulus) {
    if (modulus < 2) throw std::invalid_argument("powmod: modulus < 2");
    u128 r = 1 % modulus;
    base %= modulus;
    while (exponent != 0) {
        if (exponent & 1) r = mulmod(r, base, modulus);
        exponent >>= 1;
        if (exponent != 0) base = mulmod(base, base, modulus);
    }
    return r;
}

u128 modinv(u128 a, u128 p) {
    if (p < 2) throw std::invalid_argument("modinv: modulus < 2");
    a %= p;
    if (a == 0) throw not_invertible_error("modinv: gcd(a, p) != 1");
    // Extended Euclid; Bezout coefficient of `a` tracked mod p.
    u128 r0 = p, r1 = a;
    u128 x0 = 0, x1 = 1;
    while (r1 != 0) {
        u128 q = r0 / r1;
        u128 r2 = r0 % r1;
        u128 x2 = submod(x0, mulmod(q % p, x1, p), p);
        r0 = r1;
        r1 = r2;
        x0 = x1;
        x1 = x2;
    }
    if (r0 != 1) throw not_invertible_error("modinv: gcd(a, p) != 1");
    return x0;
}

u128 isqrt(u128 n) {
    if (n < 2) return n;
    u128 x = 0;
    u128 bit = (u128)1 << 126;
    while (bit > n) bit >>= 2;
    while (bit != 0) {
        if (n >= x + bit) {
            n -= x + bit;
            x = (x >> 1) + bit;
        } else {
            x >>= 1;
        }
        bit >>= 2;
    }
    return x;
}

bool is_perfect_square(u128 n) {
    u128 r = isqrt(n);
    return r * r == n;
}

uint64_t icbrt(u128 n) {
    uint64_t lo = 0, hi = (uint64_t)1 << 43;  // cbrt(2^128) < 2^43
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo + 1) / 2;
        // mid^3 <= n  <=>  mid^2 <= floor(n / mid); avoids forming mid^3.
        if ((u128)mid * mid <= n / mid)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

bool strong_probable_prime(u128 n, u128 base) {
    if (n < 3 || (n & 1) == 0)
        throw std::invalid_argument("strong_probable_prime: n must be odd and >= 3");
    if (base < 2 || base >= n)
        throw std::invalid_argument("strong_probable_prime: base out of [2, n)");
    u128 d = n - 1;
    int e = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++e;
    }
    u128 x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int k = 1; k < e; ++k) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool deterministic_prime(u128 n) {
    if (n >= deterministic_prime_bound)
        throw std::out_of_range("deterministic_prime: n at or above the 13-witness validity bound");
    if (n < 2) return false;
    for (uint64_t p : deterministic_prime_bases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (uint64_t b : deterministic_prime_bases) {
        if (!strong_probable_prime(n, b)) return false;
    }
    return true;
}

std::vector<uint32_t> primes_up_to(uint32_t limit) {
    std::vector<uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<uint8_t> composite(size_t(limit) + 1, 0);
    for (uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    for (uint32_t i = 2; i <= limit; ++i) {
        if (!composite[i]) primes.push_back(i);
    }
    return primes;
}

}  // namespace oppermann
