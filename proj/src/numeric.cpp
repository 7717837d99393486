#include "kummerlab/numeric.hpp"

#include <array>

#include "kummerlab/errors.hpp"

namespace kummerlab {

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 inv_mod(u64 a, u64 m) {
    // extended Euclid on (a mod m, m)
    i64 r0 = static_cast<i64>(a % m), r1 = static_cast<i64>(m);
    i64 s0 = 1, s1 = 0;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw NotAUnit("inv_mod: argument is not invertible");
    i64 mm = static_cast<i64>(m);
    return static_cast<u64>(((s0 % mm) + mm) % mm);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this base set decides primality for every n < 2^64
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

int p_valuation(u64 x, u64 p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

u64 reduce_signed(i64 value, u64 m) {
    i64 mm = static_cast<i64>(m);
    i64 r = value % mm;
    if (r < 0) r += mm;
    return static_cast<u64>(r);
}

u64 checked_pow(u64 p, int k, u64 limit) {
    u64 result = 1;
    for (int i = 0; i < k; ++i) {
        if (result > limit / p)
            throw BadPrecision("p^k exceeds the supported coefficient range");
        result *= p;
    }
    return result;
}

} // namespace kummerlab
