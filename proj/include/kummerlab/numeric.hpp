#pragma once

#include <cstdint>

namespace kummerlab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

// Inverse of a modulo m; throws NotAUnit when gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime(u64 n);

// v_p(x) for a residue x; returns cap when x == 0.
int p_valuation(u64 x, u64 p, int cap);

// value reduced into [0, m).
u64 reduce_signed(i64 value, u64 m);

// p^k, throwing BadPrecision if the result would not fit below limit.
u64 checked_pow(u64 p, int k, u64 limit);

} // namespace kummerlab
