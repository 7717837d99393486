#pragma once

#include <vector>

#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/numeric.hpp"

namespace kummerlab {

// Deterministic splitmix64 stream. Fixed across platforms so that seeded
// property tests and CLI sampling replay byte-for-byte.
class Rng {
public:
    explicit Rng(u64 seed) : state_(seed) {}

    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) by rejection
    u64 below(u64 bound) {
        if (bound <= 1) return 0;
        u64 limit = ~u64(0) - ~u64(0) % bound;
        u64 v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    u64 state_;
};

// Sub-stream for sample `index` of a seeded run; parallel and sequential
// execution draw identical values.
inline Rng rng_for_sample(u64 seed, u64 index) {
    Rng mix(seed ^ (0x517cc1b727220a95ULL + index * 0x2545f4914f6cdd1dULL));
    return Rng(mix.next());
}

inline CycloElem random_element(const RingContextPtr& ctx, Rng& rng) {
    std::vector<u64> c(ctx->degree());
    for (auto& v : c) v = rng.below(ctx->modulus());
    return ctx->from_coeffs(std::move(c));
}

inline CycloElem random_unit(const RingContextPtr& ctx, Rng& rng) {
    for (;;) {
        CycloElem x = random_element(ctx, rng);
        if (is_unit(x)) return x;
    }
}

// random element of U_1 (a 1-unit)
inline CycloElem random_one_unit(const RingContextPtr& ctx, Rng& rng) {
    return ctx->one() + ctx->pi() * random_element(ctx, rng);
}

} // namespace kummerlab
