#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/sampling.hpp"

using namespace kummerlab;

TEST_CASE("context construction and validation") {
    auto ctx = RingContext::make(5, 4);
    CHECK(ctx->p() == 5);
    CHECK(ctx->pi_precision() == 16);
    CHECK(ctx->modulus() == 625);
    CHECK(ctx->degree() == 4);

    CHECK_THROWS_AS(RingContext::make(2, 3), NotAnOddPrime);
    CHECK_THROWS_AS(RingContext::make(9, 2), NotAnOddPrime);
    CHECK_THROWS_AS(RingContext::make(1, 2), NotAnOddPrime);
    CHECK_THROWS_AS(RingContext::make(5, 0), BadPrecision);
    CHECK_THROWS_AS(RingContext::make(3, 60), BadPrecision); // 3^60 overflows the coefficient type
}

TEST_CASE("ring arithmetic reduces against the cyclotomic relation") {
    auto ctx = RingContext::make(5, 4);
    const CycloElem pi = ctx->pi();
    const CycloElem sum = ctx->from_coeffs({1, 1, 1, 1});
    // (1 - zeta)(1 + zeta + zeta^2 + zeta^3) = 1 - zeta^4 = 2 + zeta + zeta^2 + zeta^3
    CHECK(pi * sum == ctx->from_coeffs({2, 1, 1, 1}));

    CHECK(ctx->zeta().pow(2) * ctx->zeta().pow(3) == ctx->one()); // zeta^5 = 1

    Rng rng(11);
    const CycloElem x = random_element(ctx, rng);
    CHECK(x + ctx->zero() == x);
    CHECK(x - x == ctx->zero());

    auto other = RingContext::make(5, 3);
    CHECK_THROWS_AS((void)(x + other->one()), ContextMismatch);
}

TEST_CASE("inversion matches the exhaustive inverse at k = 1") {
    auto ctx = RingContext::make(5, 1);
    const CycloElem x = ctx->one() + ctx->zeta();

    // oracle: sweep all 5^4 candidates for the inverse
    CycloElem expected;
    int found = 0;
    for (u64 a = 0; a < 5; ++a)
        for (u64 b = 0; b < 5; ++b)
            for (u64 c = 0; c < 5; ++c)
                for (u64 d = 0; d < 5; ++d) {
                    const CycloElem y = ctx->from_coeffs({a, b, c, d});
                    if (x * y == ctx->one()) {
                        expected = y;
                        ++found;
                    }
                }
    REQUIRE(found == 1);
    CHECK(invert(x) == expected);
}

TEST_CASE("inversion basics and errors") {
    auto ctx = RingContext::make(5, 4);
    CHECK(invert(ctx->one()) == ctx->one());
    CHECK_THROWS_AS(invert(ctx->pi()), NotAUnit);

    for (u64 p : {u64(3), u64(7), u64(11)}) {
        auto c = RingContext::make(p, 4);
        Rng rng(p);
        for (int i = 0; i < 40; ++i) {
            const CycloElem x = random_unit(c, rng);
            CHECK(x * invert(x) == c->one());
        }
    }
}

TEST_CASE("pi-adic valuation") {
    for (u64 p : {u64(3), u64(5), u64(7), u64(11)}) {
        auto ctx = RingContext::make(p, 4);
        CHECK(pi_valuation(ctx->pi()) == ValuationResult::exact(1));
        CHECK(pi_valuation(ctx->from_integer(static_cast<i64>(p))) ==
              ValuationResult::exact(static_cast<long>(p) - 1));
        CHECK(pi_valuation(ctx->zeta()) == ValuationResult::exact(0));
        CHECK(pi_valuation(ctx->zero()) == ValuationResult::at_least(ctx->pi_precision()));
        for (long m = 0; m < ctx->pi_precision(); ++m)
            CHECK(pi_valuation(ctx->pi().pow(static_cast<u64>(m))) == ValuationResult::exact(m));
    }
}

TEST_CASE("valuation is additive below the precision") {
    auto ctx = RingContext::make(7, 4);
    Rng rng(123);
    int checked = 0;
    while (checked < 200) {
        const CycloElem x = random_element(ctx, rng);
        const CycloElem y = random_element(ctx, rng);
        const auto vx = pi_valuation(x);
        const auto vy = pi_valuation(y);
        if (!vx.is_exact() || !vy.is_exact()) continue;
        if (vx.value() + vy.value() >= ctx->pi_precision()) continue;
        CHECK(pi_valuation(x * y) == ValuationResult::exact(vx.value() + vy.value()));
        ++checked;
    }
}

TEST_CASE("galois action") {
    auto ctx = RingContext::make(5, 4);
    Rng rng(7);
    const CycloElem x = random_element(ctx, rng);
    CHECK(galois_apply(x, 1) == x);
    CHECK(galois_apply(ctx->zeta(), 2) == ctx->zeta().pow(2));
    CHECK_THROWS_AS(galois_apply(x, 0), BadGaloisIndex);
    CHECK_THROWS_AS(galois_apply(x, 5), BadGaloisIndex);

    for (i64 i = 1; i < 5; ++i)
        for (i64 j = 1; j < 5; ++j)
            CHECK(galois_apply(galois_apply(x, i), j) == galois_apply(x, (i * j) % 5));

    // the action preserves valuations
    for (int trial = 0; trial < 20; ++trial) {
        const CycloElem y = random_element(ctx, rng);
        CHECK(pi_valuation(galois_apply(y, 3)) == pi_valuation(y));
    }
}

TEST_CASE("absolute norm: anchors and the determinant cross-check") {
    auto ctx = RingContext::make(5, 4);
    CHECK(absolute_norm(ctx->pi()).value.residue == 5);
    CHECK(absolute_norm(ctx->one() + ctx->zeta()).value.residue == 1);
    CHECK(absolute_norm(ctx->from_integer(7)).value.residue == pow_mod(7, 4, 625));

    for (u64 p : {u64(3), u64(5), u64(7)}) {
        auto c = RingContext::make(p, 4);
        Rng rng(p * 31);
        for (int i = 0; i < 100; ++i) {
            const CycloElem x = random_element(c, rng);
            const auto a = absolute_norm(x);
            const auto b = absolute_norm_via_determinant(x);
            CHECK(a.value.residue == b.value.residue);
            CHECK(a.precision_loss == b.precision_loss);
        }
    }
}

TEST_CASE("norm precision loss flags deep non-units only") {
    auto low = RingContext::make(3, 1);
    CHECK(absolute_norm(low->pi()).precision_loss); // norm 3 vanishes mod 3
    auto ctx = RingContext::make(3, 4);
    const auto r = absolute_norm(ctx->pi());
    CHECK(r.value.residue == 3);
    CHECK(!r.precision_loss);
    Rng rng(5);
    CHECK(!absolute_norm(random_unit(ctx, rng)).precision_loss);
}

TEST_CASE("half norm") {
    auto ctx = RingContext::make(7, 4);
    CHECK(half_norm(ctx->zeta()) == ctx->one());
    CHECK(half_norm(ctx->from_integer(4)) == ctx->from_integer(16));
    for (u64 a : {u64(1), u64(3), u64(5)}) {
        const CycloElem w = ctx->varpi();
        CHECK(half_norm(ctx->one() + w.pow(a)) == ctx->one() - w.pow(2 * a));
    }
    Rng rng(99);
    for (int i = 0; i < 30; ++i) {
        const CycloElem x = random_element(ctx, rng);
        const CycloElem h = half_norm(x);
        CHECK(sigma_minus1(h) == h);
    }
}

TEST_CASE("full norm factors through the half norm") {
    for (u64 p : {u64(5), u64(7), u64(11)}) {
        auto ctx = RingContext::make(p, 4);
        Rng rng(p + 101);
        for (int i = 0; i < 25; ++i) {
            const CycloElem x = random_element(ctx, rng);
            CycloElem lhs = x;
            for (u64 j = 2; j < p; ++j) lhs *= galois_apply(x, static_cast<i64>(j));
            const CycloElem h = half_norm(x);
            CycloElem rhs = ctx->one();
            for (u64 j = 1; j <= (p - 1) / 2; ++j) rhs *= galois_apply(h, static_cast<i64>(j));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("teichmuller representatives") {
    auto ctx52 = RingContext::make(5, 2);
    CHECK(ctx52->teichmuller(1) == ctx52->one());
    CHECK(ctx52->teichmuller(2) == ctx52->from_residue(7)); // 7^4 = 2401 = 1 mod 25
    CHECK_THROWS_AS(ctx52->teichmuller(5), DivisibleByP);
    CHECK_THROWS_AS(ctx52->teichmuller(0), DivisibleByP);

    for (u64 p : {u64(3), u64(5), u64(7)}) {
        auto ctx = RingContext::make(p, 4);
        for (u64 a = 1; a < p; ++a) {
            const CycloElem t = ctx->teichmuller(static_cast<i64>(a));
            CHECK(t.pow(p - 1) == ctx->one());
            CHECK(residue_mod_p(t) == a);
            for (u64 b = 1; b < p; ++b)
                CHECK(ctx->teichmuller(static_cast<i64>(a)) * ctx->teichmuller(static_cast<i64>(b)) ==
                      ctx->teichmuller(static_cast<i64>(a * b % p)));
        }
    }
}

TEST_CASE("canonical varpi") {
    for (u64 p : {u64(3), u64(5), u64(7), u64(11), u64(13)}) {
        auto ctx = RingContext::make(p, 4);
        const CycloElem w = ctx->varpi();
        CHECK(w.pow(p - 1) + ctx->from_integer(static_cast<i64>(p)) == ctx->zero());
        CHECK(pi_valuation(w) == ValuationResult::exact(1));
        CHECK(pi_valuation(w - ctx->pi()).geq(2));
        CHECK(sigma_minus1(w) == -w);
    }
    auto ctx34 = RingContext::make(3, 4);
    CHECK(ctx34->varpi() * ctx34->varpi() == ctx34->from_integer(-3));

    auto shallow = RingContext::make(5, 1);
    CHECK_THROWS_AS(shallow->varpi(), PrecisionTooLow);
}

TEST_CASE("pth root: anchors") {
    auto ctx = RingContext::make(5, 4);
    const CycloElem u = ctx->one() + ctx->pi() * ctx->pi();
    const CycloElem x = u.pow(5);
    const CycloElem root = pth_root(x);
    CHECK(root.pow(5) == x);
    // the canonical root agrees with u at the contracted precision
    CHECK(pi_valuation(root - u).geq(ctx->pi_precision() - 4));

    CHECK(pth_root(ctx->one()) == ctx->one());
    CHECK_THROWS_AS(pth_root(ctx->from_integer(6)), NotAPthPower); // 1 + p
    CHECK_THROWS_AS(pth_root(ctx->pi()), NotAUnit);

    auto shallow = RingContext::make(5, 2); // N = 8 < 10
    CHECK_THROWS_AS(pth_root(shallow->one()), PrecisionTooLow);
}

TEST_CASE("pth root: random round trips") {
    for (u64 p : {u64(3), u64(5), u64(7), u64(11)}) {
        auto ctx = RingContext::make(p, 4);
        Rng rng(p * 7 + 1);
        for (int i = 0; i < 25; ++i) {
            const CycloElem y = random_unit(ctx, rng);
            const CycloElem x = y.pow(p);
            const CycloElem root = pth_root(x);
            CHECK(root.pow(p) == x);
            // roots differ from y by a p-th root of unity, so their p-th
            // powers agree exactly
            CHECK(pi_valuation(root.pow(p) - y.pow(p)).geq(ctx->pi_precision()));
        }
    }
}

TEST_CASE("pi basis round trip") {
    for (u64 p : {u64(3), u64(7), u64(13)}) {
        auto ctx = RingContext::make(p, 3);
        Rng rng(p ^ 42);
        for (int i = 0; i < 30; ++i) {
            const CycloElem x = random_element(ctx, rng);
            CHECK(ctx->from_pi_coeffs(pi_coefficients(x)) == x);
        }
    }
}
