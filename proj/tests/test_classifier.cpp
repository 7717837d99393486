#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kummerlab/classifier.hpp"
#include "kummerlab/sampling.hpp"

using namespace kummerlab;

TEST_CASE("teich split") {
    auto ctx = RingContext::make(5, 4);
    {
        const auto s = teich_split(ctx->one() + ctx->pi());
        CHECK(s.residue == 1);
        CHECK(s.one_unit == ctx->one() + ctx->pi());
    }
    {
        const auto s = teich_split(ctx->from_integer(2));
        CHECK(s.residue == 2);
        CHECK(pi_valuation(s.one_unit - ctx->one()).geq(1));
        CHECK(ctx->teichmuller(2) * s.one_unit == ctx->from_integer(2));
    }
    {
        const auto s = teich_split(ctx->zeta());
        CHECK(s.residue == 1);
        CHECK(s.one_unit == ctx->zeta());
    }
    CHECK_THROWS_AS(teich_split(ctx->pi()), NotAUnit);
}

TEST_CASE("unit class level") {
    for (u64 p : {u64(5), u64(7), u64(11)}) {
        auto ctx = RingContext::make(p, 4);
        CHECK(unit_class_level(ctx->from_integer(static_cast<i64>(1 + p))) == static_cast<int>(p) - 1);
        CHECK(unit_class_level(ctx->zeta()) == 1);
        const CycloElem u = ctx->one() + ctx->pi() * ctx->pi();
        CHECK(unit_class_level(u.pow(p)) == static_cast<int>(p) + 1);
    }
    auto shallow = RingContext::make(7, 1); // N = 6 < 8
    CHECK_THROWS_AS(unit_class_level(shallow->one()), PrecisionTooLow);
}

TEST_CASE("primaire predicate") {
    auto ctx = RingContext::make(5, 4);
    {
        const auto [ok, witness] = is_primaire(ctx->from_integer(6));
        CHECK(ok);
        CHECK(*witness == 6);
    }
    CHECK(!is_primaire(ctx->zeta()).first);
    {
        const auto [ok, witness] = is_primaire(ctx->from_integer(7));
        CHECK(ok);
        CHECK(*witness == 7);
    }
    CHECK_THROWS_AS(is_primaire(ctx->pi()), NotAUnit);
}

TEST_CASE("primar predicate") {
    {
        auto ctx = RingContext::make(7, 4);
        const auto [ok, w] = is_primar(ctx->one() + ctx->varpi().pow(5));
        CHECK(ok);
        CHECK(w->first == 1);
        CHECK(w->second == 1);
    }
    {
        auto ctx = RingContext::make(5, 4);
        CHECK(!is_primar(ctx->one() + ctx->varpi()).first);
        const CycloElem u = ctx->one() + ctx->pi() * ctx->pi();
        CHECK(is_primar(u.pow(5)).first);
    }
}

TEST_CASE("classification of the separating units") {
    for (u64 p : {u64(5), u64(7), u64(11), u64(13)}) {
        auto ctx = RingContext::make(p, 4);
        const auto r = classify(ctx->from_integer(static_cast<i64>(1 + p)));
        CHECK(r.is_primaire);
        CHECK(r.is_primar);
        CHECK(!r.is_p_primary);
        CHECK(!r.is_pth_power);
        CHECK(r.level == static_cast<int>(p) - 1);
        CHECK(r.teichmuller_residue == 1);
        CHECK(r.precision_used == ctx->pi_precision());
    }
    {
        auto ctx = RingContext::make(11, 4);
        const auto r = classify(ctx->one() + ctx->varpi().pow(9));
        CHECK(r.is_primar);
        CHECK(!r.is_primaire);
        CHECK(!r.is_p_primary);
    }
    {
        auto ctx = RingContext::make(5, 4);
        const auto r = classify(ctx->one());
        CHECK(r.is_pth_power);
        CHECK(r.is_p_primary);
        CHECK(r.is_primaire);
        CHECK(r.is_primar);
        CHECK(r.level == 6);
    }
    auto ctx = RingContext::make(5, 4);
    CHECK_THROWS_AS(classify(ctx->pi()), NotAUnit);
}

TEST_CASE("implication chain on random units") {
    for (u64 p : {u64(3), u64(5), u64(7), u64(11)}) {
        auto ctx = RingContext::make(p, 4);
        Rng rng(p * 17);
        for (int i = 0; i < 300; ++i) {
            const auto r = classify(random_unit(ctx, rng));
            if (r.is_pth_power) CHECK(r.is_p_primary);
            if (r.is_p_primary) CHECK(r.is_primaire);
            if (r.is_primaire) CHECK(r.is_primar);
            CHECK((r.level >= static_cast<int>(p) + 1) == r.is_pth_power);
            CHECK((r.level >= static_cast<int>(p)) == r.is_p_primary);
            // scalar congruence mod p pins the 1-unit part at level >= p-1
            CHECK((r.level >= static_cast<int>(p) - 1) == r.is_primaire);
        }
    }
}

TEST_CASE("primar and primaire coincide at p = 3") {
    auto ctx = RingContext::make(3, 4);
    Rng rng(33);
    for (int i = 0; i < 1000; ++i) {
        const CycloElem x = random_unit(ctx, rng);
        CHECK(is_primaire(x).first == is_primar(x).first);
    }
}
