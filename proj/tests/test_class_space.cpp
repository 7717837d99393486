#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kummerlab/brute_force.hpp"
#include "kummerlab/class_space.hpp"
#include "kummerlab/classifier.hpp"
#include "kummerlab/sampling.hpp"

using namespace kummerlab;

namespace {

UnitClassVector unit_vector(u64 p, u64 level, u64 digit = 1) {
    UnitClassVector v{p, std::vector<u64>(p, 0)};
    v.digits[level - 1] = digit;
    return v;
}

} // namespace

TEST_CASE("digit coordinates of frame units and p-th powers") {
    for (u64 p : {u64(5), u64(7)}) {
        auto ctx = RingContext::make(p, 4);
        CHECK(digit_coordinates(frame_unit(ctx, 3)) == unit_vector(p, 3));
        Rng rng(p);
        for (int i = 0; i < 10; ++i)
            CHECK(digit_coordinates(random_unit(ctx, rng).pow(p)).is_zero());
    }
}

TEST_CASE("digit coordinates of 1 + p pivot at level p-1") {
    for (u64 p : {u64(5), u64(7), u64(11)}) {
        auto ctx = RingContext::make(p, 4);
        const auto v = digit_coordinates(ctx->from_integer(static_cast<i64>(1 + p)));
        CHECK(v.pivot_level() == p - 1);
        for (u64 n = 1; n < p - 1; ++n) CHECK(v.digits[n - 1] == 0);
    }
}

TEST_CASE("digit coordinates are a homomorphism onto F_p^p") {
    for (u64 p : {u64(3), u64(5), u64(7)}) {
        auto ctx = RingContext::make(p, 4);
        Rng rng(p * 3);
        for (int i = 0; i < 40; ++i) {
            const CycloElem x = random_unit(ctx, rng);
            const CycloElem y = random_unit(ctx, rng);
            CHECK(digit_coordinates(x * y) == digit_coordinates(x) + digit_coordinates(y));
        }
    }
}

TEST_CASE("reconstruction returns to the same class") {
    auto ctx = RingContext::make(7, 4);
    Rng rng(70);
    for (int i = 0; i < 20; ++i) {
        const CycloElem x = random_unit(ctx, rng);
        const auto v = digit_coordinates(x);
        const CycloElem ratio = x * invert(reconstruct_class(ctx, v));
        CHECK(digit_coordinates(ratio).is_zero());
        const CycloElem root = pth_root(ratio); // must exist: the class is trivial
        CHECK(root.pow(7) == ratio);
    }
    // echelon rows reproduce themselves
    for (u64 a = 1; a <= 7; ++a) {
        const auto v = unit_vector(7, a, 1 + a % 6);
        CHECK(digit_coordinates(reconstruct_class(ctx, v)) == v);
    }
}

TEST_CASE("span") {
    const u64 p = 7;
    CHECK(span(p, {}).dim() == 0);
    const auto v = unit_vector(p, 3, 2);
    CHECK(span(p, {v, v}).dim() == 1);
    CHECK(span(p, {v, v.scaled(3)}).dim() == 1);

    auto ctx = RingContext::make(p, 4);
    std::vector<UnitClassVector> tail;
    for (u64 a = 4; a <= p; ++a) tail.push_back(digit_coordinates(frame_unit(ctx, a)));
    CHECK(span(p, tail).dim() == 4);
}

TEST_CASE("filtration subspace dimensions") {
    for (u64 p : {u64(3), u64(5), u64(7), u64(11), u64(31)}) {
        auto ctx = RingContext::make(p, 4);
        for (u64 n = 1; n <= p + 1; ++n)
            CHECK(filtration_subspace(ctx, n).dim() == p + 1 - n);
        CHECK(filtration_subspace(ctx, p - 1).dim() == 2);
        CHECK(filtration_subspace(ctx, p).dim() == 1);
        CHECK(filtration_subspace(ctx, p + 1).dim() == 0);
        CHECK_THROWS_AS(filtration_subspace(ctx, 0), BadIndex);
        CHECK_THROWS_AS(filtration_subspace(ctx, p + 2), BadIndex);
    }
}

TEST_CASE("primar subspace dimensions and the p = 3 equality") {
    {
        auto ctx = RingContext::make(3, 4);
        const auto s = primar_subspace(ctx);
        CHECK(s.dim() == 2);
        CHECK(s == filtration_subspace(ctx, 2));
    }
    {
        auto ctx = RingContext::make(7, 4);
        CHECK(primar_extra_levels(7) == std::vector<u64>{3, 5});
        CHECK(primar_subspace(ctx).dim() == 4);
    }
    {
        auto ctx = RingContext::make(31, 4);
        CHECK(primar_extra_levels(31).size() == 8);
        CHECK(primar_subspace(ctx).dim() == 10);
        CHECK(primar_subspace(ctx) != filtration_subspace(ctx, 30));
    }
    CHECK(primar_extra_levels(3).empty());
    CHECK(primar_extra_levels(5) == std::vector<u64>{3});
}

TEST_CASE("containment queries") {
    for (u64 p : {u64(5), u64(7), u64(11)}) {
        auto ctx = RingContext::make(p, 4);
        const UnitClassVector zero{p, std::vector<u64>(p, 0)};
        CHECK(filtration_subspace(ctx, p).contains(zero));
        CHECK(!filtration_subspace(ctx, p).contains(
            digit_coordinates(ctx->from_integer(static_cast<i64>(1 + p)))));
        CHECK(primar_subspace(ctx).contains(
            digit_coordinates(ctx->one() + ctx->varpi().pow(p - 2))));
    }
}

TEST_CASE("subspace intersection") {
    auto ctx = RingContext::make(7, 4);
    const auto a = filtration_subspace(ctx, 3);
    const auto b = filtration_subspace(ctx, 5);
    CHECK(intersect(a, b) == b); // nested pieces
    const auto primar = primar_subspace(ctx);
    CHECK(intersect(primar, filtration_subspace(ctx, 6)).dim() == 2);
}

TEST_CASE("brute-force model: sizes and budget") {
    BruteForceModel m34(3, 4);
    CHECK(m34.element_count() == 81);
    CHECK(m34.unit_count() == 54);
    BruteForceModel m56(5, 6);
    CHECK(m56.element_count() == 15625);
    CHECK(m56.unit_count() == 12500);
    CHECK_THROWS_AS(BruteForceModel(7, 8, 1000000), TooLarge);
    CHECK_THROWS_AS(BruteForceModel(5, 7), BadIndex); // m > p+1
}

TEST_CASE("brute-force model: round trip and ring structure") {
    BruteForceModel model(5, 6);
    auto big = RingContext::make(5, 4);
    Rng rng(5005);
    for (int i = 0; i < 50; ++i) {
        const u64 idx = rng.below(model.element_count());
        CHECK(model.reduce(model.lift(idx)) == idx);
        CHECK(model.reduce(model.lift(idx, big)) == idx);
        const u64 jdx = rng.below(model.element_count());
        // reduction commutes with multiplication
        CHECK(model.mul(idx, jdx) == model.reduce(model.lift(idx, big) * model.lift(jdx, big)));
    }
}

TEST_CASE("mod-p model: p-th powers are the prime-field scalars") {
    for (u64 p : {u64(3), u64(5)}) {
        BruteForceModel model(p, static_cast<int>(p) - 1);
        CHECK(model.pth_powers().size() == p - 1);
        for (u64 a = 1; a < p; ++a) {
            const u64 key = model.reduce(model.context()->from_residue(a));
            CHECK(model.is_pth_power(key));
        }
        // digit-sum identity across the whole quotient
        for (u64 idx = 0; idx < model.element_count(); ++idx) {
            const CycloElem z = model.lift(idx);
            u64 sum = 0;
            for (u64 v : z.coeffs()) sum = (sum + v) % p;
            CHECK(z.pow(p) == model.context()->from_residue(sum));
        }
    }
}

TEST_CASE("fast paths agree with the brute-force model on the whole group") {
    for (u64 p : {u64(3), u64(5)}) {
        BruteForceModel model(p, static_cast<int>(p) + 1);
        auto ctx = RingContext::make(p, 4);
        std::vector<Subspace> filt;
        for (u64 n = 1; n <= p + 1; ++n) filt.push_back(filtration_subspace(ctx, n));
        const Subspace primar = primar_subspace(ctx);

        for (u64 idx = 0; idx < model.element_count(); ++idx) {
            if (!model.is_unit_index(idx)) continue;
            const CycloElem x = model.lift(idx, ctx);
            const auto rep = classify(x);
            REQUIRE(rep.is_pth_power == model.is_pth_power(idx));
            REQUIRE(rep.is_p_primary == model.is_p_primary_def(idx));
            REQUIRE(rep.is_primaire == model.is_primaire_def(idx));
            REQUIRE(rep.is_primar == model.is_primar_def(idx));

            const auto coords = digit_coordinates(x);
            REQUIRE(primar.contains(coords) == model.is_primar_def(idx));
            for (u64 n = 1; n <= p + 1; ++n)
                REQUIRE(filt[n - 1].contains(coords) ==
                        model.in_filtration_class(idx, static_cast<int>(n)));
        }
    }
}
