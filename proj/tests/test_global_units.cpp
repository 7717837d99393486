#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/multiprecision/cpp_int.hpp>

#include "kummerlab/bernoulli.hpp"
#include "kummerlab/global_units.hpp"
#include "kummerlab/sampling.hpp"

using namespace kummerlab;

TEST_CASE("cyclotomic unit construction") {
    auto ctx = RingContext::make(7, 4);
    CHECK(cyclotomic_unit(7, 2).local_image(ctx) == ctx->one() + ctx->zeta());
    CHECK_THROWS_AS(cyclotomic_unit(7, 7), BadIndex);
    CHECK_THROWS_AS(cyclotomic_unit(7, 1), BadIndex);
    CHECK_THROWS_AS(cyclotomic_unit(7, 0), BadIndex);
}

TEST_CASE("generator norms are trivial") {
    for (u64 p : {u64(5), u64(7), u64(11)}) {
        auto ctx = RingContext::make(p, 4);
        for (const auto& gen : global_unit_generators(p))
            CHECK(absolute_norm(gen.local_image(ctx)).value.residue == 1);
        for (u64 a = 2; a <= p - 1; ++a)
            CHECK(absolute_norm(cyclotomic_unit(p, a).local_image(ctx)).value.residue == 1);
    }
}

TEST_CASE("split into a root of unity and a real part") {
    auto ctx = RingContext::make(5, 4);
    {
        const auto s = split_real(-ctx->zeta().pow(3));
        CHECK(s.xi == ctx->zeta().pow(3));
        CHECK(s.w == -ctx->one());
    }
    {
        const auto s = split_real(ctx->from_integer(6)); // sigma_{-1}-fixed
        CHECK(s.xi == ctx->one());
        CHECK(s.w == ctx->from_integer(6));
    }
    for (u64 p : {u64(5), u64(7), u64(13)}) {
        auto c = RingContext::make(p, 4);
        for (const auto& gen : global_unit_generators(p)) {
            const CycloElem u = gen.local_image(c);
            const auto s = split_real(u);
            CHECK(s.xi.pow(p) == c->one());
            CHECK(sigma_minus1(s.w) == s.w);
            CHECK(s.xi * s.w == u);
        }
    }
    CHECK_THROWS_AS(split_real(ctx->pi()), NotAUnit);
}

TEST_CASE("global image dimensions") {
    {
        auto ctx = RingContext::make(3, 4);
        CHECK(global_image(ctx).dim() == 1); // only -zeta, whose class pivots at level 1
    }
    {
        auto ctx = RingContext::make(5, 4);
        const auto image = global_image(ctx);
        CHECK(image.dim() <= 2);
        const CycloElem c2 = cyclotomic_unit(5, 2).local_image(ctx);
        CHECK(image.contains(digit_coordinates(c2.pow(5)))); // the zero vector
    }
}

TEST_CASE("trivial intersections with certificates") {
    for (u64 p : {u64(5), u64(7)}) {
        auto ctx = RingContext::make(p, 4);
        const auto rep = check_prop3_prop6(ctx, 400, 99 + p);
        CHECK(rep.dim_meet_primar == 0);
        CHECK(rep.dim_meet_level_pm1 == 0);
        CHECK(rep.primar_products >= 1);
        CHECK(rep.certified == rep.primar_products);
        for (const auto& cert : rep.certificates) {
            REQUIRE(cert.granted);
            CHECK(cert.root->pow(p) != ctx->zero()); // sanity: roots are stored
        }
    }
}

TEST_CASE("local certificates") {
    auto ctx = RingContext::make(7, 4);
    {
        const CycloElem image = cyclotomic_unit(7, 2).local_image(ctx).pow(7);
        const auto cert = kummer_local_certificate(image, "c_2^7");
        REQUIRE(cert.granted);
        CHECK(cert.root->pow(7) == image);
        CHECK(cert.verified_pi_precision == ctx->pi_precision() - 6);
        // the root agrees with c_2 up to a 7th root of unity
        const CycloElem ratio = *cert.root * invert(cyclotomic_unit(7, 2).local_image(ctx));
        CHECK(ratio.pow(7) == ctx->one());
    }
    {
        const auto cert = kummer_local_certificate(cyclotomic_unit(7, 2).local_image(ctx), "c_2");
        CHECK(!cert.granted);
        CHECK(!cert.report.is_primaire);
        CHECK(!cert.report.is_primar);
        CHECK(!cert.refusal.empty());
    }
    {
        const auto cert = kummer_local_certificate(minus_zeta(7).local_image(ctx), "-zeta");
        CHECK(!cert.granted);
        CHECK(cert.report.level == 1);
    }
}

TEST_CASE("regularity of small primes") {
    for (u64 p : {u64(3), u64(5), u64(7), u64(11), u64(13), u64(17), u64(19), u64(23), u64(29), u64(31)}) {
        const auto r = is_regular(p);
        CHECK(r.regular);
        CHECK(r.irregular_indices.empty());
    }
    CHECK(is_regular(37).irregular_indices == std::vector<unsigned>{32});
    CHECK(is_regular(59).irregular_indices == std::vector<unsigned>{44});
    CHECK(is_regular(67).irregular_indices == std::vector<unsigned>{58});
    CHECK_THROWS_AS(is_regular(151), OutOfConfiguredRange);
    CHECK_THROWS_AS(is_regular(2), NotAnOddPrime);
    CHECK_THROWS_AS(is_regular(15), NotAnOddPrime);
}

TEST_CASE("bernoulli table: classical values") {
    const auto table = bernoulli_table(12);
    auto entry = [&](unsigned n) { return table[n].numerator + "/" + table[n].denominator; };
    CHECK(entry(0) == "1/1");
    CHECK(entry(1) == "1/2");
    CHECK(entry(2) == "1/6");
    CHECK(entry(3) == "0/1");
    CHECK(entry(4) == "-1/30");
    CHECK(entry(6) == "1/42");
    CHECK(entry(8) == "-1/30");
    CHECK(entry(10) == "5/66");
    CHECK(entry(12) == "-691/2730");
}

TEST_CASE("bernoulli table agrees with the classical recurrence") {
    // independent oracle: B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j, which uses
    // the B_1 = -1/2 convention; even indices are convention-free.
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    const unsigned n = 60;
    std::vector<cpp_rational> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<cpp_int> binom(m + 2, 0);
        binom[0] = 1;
        for (unsigned row = 1; row <= m + 1; ++row)
            for (unsigned col = row; col > 0; --col) binom[col] += binom[col - 1];
        cpp_rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += cpp_rational(binom[j]) * b[j];
        b[m] = -acc / cpp_rational(m + 1);
    }
    const auto table = bernoulli_table(n);
    for (unsigned m = 0; m <= n; m += 2) {
        CHECK(table[m].numerator == numerator(b[m]).str());
        CHECK(table[m].denominator == denominator(b[m]).str());
    }
}
