#include "kummerlab/acceptance.hpp"

#include <atomic>
#include <chrono>
#include <mutex>

#include "kummerlab/bernoulli.hpp"
#include "kummerlab/brute_force.hpp"
#include "kummerlab/class_space.hpp"
#include "kummerlab/classifier.hpp"
#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/global_units.hpp"
#include "kummerlab/parallel.hpp"
#include "kummerlab/sampling.hpp"
#include "kummerlab/tame.hpp"

namespace kummerlab {

namespace {

constexpr u64 kSeedBase = 0x6b756d6d65724cULL;

struct Check {
    bool ok = true;
    std::string detail;
    std::mutex mu;

    void fail(const std::string& msg) {
        std::lock_guard<std::mutex> lock(mu);
        ok = false;
        if (detail.empty()) detail = msg;
        else if (detail.size() < 400) detail += "; " + msg;
    }
    void expect(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
    void note(const std::string& msg) {
        std::lock_guard<std::mutex> lock(mu);
        if (ok && detail.size() < 400) detail += detail.empty() ? msg : "; " + msg;
    }
};

std::vector<u64> odd_primes_up_to(u64 bound) {
    std::vector<u64> out;
    for (u64 p = 3; p <= bound; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

u64 int_pow(u64 base, u64 exp) {
    u64 r = 1;
    while (exp--) r *= base;
    return r;
}

// 1. Filtration dimensions: the brute-force model and the frame-based
//    subspaces must agree elementwise for p in {3,5}; the dimension formula
//    dim U_n = p+1-n must hold across the grid.
void criterion_filtration(const AcceptanceConfig&, Check& c) {
    for (u64 p : {u64(3), u64(5)}) {
        BruteForceModel model(p, static_cast<int>(p) + 1);
        auto ctx = RingContext::make(p, 4);
        std::vector<Subspace> filt;
        for (u64 n = 1; n <= p + 1; ++n) filt.push_back(filtration_subspace(ctx, n));

        std::vector<u64> counts(p + 2, 0);
        for (u64 idx = 0; idx < model.element_count(); ++idx) {
            if (!model.is_unit_index(idx)) continue;
            const UnitClassVector coords = digit_coordinates(model.lift(idx, ctx));
            for (u64 n = 1; n <= p + 1; ++n) {
                const bool oracle = model.in_filtration_class(idx, static_cast<int>(n));
                const bool fast = filt[n - 1].contains(coords);
                c.expect(oracle == fast, "p=" + std::to_string(p) + ": filtration membership mismatch at level " +
                                             std::to_string(n) + ", index " + std::to_string(idx));
                if (oracle) ++counts[n];
            }
        }
        for (u64 n = 1; n <= p + 1; ++n) {
            const u64 expected = (p - 1) * int_pow(p, p + 1 - n);
            c.expect(counts[n] == expected,
                     "p=" + std::to_string(p) + ": level " + std::to_string(n) + " population " +
                         std::to_string(counts[n]) + " != " + std::to_string(expected));
            c.expect(filt[n - 1].dim() == p + 1 - n,
                     "p=" + std::to_string(p) + ": dim at level " + std::to_string(n));
        }
    }
    for (u64 p : odd_primes_up_to(31)) {
        if (p < 7) continue;
        auto ctx = RingContext::make(p, 4);
        for (u64 n = 1; n <= p + 1; ++n)
            c.expect(filtration_subspace(ctx, n).dim() == p + 1 - n,
                     "p=" + std::to_string(p) + ": dim formula fails at level " + std::to_string(n));
    }
}

// 2. The two separating units behave as stated: 1+p is primaire but not
//    p-primary; 1+varpi^(p-2) is primar but not primaire for p > 3 and not
//    primar at all for p = 3.
void criterion_counterexamples(const AcceptanceConfig&, Check& c) {
    for (u64 p : {u64(5), u64(7), u64(11), u64(13)}) {
        auto ctx = RingContext::make(p, 4);
        const auto r1 = classify(ctx->from_integer(static_cast<i64>(1 + p)));
        c.expect(r1.is_primaire && !r1.is_p_primary && r1.level == static_cast<int>(p) - 1,
                 "p=" + std::to_string(p) + ": 1+p must be primaire, not p-primary, at level p-1");
        const auto r2 = classify(ctx->one() + ctx->varpi().pow(p - 2));
        c.expect(r2.is_primar && !r2.is_primaire,
                 "p=" + std::to_string(p) + ": 1+varpi^(p-2) must be primar but not primaire");
    }
    auto ctx3 = RingContext::make(3, 4);
    const auto r3 = classify(ctx3->one() + ctx3->varpi());
    c.expect(!r3.is_primar, "p=3: 1+varpi must not be primar");
}

// 3. Chain strictness: witnesses separating the four notions for every
//    prime in the grid, and the primar/primaire equivalence at p = 3.
void criterion_chain(const AcceptanceConfig&, Check& c) {
    for (u64 p : odd_primes_up_to(31)) {
        if (p < 5) continue;
        auto ctx = RingContext::make(p, 4);
        const auto a = classify(frame_unit(ctx, p));
        c.expect(a.is_p_primary && !a.is_pth_power,
                 "p=" + std::to_string(p) + ": 1+varpi^p must separate p-primary from p-th power");
        const auto b = classify(ctx->from_integer(static_cast<i64>(1 + p)));
        c.expect(b.is_primaire && !b.is_p_primary,
                 "p=" + std::to_string(p) + ": 1+p must separate primaire from p-primary");
        const auto d = classify(ctx->one() + ctx->varpi().pow(p - 2));
        c.expect(d.is_primar && !d.is_primaire,
                 "p=" + std::to_string(p) + ": 1+varpi^(p-2) must separate primar from primaire");
        const auto e = classify((ctx->one() + ctx->pi() * ctx->pi()).pow(p));
        c.expect(e.is_pth_power, "p=" + std::to_string(p) + ": (1+pi^2)^p must be a p-th power");
        const bool equality = primar_subspace(ctx) == filtration_subspace(ctx, p - 1);
        c.expect(!equality, "p=" + std::to_string(p) + ": primar classes must exceed the level-(p-1) piece");
    }
    // p = 3: equivalence on the full brute-force group and on random units
    {
        BruteForceModel model(3, 4);
        for (u64 idx = 0; idx < model.element_count(); ++idx) {
            if (!model.is_unit_index(idx)) continue;
            c.expect(model.is_primaire_def(idx) == model.is_primar_def(idx),
                     "p=3: primaire/primar differ on the brute-force group at index " + std::to_string(idx));
        }
        auto ctx = RingContext::make(3, 4);
        c.expect(primar_subspace(ctx) == filtration_subspace(ctx, 2),
                 "p=3: primar classes must equal the level-2 piece");
        Rng rng(kSeedBase ^ 3);
        for (int trial = 0; trial < 1000; ++trial) {
            const CycloElem x = random_unit(ctx, rng);
            c.expect(is_primaire(x).first == is_primar(x).first,
                     "p=3: primaire/primar differ on a random unit");
        }
    }
}

// 4. Units congruent to a rational unit mod p whose norm is 1 mod p^2 are
//    p-primary: exhaustive for p in {3,5}, constructed samples for {7,11}.
void criterion_norm_descent(const AcceptanceConfig& cfg, Check& c) {
    for (u64 p : {u64(3), u64(5)}) {
        BruteForceModel model(p, static_cast<int>(p) + 1);
        const u64 p2 = p * p;
        for (u64 idx = 0; idx < model.element_count(); ++idx) {
            if (!model.is_unit_index(idx) || !model.is_primaire_def(idx)) continue;
            const u64 norm = absolute_norm(model.lift(idx)).value.residue;
            if (norm % p2 != 1 % p2) continue;
            c.expect(model.is_p_primary_def(idx),
                     "p=" + std::to_string(p) + ": norm-one primaire unit is not p-primary at index " +
                         std::to_string(idx));
        }
    }
    const u64 samples = cfg.small_grid ? 1000 : 10000;
    for (u64 p : {u64(7), u64(11)}) {
        auto ctx = RingContext::make(p, 4);
        const u64 pk = ctx->modulus();
        std::atomic<u64> checked{0};
        parallel_chunks(samples, [&](u64 lo, u64 hi) {
            for (u64 s = lo; s < hi; ++s) {
                Rng rng = rng_for_sample(kSeedBase ^ (p * 1000 + 4), s);
                const u64 a = 1 + rng.below(p - 1);
                CycloElem x = ctx->from_residue(a) +
                              ctx->from_integer(static_cast<i64>(p)) * random_element(ctx, rng);
                // force the norm into 1 + p^2 Z_p with a rational scalar
                const u64 norm0 = absolute_norm(x).value.residue;
                const u64 e = ((norm0 + pk - 1) % pk) / p % p;
                x *= ctx->from_residue(1 + p * e);
                const u64 norm1 = absolute_norm(x).value.residue;
                if (((norm1 + pk - 1) % pk) % (p * p) != 0) {
                    c.fail("p=" + std::to_string(p) + ": norm adjustment failed at sample " + std::to_string(s));
                    continue;
                }
                if (!is_primaire(x).first) {
                    c.fail("p=" + std::to_string(p) + ": constructed sample is not primaire");
                    continue;
                }
                c.expect(unit_class_level(x) >= static_cast<int>(p),
                         "p=" + std::to_string(p) + ": norm-one primaire sample " + std::to_string(s) +
                             " is not p-primary");
                checked.fetch_add(1, std::memory_order_relaxed);
            }
        });
        c.expect(checked.load() == samples, "p=" + std::to_string(p) + ": sample construction failed");
    }
}

// 5. Mod p, the p-th powers of the units are exactly the prime-field scalars,
//    and z^p equals the coefficient sum for every element.
void criterion_residue_powers(const AcceptanceConfig&, Check& c) {
    for (u64 p : {u64(3), u64(5), u64(7)}) {
        BruteForceModel model(p, static_cast<int>(p) - 1);
        const auto& powers = model.pth_powers();
        c.expect(powers.size() == p - 1,
                 "p=" + std::to_string(p) + ": expected p-1 distinct p-th powers, got " +
                     std::to_string(powers.size()));
        for (u64 a = 1; a < p; ++a) {
            const u64 key = model.reduce(model.context()->from_residue(a));
            c.expect(std::binary_search(powers.begin(), powers.end(), key),
                     "p=" + std::to_string(p) + ": scalar " + std::to_string(a) + " missing from the p-th powers");
        }
        for (u64 idx = 0; idx < model.element_count(); ++idx) {
            const CycloElem z = model.lift(idx);
            u64 sum = 0;
            for (u64 v : z.coeffs()) sum = (sum + v) % p;
            if (z.pow(p) != model.context()->from_residue(sum)) {
                c.fail("p=" + std::to_string(p) + ": digit-sum identity fails at index " + std::to_string(idx));
                break;
            }
        }
    }
}

// 6. Tame norm filtration: over the (p, e, r) grid, a unit of level re whose
//    norm is trivial one level deeper lies one level deeper itself.
void criterion_tame(const AcceptanceConfig& cfg, Check& c) {
    const u64 per_cell = cfg.small_grid ? 250 : 1000;
    for (u64 p : {u64(2), u64(3), u64(5), u64(7)}) {
        for (u64 e : {u64(2), u64(3), u64(4), u64(6)}) {
            if (e % p == 0) continue;
            auto ctx = TameContext::make(p, e, 4);
            for (u64 r : {u64(1), u64(2)}) {
                const std::string cell =
                    "cell p=" + std::to_string(p) + " e=" + std::to_string(e) + " r=" + std::to_string(r);
                const Cor5CellReport rep =
                    run_cor5_cell(ctx, r, per_cell, kSeedBase ^ (p * 100000 + e * 100 + r));
                c.expect(rep.violations == 0,
                         cell + ": " + std::to_string(rep.violations) + " violations");
                c.expect(rep.hypothesis_met > 0, cell + ": hypothesis never satisfied");
                c.expect(rep.boundary_level_exact, cell + ": boundary witness level is not exactly re");
                c.expect(rep.boundary_hypothesis_fails,
                         cell + ": boundary witness must fail the norm hypothesis");
            }
        }
    }
}

// 7. The global-unit image meets both the primar classes and the level-(p-1)
//    piece trivially, and every sampled primar product is certified.
void criterion_global(const AcceptanceConfig& cfg, Check& c) {
    std::vector<u64> primes = {5, 7, 11, 13, 17, 19, 23, 29, 31};
    if (cfg.small_grid) primes = {5, 7, 11, 13};
    const u64 samples = cfg.small_grid ? 250 : 1000;
    for (u64 p : primes) {
        auto ctx = RingContext::make(p, 4);
        try {
            const auto rep = check_prop3_prop6(ctx, samples, kSeedBase ^ p);
            c.expect(rep.dim_meet_primar == 0 && rep.dim_meet_level_pm1 == 0,
                     "p=" + std::to_string(p) + ": nontrivial intersection");
            c.expect(rep.primar_products >= 1,
                     "p=" + std::to_string(p) + ": no primar product was exercised");
            c.expect(rep.certified == rep.primar_products,
                     "p=" + std::to_string(p) + ": " + std::to_string(rep.primar_products - rep.certified) +
                         " primar products missing certificates");
        } catch (const Error& e) {
            c.fail("p=" + std::to_string(p) + ": " + e.what());
        }
    }
}

// 8. The dimension of the primar classes over the level-(p-1) piece equals
//    the count of odd a in [3, p-2] with 2a >= p-1.
void criterion_counting(const AcceptanceConfig&, Check& c) {
    for (u64 p : odd_primes_up_to(31)) {
        auto ctx = RingContext::make(p, 4);
        u64 count = 0;
        for (u64 a = 3; a + 2 <= p; a += 2)
            if (2 * a >= p - 1) ++count;
        const auto primar = primar_subspace(ctx);
        const auto base = filtration_subspace(ctx, p - 1);
        c.expect(primar.dim() - base.dim() == count,
                 "p=" + std::to_string(p) + ": primar dimension over the base piece != " + std::to_string(count));
        c.expect(primar.dim() == 2 + count, "p=" + std::to_string(p) + ": primar dimension != 2 + count");
    }
    const std::vector<std::pair<u64, u64>> spots = {{3, 0}, {5, 1}, {7, 2}, {31, 8}};
    for (auto [p, expected] : spots) {
        c.expect(primar_extra_levels(p).size() == expected,
                 "p=" + std::to_string(p) + ": expected " + std::to_string(expected) + " extra levels");
    }
}

// 9. Infrastructure: the two norm paths agree exactly, and p-th roots of
//    p-th powers round-trip, on seeded random inputs.
void criterion_infrastructure(const AcceptanceConfig& cfg, Check& c) {
    const u64 samples = cfg.small_grid ? 250 : 1000;
    for (u64 p : {u64(3), u64(5), u64(7), u64(11), u64(13)}) {
        auto ctx = RingContext::make(p, 4);
        parallel_chunks(samples, [&](u64 lo, u64 hi) {
            for (u64 s = lo; s < hi; ++s) {
                Rng rng = rng_for_sample(kSeedBase ^ (p * 1000 + 9), s);
                const CycloElem x = random_element(ctx, rng);
                const NormResult galois = absolute_norm(x);
                const NormResult det = absolute_norm_via_determinant(x);
                if (galois.value.residue != det.value.residue || galois.precision_loss != det.precision_loss) {
                    c.fail("p=" + std::to_string(p) + ": norm paths disagree at sample " + std::to_string(s));
                    continue;
                }
                const CycloElem y = random_unit(ctx, rng);
                const CycloElem power = y.pow(p);
                const CycloElem root = pth_root(power);
                if (!pi_valuation(root.pow(p) - power).geq(ctx->pi_precision() - static_cast<long>(p - 1)))
                    c.fail("p=" + std::to_string(p) + ": p-th root round-trip fails at sample " + std::to_string(s));
            }
        });
    }
}

// 10. Regularity via exact Bernoulli numerators.
void criterion_regularity(const AcceptanceConfig&, Check& c) {
    for (u64 p : odd_primes_up_to(31)) {
        const auto r = is_regular(p);
        c.expect(r.regular, "p=" + std::to_string(p) + " must be regular");
    }
    const std::vector<std::pair<u64, unsigned>> irregular = {
        {37, 32}, {59, 44}, {67, 58}, {101, 68}, {103, 24}};
    for (auto [p, index] : irregular) {
        const auto r = is_regular(p);
        c.expect(!r.regular && r.irregular_indices == std::vector<unsigned>{index},
                 "p=" + std::to_string(p) + " must be irregular exactly at index " + std::to_string(index));
    }
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg, std::ostream* progress) {
    struct Entry {
        int id;
        const char* name;
        double budget;
        void (*fn)(const AcceptanceConfig&, Check&);
    };
    const Entry entries[] = {
        {1, "filtration-dimensions", 10.0, criterion_filtration},
        {2, "counterexample-units", 1.0, criterion_counterexamples},
        {3, "chain-strictness", 30.0, criterion_chain},
        {4, "primaire-norm-implies-p-primary", 60.0, criterion_norm_descent},
        {5, "residue-pth-powers", 30.0, criterion_residue_powers},
        {6, "tame-norm-filtration", 60.0, criterion_tame},
        {7, "global-units-trivial-intersection", 120.0, criterion_global},
        {8, "primar-dimension-count", 10.0, criterion_counting},
        {9, "norm-dual-path-and-root-roundtrip", 60.0, criterion_infrastructure},
        {10, "regularity-check", 30.0, criterion_regularity},
    };

    std::vector<CriterionResult> results;
    for (const auto& entry : entries) {
        CriterionResult r;
        r.id = entry.id;
        r.name = entry.name;
        r.budget_seconds = entry.budget;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            entry.fn(cfg, check);
        } catch (const std::exception& e) {
            check.fail(std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.pass = check.ok;
        r.detail = check.detail;
        if (r.pass && r.seconds > r.budget_seconds) {
            r.pass = false;
            r.detail = "runtime budget exceeded";
        }
        if (progress) {
            (*progress) << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << "  ("
                        << r.seconds << " s, budget " << r.budget_seconds << " s)";
            if (!r.pass && !r.detail.empty()) (*progress) << "  -- " << r.detail;
            (*progress) << std::endl;
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

} // namespace kummerlab
