#include "kummerlab/tame.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>

#include "kummerlab/det.hpp"
#include "kummerlab/parallel.hpp"
#include "kummerlab/sampling.hpp"

namespace kummerlab {

std::shared_ptr<const TameContext> TameContext::make(u64 p, u64 e, int k) {
    if (!is_prime(p)) throw NotAPrime("tame context: p = " + std::to_string(p) + " is not prime");
    if (e < 2) throw BadDegree("tame context: degree must be at least 2");
    if (e % p == 0) throw WildRamification("tame context: p divides the ramification index");
    if (k < 1) throw BadPrecision("tame context: coefficient precision k must be at least 1");

    auto ctx = std::shared_ptr<TameContext>(new TameContext());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->k_ = k;
    ctx->pk_ = checked_pow(p, k, u64(1) << 62);
    return ctx;
}

TameElem TameContext::zero() const {
    return TameElem(shared_from_this(), std::vector<u64>(e_, 0));
}

TameElem TameContext::one() const { return from_residue(1 % pk_); }

TameElem TameContext::uniformiser() const {
    std::vector<u64> c(e_, 0);
    c[1] = 1;
    return TameElem(shared_from_this(), std::move(c));
}

TameElem TameContext::from_integer(i64 value) const {
    return from_residue(reduce_signed(value, pk_));
}

TameElem TameContext::from_residue(u64 residue) const {
    std::vector<u64> c(e_, 0);
    c[0] = residue % pk_;
    return TameElem(shared_from_this(), std::move(c));
}

TameElem TameContext::from_coeffs(std::vector<u64> coeffs) const {
    if (coeffs.size() != e_)
        throw Error("from_coeffs: expected " + std::to_string(e_) + " coefficients");
    for (auto& v : coeffs) v %= pk_;
    return TameElem(shared_from_this(), std::move(coeffs));
}

namespace {

void check_same_ring(const TameElem& x, const TameElem& y) {
    if (!x.context() || !y.context() || !x.context()->same_ring(*y.context()))
        throw ContextMismatch("operands belong to different tame rings");
}

} // namespace

bool TameElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool TameElem::operator==(const TameElem& other) const {
    if (!ctx_ || !other.ctx_) return ctx_ == other.ctx_;
    return ctx_->same_ring(*other.ctx_) && c_ == other.c_;
}

TameElem TameElem::operator+(const TameElem& other) const {
    check_same_ring(*this, other);
    const u64 pk = ctx_->modulus();
    std::vector<u64> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = (c_[i] + other.c_[i]) % pk;
    return TameElem(ctx_, std::move(out));
}

TameElem TameElem::operator-(const TameElem& other) const {
    check_same_ring(*this, other);
    const u64 pk = ctx_->modulus();
    std::vector<u64> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = (c_[i] + pk - other.c_[i]) % pk;
    return TameElem(ctx_, std::move(out));
}

TameElem TameElem::operator-() const {
    const u64 pk = ctx_->modulus();
    std::vector<u64> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] == 0 ? 0 : pk - c_[i];
    return TameElem(ctx_, std::move(out));
}

TameElem TameElem::operator*(const TameElem& other) const {
    check_same_ring(*this, other);
    const u64 pk = ctx_->modulus();
    const u64 p = ctx_->p();
    const std::size_t e = c_.size();
    std::vector<u128> acc(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < e; ++j) {
            if (other.c_[j] == 0) continue;
            acc[i + j] += mul_mod(c_[i], other.c_[j], pk);
        }
    }
    // fold with x^e = -p
    std::vector<u64> out(e);
    for (std::size_t idx = 2 * e - 2; idx >= e; --idx) {
        const u64 t = static_cast<u64>(acc[idx] % pk);
        acc[idx - e] += pk - mul_mod(t, p % pk, pk);
    }
    for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<u64>(acc[i] % pk);
    return TameElem(ctx_, std::move(out));
}

TameElem TameElem::pow(u64 exp) const {
    TameElem result = ctx_->one();
    TameElem base = *this;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

ValuationResult tame_valuation(const TameElem& x) {
    const auto& ctx = *x.context();
    const long e = static_cast<long>(ctx.e());
    long best = LONG_MAX;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] == 0) continue;
        const int l = p_valuation(x.coeffs()[i], ctx.p(), ctx.k());
        best = std::min(best, static_cast<long>(i) + e * l);
    }
    if (best == LONG_MAX) return ValuationResult::at_least(ctx.pi_precision());
    return ValuationResult::exact(best);
}

bool tame_is_unit(const TameElem& x) {
    return x.coeffs()[0] % x.context()->p() != 0;
}

PadicScalar tame_norm(const TameElem& x) {
    const auto& ctx = x.context();
    const std::size_t e = ctx->e();
    std::vector<std::vector<u64>> m(e, std::vector<u64>(e, 0));
    TameElem col = x;
    const TameElem u = ctx->uniformiser();
    for (std::size_t j = 0; j < e; ++j) {
        for (std::size_t i = 0; i < e; ++i) m[i][j] = col.coeffs()[i];
        if (j + 1 < e) col *= u;
    }
    return PadicScalar{det_mod(m, ctx->modulus())};
}

Cor5Verdict check_cor5_sample(const TameElem& x, u64 r) {
    const auto& ctx = x.context();
    const long e = static_cast<long>(ctx->e());
    const long re = static_cast<long>(r) * e;
    if (r < 1) throw BadIndex("check_cor5_sample: r must be positive");
    if (ctx->pi_precision() <= re + 1)
        throw PrecisionTooLow("check_cor5_sample: needs precision ke > re+1");
    if (!tame_is_unit(x)) throw NotAUnit("check_cor5_sample: element is not a unit");

    const TameElem one = ctx->one();
    const bool in_Ure = tame_valuation(x - one).geq(re);

    const u64 norm = tame_norm(x).residue;
    const u64 diff = (norm + ctx->modulus() - 1) % ctx->modulus();
    const int nv = p_valuation(diff, ctx->p(), ctx->k());
    // x-adic valuation of N(x) - 1 is e * v_p; the hypothesis asks >= re+1,
    // which for an integer valuation means v_p >= r+1
    const bool norm_ok = static_cast<long>(nv) >= static_cast<long>(r) + 1;

    Cor5Verdict v;
    v.hypothesis_met = in_Ure && norm_ok;
    v.conclusion_met = tame_valuation(x - one).geq(re + 1);
    return v;
}

Cor5CellReport run_cor5_cell(const TameContextPtr& ctx, u64 r, u64 samples, u64 seed) {
    const u64 p = ctx->p();
    const u64 e = ctx->e();
    const u64 pk = ctx->modulus();
    u64 pr = 1;
    for (u64 i = 0; i < r; ++i) pr *= p;

    Cor5CellReport rep;
    rep.samples = samples;
    std::atomic<u64> hyp{0}, bad{0};
    parallel_chunks(samples, [&](u64 lo, u64 hi) {
        for (u64 s = lo; s < hi; ++s) {
            Rng rng = rng_for_sample(seed, s);
            std::vector<u64> coeffs(e, 0);
            for (auto& v : coeffs) v = pr * rng.below(pk / pr);
            coeffs[0] = (coeffs[0] + 1) % pk;
            TameElem x = ctx->from_coeffs(std::move(coeffs));
            if (s % 2 == 0) {
                const u64 norm0 = tame_norm(x).residue;
                const u64 d = ((norm0 + pk - 1) % pk) / pr % p;
                const u64 adj = (p - d) % p * inv_mod(e % p, p) % p;
                x *= ctx->from_residue(1 + pr * adj);
            }
            const Cor5Verdict v = check_cor5_sample(x, r);
            if (v.hypothesis_met) {
                hyp.fetch_add(1, std::memory_order_relaxed);
                if (!v.conclusion_met) bad.fetch_add(1, std::memory_order_relaxed);
            }
        }
    });
    rep.hypothesis_met = hyp.load();
    rep.violations = bad.load();

    const TameElem w = ctx->from_integer(static_cast<i64>(1 + pr));
    const Cor5Verdict bv = check_cor5_sample(w, r);
    rep.boundary_level_exact =
        tame_valuation(w - ctx->one()) == ValuationResult::exact(static_cast<long>(r * e));
    rep.boundary_hypothesis_fails = !bv.hypothesis_met && !bv.conclusion_met;
    return rep;
}

} // namespace kummerlab
