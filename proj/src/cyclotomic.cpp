#include "kummerlab/cyclotomic.hpp"

#include <algorithm>
#include <climits>

#include "kummerlab/det.hpp"
#include "kummerlab/sampling.hpp"

namespace kummerlab {

namespace {

// ---- polynomial arithmetic over F_p, used only to seed Newton lifting ----

using Poly = std::vector<u64>; // little endian, trimmed

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a - q*b*X^shift in place
void poly_axpy(Poly& a, const Poly& b, u64 q, std::size_t shift, u64 p) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        u64 sub = mul_mod(q, b[i], p);
        u64& t = a[i + shift];
        t = (t + p - sub) % p;
    }
    poly_trim(a);
}

std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, u64 p) {
    Poly q;
    if (b.empty()) return {q, a};
    u64 lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        u64 c = mul_mod(a.back(), lead_inv, p);
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = (q[shift] + c) % p;
        poly_axpy(a, b, c, shift, p);
        if (!a.empty() && a.size() == b.size() + shift && a.back() != 0) {
            // cancellation failed only if arithmetic is broken
            break;
        }
    }
    poly_trim(q);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    poly_trim(r);
    return r;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    poly_trim(a);
    return a;
}

void check_same_ring(const CycloElem& x, const CycloElem& y) {
    if (!x.context() || !y.context() || !x.context()->same_ring(*y.context()))
        throw ContextMismatch("operands belong to different rings");
}

// shared scan behind pi_valuation / leading_term
struct PiScan {
    bool zero = true;
    long level = 0;
    std::size_t index = 0; // pi-basis slot attaining the minimum
    int p_val = 0;
    u64 coeff = 0;
};

PiScan scan_pi(const CycloElem& x) {
    const auto& ctx = *x.context();
    const auto cp = pi_coefficients(x);
    const long d = static_cast<long>(ctx.degree());
    PiScan best;
    long best_v = LONG_MAX;
    for (std::size_t j = 0; j < cp.size(); ++j) {
        if (cp[j] == 0) continue;
        int l = p_valuation(cp[j], ctx.p(), ctx.k());
        long v = static_cast<long>(j) + d * l;
        if (v < best_v) {
            best_v = v;
            best = PiScan{false, v, j, l, cp[j]};
        }
    }
    return best;
}

} // namespace

// ---------------------------------------------------------------------------
// RingContext
// ---------------------------------------------------------------------------

std::shared_ptr<const RingContext> RingContext::make(u64 p, int k) {
    if (k < 1) throw BadPrecision("coefficient precision k must be at least 1");
    if (p == 2) throw NotAnOddPrime("p = 2 is excluded");
    if (!is_prime(p)) throw NotAnOddPrime("p = " + std::to_string(p) + " is not prime");

    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->p_ = p;
    ctx->k_ = k;
    ctx->deg_ = static_cast<std::size_t>(p - 1);
    ctx->n_ = static_cast<long>(k) * static_cast<long>(p - 1);
    ctx->pk_ = checked_pow(p, k, u64(1) << 62);

    // Pascal triangle mod p^k, rows 0..p-2
    const std::size_t d = ctx->deg_;
    ctx->binom_.assign(d * d, 0);
    for (std::size_t n = 0; n < d; ++n) {
        ctx->binom_[n * d] = 1;
        for (std::size_t r = 1; r <= n; ++r) {
            u64 up = ctx->binom_[(n - 1) * d + r];
            u64 upleft = ctx->binom_[(n - 1) * d + (r - 1)];
            ctx->binom_[n * d + r] = (up + upleft) % ctx->pk_;
        }
    }

    // Teichmuller table: <a> = a^(p^(k-1)) mod p^k
    ctx->teich_.assign(p, 0);
    u64 exponent = ctx->pk_ / p; // p^(k-1)
    for (u64 a = 1; a < p; ++a) ctx->teich_[a] = pow_mod(a, exponent, ctx->pk_);

    if (k >= 2) {
        // varpi = pi * y where y solves y^(p-1) = -p/pi^(p-1), Hensel from y = 1.
        // The quotient p/pi^(p-1) is evaluated exactly as the cyclotomic-unit
        // product prod_{j=2}^{p-1} (1 + zeta + ... + zeta^(j-1)).
        RingContextPtr cptr = ctx;
        CycloElem prod = cptr->one();
        for (u64 j = 2; j < p; ++j) {
            std::vector<u64> c(d, 0);
            for (u64 i = 0; i < j && i < d; ++i) c[i] = 1;
            prod *= cptr->from_coeffs(std::move(c));
        }
        const CycloElem t = -prod;
        const CycloElem one = cptr->one();
        CycloElem y = one;
        bool converged = false;
        for (int iter = 0; iter < 64; ++iter) {
            CycloElem f = y.pow(p - 1) - t;
            if (f.is_zero()) { converged = true; break; }
            CycloElem deriv = cptr->from_integer(static_cast<i64>(p - 1)) * y.pow(p - 2);
            y -= f * invert(deriv);
        }
        if (!converged) throw Error("varpi: Hensel iteration failed to converge");
        CycloElem w = cptr->pi() * y;
        ctx->varpi_coeffs_ = w.coeffs();
    }

    ctx->run_self_checks();
    return ctx;
}

void RingContext::run_self_checks() const {
    const RingContextPtr self = shared_from_this();
    const u64 p = p_;
    const std::size_t d = deg_;

    // basis-change matrices must be exact inverses mod p^k
    auto roundtrip = [&](const std::vector<u64>& coeffs) {
        CycloElem x = self->from_coeffs(coeffs);
        return self->from_pi_coeffs(pi_coefficients(x)) == x;
    };
    if (d <= 128) {
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<u64> e(d, 0);
            e[i] = 1;
            if (!roundtrip(e)) throw Error("context self-check: basis change is not invertible");
        }
    } else {
        Rng rng(0x8d7c3a1f ^ p);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<u64> e(d);
            for (auto& v : e) v = rng.below(pk_);
            if (!roundtrip(e)) throw Error("context self-check: basis change is not invertible");
        }
    }

    // p factors as pi^(p-1) times a unit congruent to -1 mod pi
    CycloElem prod = self->one();
    for (u64 j = 2; j < p; ++j) {
        std::vector<u64> c(d, 0);
        for (u64 i = 0; i < j && i < d; ++i) c[i] = 1;
        prod *= self->from_coeffs(std::move(c));
    }
    if (residue_mod_p(prod) != p - 1)
        throw Error("context self-check: Wilson normalisation failed");
    CycloElem pi_pow = self->pi().pow(p - 1);
    if (pi_pow * prod != self->from_integer(static_cast<i64>(p)))
        throw Error("context self-check: p != pi^(p-1) * unit");

    if (!varpi_coeffs_.empty()) {
        CycloElem w = self->varpi();
        if (w.pow(p - 1) + self->from_integer(static_cast<i64>(p)) != self->zero())
            throw Error("context self-check: varpi^(p-1) != -p");
        if (pi_valuation(w) != ValuationResult::exact(1))
            throw Error("context self-check: varpi is not a uniformiser");
        if (!pi_valuation(w - self->pi()).geq(2))
            throw Error("context self-check: varpi is not pinned to pi mod pi^2");
        if (sigma_minus1(w) != -w)
            throw Error("context self-check: sigma_{-1}(varpi) != -varpi");
    }

    // p-th powers of 1-units are trivial down to level p+1; this is what
    // makes the unit classes an F_p-space.
    if (n_ >= static_cast<long>(p) + 1 && p <= 64) {
        Rng rng(0x5eedULL * p + static_cast<u64>(k_));
        for (int trial = 0; trial < 100; ++trial) {
            CycloElem u = random_one_unit(self, rng);
            if (!pi_valuation(u.pow(p) - self->one()).geq(static_cast<long>(p) + 1))
                throw Error("context self-check: U_1^p escapes U_{p+1}");
        }
    }
}

CycloElem RingContext::zero() const {
    return CycloElem(shared_from_this(), std::vector<u64>(deg_, 0));
}

CycloElem RingContext::one() const { return from_residue(1 % pk_); }

CycloElem RingContext::zeta() const {
    std::vector<u64> c(deg_, 0);
    c[1] = 1;
    return CycloElem(shared_from_this(), std::move(c));
}

CycloElem RingContext::pi() const {
    std::vector<u64> c(deg_, 0);
    c[0] = 1;
    c[1] = pk_ - 1;
    return CycloElem(shared_from_this(), std::move(c));
}

CycloElem RingContext::varpi() const {
    if (varpi_coeffs_.empty())
        throw PrecisionTooLow("varpi needs coefficient precision k >= 2");
    return CycloElem(shared_from_this(), varpi_coeffs_);
}

CycloElem RingContext::from_integer(i64 value) const {
    return from_residue(reduce_signed(value, pk_));
}

CycloElem RingContext::from_residue(u64 residue) const {
    std::vector<u64> c(deg_, 0);
    c[0] = residue % pk_;
    return CycloElem(shared_from_this(), std::move(c));
}

CycloElem RingContext::from_coeffs(std::vector<u64> coeffs) const {
    if (coeffs.size() != deg_)
        throw Error("from_coeffs: expected " + std::to_string(deg_) + " coefficients");
    for (auto& v : coeffs) v %= pk_;
    return CycloElem(shared_from_this(), std::move(coeffs));
}

CycloElem RingContext::from_pi_coeffs(const std::vector<u64>& coeffs) const {
    if (coeffs.size() > deg_)
        throw Error("from_pi_coeffs: too many coefficients");
    // zeta-basis coefficients via pi^j = (1 - zeta)^j
    std::vector<u64> out(deg_, 0);
    for (std::size_t i = 0; i < deg_; ++i) {
        u128 acc = 0;
        for (std::size_t j = i; j < coeffs.size(); ++j)
            acc += mul_mod(coeffs[j] % pk_, binom(j, i), pk_);
        u64 v = static_cast<u64>(acc % pk_);
        out[i] = (i % 2 == 0) ? v : (pk_ - v) % pk_;
    }
    return CycloElem(shared_from_this(), std::move(out));
}

CycloElem RingContext::teichmuller(i64 a) const {
    u64 am = reduce_signed(a, p_);
    if (am == 0) throw DivisibleByP("teichmuller: argument is divisible by p");
    return from_residue(teich_[am]);
}

u64 RingContext::teichmuller_residue(u64 a) const {
    u64 am = a % p_;
    if (am == 0) throw DivisibleByP("teichmuller: argument is divisible by p");
    return teich_[am];
}

u64 RingContext::binom(std::size_t n, std::size_t r) const {
    if (r > n || n >= deg_) return 0;
    return binom_[n * deg_ + r];
}

// ---------------------------------------------------------------------------
// CycloElem arithmetic
// ---------------------------------------------------------------------------

bool CycloElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool CycloElem::operator==(const CycloElem& other) const {
    if (!ctx_ || !other.ctx_) return ctx_ == other.ctx_;
    return ctx_->same_ring(*other.ctx_) && c_ == other.c_;
}

CycloElem CycloElem::operator+(const CycloElem& other) const {
    check_same_ring(*this, other);
    const u64 pk = ctx_->modulus();
    std::vector<u64> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = (c_[i] + other.c_[i]) % pk;
    return CycloElem(ctx_, std::move(out));
}

CycloElem CycloElem::operator-(const CycloElem& other) const {
    check_same_ring(*this, other);
    const u64 pk = ctx_->modulus();
    std::vector<u64> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = (c_[i] + pk - other.c_[i]) % pk;
    return CycloElem(ctx_, std::move(out));
}

CycloElem CycloElem::operator-() const {
    const u64 pk = ctx_->modulus();
    std::vector<u64> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] == 0 ? 0 : pk - c_[i];
    return CycloElem(ctx_, std::move(out));
}

CycloElem CycloElem::operator*(const CycloElem& other) const {
    check_same_ring(*this, other);
    const u64 p = ctx_->p();
    const u64 pk = ctx_->modulus();
    const std::size_t d = c_.size();
    // accumulate with exponents mod p, then eliminate zeta^(p-1) through
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    std::vector<u128> acc(p, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (other.c_[j] == 0) continue;
            std::size_t idx = i + j;
            if (idx >= p) idx -= p;
            acc[idx] += mul_mod(c_[i], other.c_[j], pk);
        }
    }
    const u64 top = static_cast<u64>(acc[p - 1] % pk);
    std::vector<u64> out(d);
    for (std::size_t i = 0; i < d; ++i)
        out[i] = (static_cast<u64>(acc[i] % pk) + pk - top) % pk;
    return CycloElem(ctx_, std::move(out));
}

CycloElem CycloElem::pow(u64 exp) const {
    CycloElem result = ctx_->one();
    CycloElem base = *this;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// ring operations
// ---------------------------------------------------------------------------

std::vector<u64> pi_coefficients(const CycloElem& x) {
    const auto& ctx = *x.context();
    const std::size_t d = ctx.degree();
    const u64 pk = ctx.modulus();
    const auto& c = x.coeffs();
    // zeta^i = (1 - pi)^i
    std::vector<u64> out(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        u128 acc = 0;
        for (std::size_t i = j; i < d; ++i)
            acc += mul_mod(c[i], ctx.binom(i, j), pk);
        u64 v = static_cast<u64>(acc % pk);
        out[j] = (j % 2 == 0) ? v : (pk - v) % pk;
    }
    return out;
}

ValuationResult pi_valuation(const CycloElem& x) {
    PiScan s = scan_pi(x);
    if (s.zero) return ValuationResult::at_least(x.context()->pi_precision());
    return ValuationResult::exact(s.level);
}

LeadingTerm leading_term(const CycloElem& x) {
    PiScan s = scan_pi(x);
    if (s.zero) throw Error("leading_term: element vanishes at working precision");
    const u64 p = x.context()->p();
    u64 divisor = 1;
    for (int i = 0; i < s.p_val; ++i) divisor *= p;
    u64 digit = (s.coeff / divisor) % p;
    // the frame is varpi^level and p = -varpi^(p-1), so each p-power in the
    // pi-basis coefficient flips the sign of the digit
    if (s.p_val % 2 == 1) digit = p - digit;
    return LeadingTerm{s.level, digit};
}

u64 residue_mod_p(const CycloElem& x) {
    const u64 p = x.context()->p();
    u64 sum = 0;
    for (u64 v : x.coeffs()) sum = (sum + v) % p;
    return sum;
}

bool is_unit(const CycloElem& x) { return residue_mod_p(x) != 0; }

CycloElem invert(const CycloElem& x) {
    if (!is_unit(x)) throw NotAUnit("invert: element has positive valuation");
    const auto ctx = x.context();
    const u64 p = ctx->p();
    const std::size_t d = ctx->degree();

    // inverse mod (Phi_p, p) by extended Euclid in F_p[X]
    Poly b(d);
    for (std::size_t i = 0; i < d; ++i) b[i] = x.coeffs()[i] % p;
    poly_trim(b);
    Poly r0(d + 1, 1); // Phi_p = 1 + X + ... + X^(p-1)
    Poly r1 = b;
    Poly t0, t1 = {1};
    while (r1.size() > 1) {
        auto [q, rem] = poly_divmod(r0, r1, p);
        Poly tn = poly_sub(t0, poly_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (r1.empty()) throw NotAUnit("invert: not invertible modulo (Phi_p, p)");
    u64 cinv = inv_mod(r1[0], p);
    std::vector<u64> y0(d, 0);
    for (std::size_t i = 0; i < t1.size() && i < d; ++i) y0[i] = mul_mod(t1[i], cinv, p);

    // Newton lift y <- y(2 - xy) doubles the p-adic accuracy each round
    CycloElem y = ctx->from_coeffs(std::move(y0));
    const CycloElem one = ctx->one();
    const CycloElem two = one + one;
    for (int iter = 0; iter < 10; ++iter) {
        CycloElem prod = x * y;
        if (prod == one) return y;
        y = y * (two - prod);
    }
    if (x * y == one) return y;
    throw Error("invert: Newton lifting failed");
}

CycloElem galois_apply(const CycloElem& x, i64 j) {
    const auto ctx = x.context();
    const u64 p = ctx->p();
    const u64 jm = reduce_signed(j, p);
    if (jm == 0) throw BadGaloisIndex("galois_apply: index is divisible by p");
    const std::size_t d = ctx->degree();
    const u64 pk = ctx->modulus();
    std::vector<u64> acc(p, 0);
    for (std::size_t i = 0; i < d; ++i) acc[(i * jm) % p] = x.coeffs()[i];
    const u64 top = acc[p - 1];
    std::vector<u64> out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = (acc[i] + pk - top) % pk;
    return ctx->from_coeffs(std::move(out));
}

CycloElem sigma_minus1(const CycloElem& x) { return galois_apply(x, -1); }

namespace {

NormResult norm_from_scalar_element(const CycloElem& value) {
    const auto& c = value.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] != 0) throw Error("absolute_norm: result is not Galois-fixed");
    }
    NormResult r;
    r.value.residue = c[0];
    r.precision_loss = (c[0] == 0);
    return r;
}

} // namespace

NormResult absolute_norm(const CycloElem& x) {
    const u64 p = x.context()->p();
    CycloElem prod = x;
    for (u64 j = 2; j < p; ++j) prod *= galois_apply(x, static_cast<i64>(j));
    return norm_from_scalar_element(prod);
}

NormResult absolute_norm_via_determinant(const CycloElem& x) {
    const auto ctx = x.context();
    const std::size_t d = ctx->degree();
    std::vector<std::vector<u64>> m(d, std::vector<u64>(d, 0));
    CycloElem col = x;
    const CycloElem z = ctx->zeta();
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs()[i];
        if (j + 1 < d) col *= z;
    }
    NormResult r;
    r.value.residue = det_mod(m, ctx->modulus());
    r.precision_loss = (r.value.residue == 0);
    return r;
}

CycloElem half_norm(const CycloElem& x) { return x * sigma_minus1(x); }

CycloElem pth_root(const CycloElem& x) {
    const auto ctx = x.context();
    const u64 p = ctx->p();
    const long n = ctx->pi_precision();
    if (n < 2 * static_cast<long>(p))
        throw PrecisionTooLow("pth_root: needs pi-adic precision N >= 2p");
    if (!is_unit(x)) throw NotAUnit("pth_root: argument is not a unit");

    const CycloElem one = ctx->one();
    const u64 a = residue_mod_p(x);
    const u64 ta = ctx->teichmuller_residue(a);
    const CycloElem u = x * ctx->from_residue(inv_mod(ta, ctx->modulus()));
    if (!pi_valuation(u - one).geq(static_cast<long>(p) + 1))
        throw NotAPthPower("pth_root: 1-unit part is not trivial down to level p+1");

    // The Teichmuller factor is its own p-th root (<a>^p = <a>). The 1-unit
    // part is lifted digit by digit: at error level m the factor
    // (1 + t*varpi^(m-(p-1)))^p changes exactly the level-m digit, because
    // p = -varpi^(p-1) and every other binomial term sits strictly higher
    // once m >= p+1.
    const CycloElem w0 = ctx->varpi();
    CycloElem y = one;
    CycloElem w = u;
    for (long guard = 0; guard <= n + 4; ++guard) {
        CycloElem diff = w - one;
        if (diff.is_zero()) {
            CycloElem root = ctx->from_residue(ta) * y;
            if (root.pow(p) != x) throw Error("pth_root: postcondition failed");
            return root;
        }
        LeadingTerm lt = leading_term(diff);
        const u64 t = p - lt.digit; // digit is in [1, p)
        CycloElem corr = one + ctx->from_residue(t) * w0.pow(static_cast<u64>(lt.level - static_cast<long>(p - 1)));
        y *= corr;
        w *= invert(corr.pow(p));
    }
    throw Error("pth_root: digit lifting failed to terminate");
}

} // namespace kummerlab
