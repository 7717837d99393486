#include "kummerlab/brute_force.hpp"

#include <algorithm>

namespace kummerlab {

namespace {

std::vector<int> level_exponents(u64 p, int m) {
    const std::size_t d = static_cast<std::size_t>(p - 1);
    std::vector<int> exps(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        const long num = m - static_cast<long>(j);
        exps[j] = num > 0 ? static_cast<int>((num + static_cast<long>(d) - 1) / static_cast<long>(d)) : 0;
    }
    return exps;
}

} // namespace

BruteForceModel::BruteForceModel(u64 p, int m, u64 element_budget) : p_(p), m_(m) {
    if (p == 2 || !is_prime(p)) throw NotAnOddPrime("brute-force model needs an odd prime");
    if (m < 1 || m > static_cast<int>(p) + 1)
        throw BadIndex("brute-force model: m must lie in [1, p+1]");

    total_ = 1;
    for (int i = 0; i < m; ++i) {
        if (total_ > element_budget / p)
            throw TooLarge("brute-force model: p^m exceeds the configured budget");
        total_ *= p;
    }

    exps_ = level_exponents(p, m);
    radix_.resize(exps_.size());
    int k_model = 1;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        k_model = std::max(k_model, exps_[j]);
        u64 r = 1;
        for (int i = 0; i < exps_[j]; ++i) r *= p;
        radix_[j] = r;
    }
    ctx_ = RingContext::make(p, k_model);

    // p-th powers of the units, by direct exponentiation
    for (u64 idx = 0; idx < total_; ++idx) {
        if (!is_unit_index(idx)) continue;
        pth_powers_.push_back(reduce(lift(idx).pow(p)));
    }
    std::sort(pth_powers_.begin(), pth_powers_.end());
    pth_powers_.erase(std::unique(pth_powers_.begin(), pth_powers_.end()), pth_powers_.end());
    for (u64 w : pth_powers_) pth_power_inverses_.push_back(inverse(w));

    if (m_ >= static_cast<int>(p_)) {
        for (u64 w : pth_powers_) pth_powers_mod_p_level_.push_back(coarsen(w, static_cast<int>(p_)));
        std::sort(pth_powers_mod_p_level_.begin(), pth_powers_mod_p_level_.end());
        pth_powers_mod_p_level_.erase(
            std::unique(pth_powers_mod_p_level_.begin(), pth_powers_mod_p_level_.end()),
            pth_powers_mod_p_level_.end());
    }
}

u64 BruteForceModel::unit_count() const { return total_ / p_ * (p_ - 1); }

std::vector<u64> BruteForceModel::decode(u64 idx) const {
    std::vector<u64> tuple(radix_.size(), 0);
    for (std::size_t j = 0; j < radix_.size(); ++j) {
        if (radix_[j] == 1) continue;
        tuple[j] = idx % radix_[j];
        idx /= radix_[j];
    }
    return tuple;
}

u64 BruteForceModel::encode(const std::vector<u64>& tuple) const {
    u64 idx = 0;
    for (std::size_t j = radix_.size(); j-- > 0;) {
        if (radix_[j] == 1) continue;
        idx = idx * radix_[j] + tuple[j] % radix_[j];
    }
    return idx;
}

bool BruteForceModel::is_unit_index(u64 idx) const {
    return decode(idx)[0] % p_ != 0;
}

CycloElem BruteForceModel::lift(u64 idx) const { return lift(idx, ctx_); }

CycloElem BruteForceModel::lift(u64 idx, const RingContextPtr& target) const {
    if (target->p() != p_) throw ContextMismatch("brute-force lift into a different prime");
    return target->from_pi_coeffs(decode(idx));
}

u64 BruteForceModel::reduce(const CycloElem& x) const {
    if (x.context()->p() != p_) throw ContextMismatch("brute-force reduce from a different prime");
    std::vector<u64> cp = pi_coefficients(x);
    std::vector<u64> tuple(radix_.size(), 0);
    for (std::size_t j = 0; j < radix_.size(); ++j) tuple[j] = cp[j] % radix_[j];
    return encode(tuple);
}

u64 BruteForceModel::mul(u64 a, u64 b) const { return reduce(lift(a) * lift(b)); }

u64 BruteForceModel::power(u64 a, u64 exp) const { return reduce(lift(a).pow(exp)); }

u64 BruteForceModel::inverse(u64 a) const { return reduce(invert(lift(a))); }

bool BruteForceModel::in_unit_level(u64 idx, int n) const {
    if (n > m_) throw BadIndex("in_unit_level: level exceeds the model precision");
    const CycloElem diff = lift(idx) - ctx_->one();
    return pi_valuation(diff).geq(n);
}

bool BruteForceModel::is_pth_power(u64 idx) const {
    return std::binary_search(pth_powers_.begin(), pth_powers_.end(), idx);
}

bool BruteForceModel::in_filtration_class(u64 idx, int n) const {
    for (u64 winv : pth_power_inverses_) {
        if (in_unit_level(mul(idx, winv), n)) return true;
    }
    return false;
}

u64 BruteForceModel::coarsen(u64 idx, int m_target) const {
    if (m_target > m_) throw BadIndex("coarsen: target precision exceeds the model");
    std::vector<u64> tuple = decode(idx);
    std::vector<int> exps = level_exponents(p_, m_target);
    u64 key = 0;
    for (std::size_t j = exps.size(); j-- > 0;) {
        u64 r = 1;
        for (int i = 0; i < exps[j]; ++i) r *= p_;
        if (r == 1) continue;
        key = key * r + tuple[j] % r;
    }
    return key;
}

bool BruteForceModel::is_p_primary_def(u64 idx) const {
    if (m_ < static_cast<int>(p_))
        throw BadIndex("is_p_primary_def: model precision below p");
    const u64 key = coarsen(idx, static_cast<int>(p_));
    return std::binary_search(pth_powers_mod_p_level_.begin(), pth_powers_mod_p_level_.end(), key);
}

bool BruteForceModel::is_primaire_elem(const CycloElem& x) const {
    // x = a (mod p) for a scalar unit iff the constant pi-coefficient works
    // as the scalar: any other candidate differs from it by a multiple of p.
    const u64 a = pi_coefficients(x)[0];
    if (a % p_ == 0) return false;
    const CycloElem diff = x - ctx_->from_residue(a);
    return pi_valuation(diff).geq(static_cast<long>(p_) - 1);
}

bool BruteForceModel::is_primaire_def(u64 idx) const {
    if (m_ < static_cast<int>(p_) - 1)
        throw BadIndex("is_primaire_def: model precision below p-1");
    return is_primaire_elem(lift(idx));
}

bool BruteForceModel::is_primar_def(u64 idx) const {
    if (m_ < static_cast<int>(p_) - 1)
        throw BadIndex("is_primar_def: model precision below p-1");
    const CycloElem x = lift(idx);
    const u64 a = pi_coefficients(x)[0];
    if (a % p_ == 0) return false;
    if (!pi_valuation(x - ctx_->from_residue(a)).geq(2)) return false;
    return is_primaire_elem(half_norm(x));
}

} // namespace kummerlab
