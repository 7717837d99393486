#pragma once

#include <vector>

#include "kummerlab/cyclotomic.hpp"

namespace kummerlab {

/// Exhaustive model of the quotient o / p^m (p the maximal ideal) for tiny
/// primes. Every answer here comes from the definitions: direct enumeration,
/// direct exponentiation, and definition-level congruence tests. It shares
/// only the raw ring arithmetic with the fast paths it is used to validate.
///
/// Canonical form: an element is the tuple of its pi-power-basis
/// coefficients, coefficient j reduced mod p^ceil((m-j)/(p-1)). Tuples are
/// packed into a mixed-radix index below p^m.
class BruteForceModel {
public:
    BruteForceModel(u64 p, int m, u64 element_budget = 4'000'000);

    u64 p() const { return p_; }
    int m() const { return m_; }
    u64 element_count() const { return total_; }  // p^m
    u64 unit_count() const;                       // (p-1) p^(m-1)
    const RingContextPtr& context() const { return ctx_; }

    bool is_unit_index(u64 idx) const;
    CycloElem lift(u64 idx) const; // canonical lift into the model context
    CycloElem lift(u64 idx, const RingContextPtr& target) const;
    u64 reduce(const CycloElem& x) const;

    u64 mul(u64 a, u64 b) const;
    u64 power(u64 a, u64 exp) const;
    u64 inverse(u64 a) const;

    // v_pi(x - 1) >= n inside the quotient; requires n <= m
    bool in_unit_level(u64 idx, int n) const;

    // distinct values of z^p over the units, sorted
    const std::vector<u64>& pth_powers() const { return pth_powers_; }
    bool is_pth_power(u64 idx) const;

    // the class of x lies in the image of U_n modulo p-th powers
    bool in_filtration_class(u64 idx, int n) const;

    // p-th power in the coarser quotient o/p^p; requires m >= p
    bool is_p_primary_def(u64 idx) const;
    // x = a (mod p) for a scalar unit a; requires m >= p-1
    bool is_primaire_def(u64 idx) const;
    // x = a (mod pi^2) and x sigma_{-1}(x) = b (mod p); requires m >= p-1
    bool is_primar_def(u64 idx) const;

private:
    std::vector<u64> decode(u64 idx) const;
    u64 encode(const std::vector<u64>& tuple) const;
    u64 coarsen(u64 idx, int m_target) const; // index in the o/p^{m_target} radix
    bool is_primaire_elem(const CycloElem& x) const;

    u64 p_ = 0;
    int m_ = 0;
    std::vector<int> exps_;  // e_j = ceil((m-j)/(p-1))
    std::vector<u64> radix_; // p^{e_j}
    u64 total_ = 0;
    RingContextPtr ctx_;
    std::vector<u64> pth_powers_;
    std::vector<u64> pth_power_inverses_;
    std::vector<u64> pth_powers_mod_p_level_; // z^p keys in the o/p^p radix
};

} // namespace kummerlab
