#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummerlab/errors.hpp"
#include "kummerlab/numeric.hpp"
#include "kummerlab/valuation.hpp"

namespace kummerlab {

class CycloElem;

/// Working ring Z_p[zeta] truncated at coefficient precision p^k.
///
/// Elements live in the power basis {1, zeta, ..., zeta^{p-2}} with
/// coefficients reduced into [0, p^k). The pi-adic precision is
/// N = k(p-1) where pi = 1 - zeta. The context precomputes the binomial
/// tables that convert between the zeta- and pi-power bases and, for
/// k >= 2, the canonical uniformiser varpi with varpi^{p-1} = -p and
/// varpi/pi = 1 (mod pi).
class RingContext : public std::enable_shared_from_this<RingContext> {
public:
    static std::shared_ptr<const RingContext> make(u64 p, int k);

    u64 p() const { return p_; }
    int k() const { return k_; }
    long pi_precision() const { return n_; }    // N = k(p-1)
    u64 modulus() const { return pk_; }         // p^k
    std::size_t degree() const { return deg_; } // p-1

    CycloElem zero() const;
    CycloElem one() const;
    CycloElem zeta() const;
    CycloElem pi() const;    // 1 - zeta
    CycloElem varpi() const; // canonical (p-1)-th root of -p; needs k >= 2
    CycloElem from_integer(i64 value) const;
    CycloElem from_residue(u64 residue) const; // scalar given mod p^k
    CycloElem from_coeffs(std::vector<u64> coeffs) const;
    CycloElem from_pi_coeffs(const std::vector<u64>& coeffs) const;

    /// Multiplicative representative <a>: the unique (p-1)-th root of 1
    /// congruent to a mod p, as a rational scalar. Throws DivisibleByP.
    CycloElem teichmuller(i64 a) const;
    u64 teichmuller_residue(u64 a) const; // <a> mod p^k

    u64 binom(std::size_t n, std::size_t r) const; // mod p^k
    bool same_ring(const RingContext& other) const {
        return p_ == other.p_ && k_ == other.k_;
    }

private:
    RingContext() = default;
    void run_self_checks() const;

    u64 p_ = 0;
    int k_ = 0;
    long n_ = 0;
    u64 pk_ = 0;
    std::size_t deg_ = 0;
    std::vector<u64> binom_;          // (p-1) x (p-1) lower triangle, mod p^k
    std::vector<u64> teich_;          // <a> mod p^k for a in [0, p)
    std::vector<u64> varpi_coeffs_;   // empty when k < 2

    friend class CycloElem;
};

using RingContextPtr = std::shared_ptr<const RingContext>;

/// Element of Z_p[zeta] at the context's precision. Immutable value type;
/// two elements are equal iff they share (p, k) and have identical reduced
/// coefficient vectors.
class CycloElem {
public:
    CycloElem() = default;

    const RingContextPtr& context() const { return ctx_; }
    const std::vector<u64>& coeffs() const { return c_; }
    bool is_zero() const;

    CycloElem operator+(const CycloElem& other) const;
    CycloElem operator-(const CycloElem& other) const;
    CycloElem operator*(const CycloElem& other) const;
    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& other) { return *this = *this + other; }
    CycloElem& operator-=(const CycloElem& other) { return *this = *this - other; }
    CycloElem& operator*=(const CycloElem& other) { return *this = *this * other; }

    bool operator==(const CycloElem& other) const;
    bool operator!=(const CycloElem& other) const { return !(*this == other); }

    CycloElem pow(u64 exp) const;

private:
    CycloElem(RingContextPtr ctx, std::vector<u64> c)
        : ctx_(std::move(ctx)), c_(std::move(c)) {}

    RingContextPtr ctx_;
    std::vector<u64> c_;

    friend class RingContext;
};

struct PadicScalar {
    u64 residue = 0; // element of Z_p known mod p^k
};

struct NormResult {
    PadicScalar value;
    // set when the residue carries no certified p-adic digit (norm of a
    // deep non-unit whose value vanishes mod p^k)
    bool precision_loss = false;
};

struct LeadingTerm {
    long level = 0; // pi-adic valuation
    u64 digit = 0;  // leading digit in [1, p), measured against varpi^level
};

// pi-power-basis coefficients of x (length p-1, mod p^k)
std::vector<u64> pi_coefficients(const CycloElem& x);

ValuationResult pi_valuation(const CycloElem& x);
bool is_unit(const CycloElem& x);
u64 residue_mod_p(const CycloElem& x); // image in o/p = F_p, i.e. x(zeta -> 1) mod p

// Exact inverse of a unit; throws NotAUnit.
CycloElem invert(const CycloElem& x);

// sigma_j : zeta -> zeta^j for j not divisible by p; throws BadGaloisIndex.
CycloElem galois_apply(const CycloElem& x, i64 j);
CycloElem sigma_minus1(const CycloElem& x);

// Norm to Q_p as the product of all Galois conjugates.
NormResult absolute_norm(const CycloElem& x);
// Same value computed as the determinant of the multiplication-by-x matrix;
// an independent path kept for cross-checking.
NormResult absolute_norm_via_determinant(const CycloElem& x);

// Norm to the real subfield: x * sigma_{-1}(x).
CycloElem half_norm(const CycloElem& x);

// Valuation together with the leading digit; throws on elements that vanish
// at precision.
LeadingTerm leading_term(const CycloElem& x);

/// p-th root of a unit whose 1-unit part is trivial down to level p+1.
/// Returns the unique root whose 1-unit part lies in U_2; the result
/// satisfies root^p == x at full working precision. Requires N >= 2p.
CycloElem pth_root(const CycloElem& x);

} // namespace kummerlab
