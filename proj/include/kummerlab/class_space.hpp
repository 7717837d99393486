#pragma once

#include <cstddef>
#include <vector>

#include "kummerlab/cyclotomic.hpp"

namespace kummerlab {

/// Coordinates of a unit class in o^x / o^xp with respect to the frame
/// eta_n = 1 + varpi^n, n = 1..p. The quotient of the 1-units is an
/// elementary abelian p-group, so classes add digit-wise mod p; the
/// all-zero vector is the class of the p-th powers.
struct UnitClassVector {
    u64 p = 0;
    std::vector<u64> digits; // length p; digits[n-1] attached to level n

    bool is_zero() const;
    std::size_t pivot_level() const; // first level with a nonzero digit; 0 when trivial
    UnitClassVector operator+(const UnitClassVector& other) const;
    UnitClassVector scaled(u64 c) const;
    bool operator==(const UnitClassVector& other) const = default;
};

/// F_p-subspace of unit classes in reduced echelon form: pivot levels
/// strictly increasing, pivot digits 1, pivots eliminated from the other
/// rows. Equal subspaces therefore have identical row lists.
class Subspace {
public:
    explicit Subspace(u64 p) : p_(p) {}

    u64 p() const { return p_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<UnitClassVector>& rows() const { return rows_; }

    void insert(UnitClassVector v);
    UnitClassVector reduce(UnitClassVector v) const;
    bool contains(const UnitClassVector& v) const { return reduce(v).is_zero(); }

    bool operator==(const Subspace& other) const = default;

private:
    u64 p_;
    std::vector<UnitClassVector> rows_;
};

// eta_n = 1 + varpi^n for 1 <= n <= p
CycloElem frame_unit(const RingContextPtr& ctx, u64 level);

// Greedy reduction of the 1-unit part against the frame; requires a unit
// and N >= p+1.
UnitClassVector digit_coordinates(const CycloElem& x);

// prod eta_n^{d_n}; lands in the same class as any unit with these digits
CycloElem reconstruct_class(const RingContextPtr& ctx, const UnitClassVector& v);

Subspace span(u64 p, const std::vector<UnitClassVector>& generators);

// Image of U_n modulo p-th powers, spanned by the frame tail; 1 <= n <= p+1.
Subspace filtration_subspace(const RingContextPtr& ctx, u64 n);

// odd a in [3, p-2] with 2a >= p-1; the extra frame levels generating the
// primar classes beyond the level-(p-1) piece
std::vector<u64> primar_extra_levels(u64 p);

// Classes of the primar units: the level-(p-1) piece plus the extra frame
// levels. Every generator is re-checked by the classifier before use.
Subspace primar_subspace(const RingContextPtr& ctx);

Subspace intersect(const Subspace& a, const Subspace& b);

} // namespace kummerlab
