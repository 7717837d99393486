#pragma once

namespace kummerlab {

// pi-adic valuation at working precision: either an exact value in [0, N),
// or "at least N" when the element vanishes at precision.
class ValuationResult {
public:
    static ValuationResult exact(long v) { return ValuationResult(v, true); }
    static ValuationResult at_least(long bound) { return ValuationResult(bound, false); }

    bool is_exact() const { return exact_; }
    long value() const { return v_; }          // exact value, or the bound
    bool geq(long m) const { return v_ >= m; } // certified v >= m

    bool operator==(const ValuationResult& other) const {
        return v_ == other.v_ && exact_ == other.exact_;
    }

private:
    ValuationResult(long v, bool e) : v_(v), exact_(e) {}
    long v_;
    bool exact_;
};

} // namespace kummerlab
