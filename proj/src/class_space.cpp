#include "kummerlab/class_space.hpp"

#include <algorithm>

#include "kummerlab/classifier.hpp"

namespace kummerlab {

bool UnitClassVector::is_zero() const {
    return std::all_of(digits.begin(), digits.end(), [](u64 d) { return d == 0; });
}

std::size_t UnitClassVector::pivot_level() const {
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (digits[i] != 0) return i + 1;
    return 0;
}

UnitClassVector UnitClassVector::operator+(const UnitClassVector& other) const {
    if (p != other.p || digits.size() != other.digits.size())
        throw ContextMismatch("class vectors have different shapes");
    UnitClassVector out{p, digits};
    for (std::size_t i = 0; i < digits.size(); ++i)
        out.digits[i] = (digits[i] + other.digits[i]) % p;
    return out;
}

UnitClassVector UnitClassVector::scaled(u64 c) const {
    UnitClassVector out{p, digits};
    c %= p;
    for (auto& d : out.digits) d = mul_mod(d, c, p);
    return out;
}

UnitClassVector Subspace::reduce(UnitClassVector v) const {
    for (const auto& row : rows_) {
        const std::size_t piv = row.pivot_level();
        const u64 d = v.digits[piv - 1];
        if (d != 0) v = v + row.scaled(p_ - d);
    }
    return v;
}

void Subspace::insert(UnitClassVector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return;
    const std::size_t piv = v.pivot_level();
    v = v.scaled(inv_mod(v.digits[piv - 1], p_));
    for (auto& row : rows_) {
        const u64 d = row.digits[piv - 1];
        if (d != 0) row = row + v.scaled(p_ - d);
    }
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const UnitClassVector& r) {
        return r.pivot_level() > piv;
    });
    rows_.insert(pos, std::move(v));
}

CycloElem frame_unit(const RingContextPtr& ctx, u64 level) {
    if (level < 1 || level > ctx->p())
        throw BadIndex("frame_unit: level must lie in [1, p]");
    return ctx->one() + ctx->varpi().pow(level);
}

UnitClassVector digit_coordinates(const CycloElem& x) {
    const auto& ctx = x.context();
    const long p = static_cast<long>(ctx->p());
    if (ctx->pi_precision() < p + 1)
        throw PrecisionTooLow("digit_coordinates: needs pi-adic precision N >= p+1");

    UnitClassVector out{ctx->p(), std::vector<u64>(ctx->p(), 0)};
    CycloElem u = teich_split(x).one_unit;
    const CycloElem one = ctx->one();
    for (long guard = 0; guard <= p + 2; ++guard) {
        const CycloElem diff = u - one;
        if (pi_valuation(diff).geq(p + 1)) return out;
        const LeadingTerm lt = leading_term(diff);
        out.digits[static_cast<std::size_t>(lt.level - 1)] = lt.digit;
        u *= invert(frame_unit(ctx, static_cast<u64>(lt.level)).pow(lt.digit));
    }
    throw Error("digit_coordinates: reduction failed to terminate");
}

CycloElem reconstruct_class(const RingContextPtr& ctx, const UnitClassVector& v) {
    CycloElem out = ctx->one();
    for (std::size_t n = 1; n <= v.digits.size(); ++n)
        if (v.digits[n - 1] != 0) out *= frame_unit(ctx, n).pow(v.digits[n - 1]);
    return out;
}

Subspace span(u64 p, const std::vector<UnitClassVector>& generators) {
    Subspace s(p);
    for (const auto& g : generators) s.insert(g);
    return s;
}

Subspace filtration_subspace(const RingContextPtr& ctx, u64 n) {
    const u64 p = ctx->p();
    if (n < 1 || n > p + 1)
        throw BadIndex("filtration_subspace: level must lie in [1, p+1]");
    Subspace s(p);
    for (u64 a = n; a <= p; ++a) s.insert(digit_coordinates(frame_unit(ctx, a)));
    return s;
}

std::vector<u64> primar_extra_levels(u64 p) {
    std::vector<u64> out;
    for (u64 a = 3; a + 2 <= p; a += 2)
        if (2 * a >= p - 1) out.push_back(a);
    return out;
}

Subspace primar_subspace(const RingContextPtr& ctx) {
    const u64 p = ctx->p();
    if (ctx->pi_precision() < static_cast<long>(p) + 1)
        throw PrecisionTooLow("primar_subspace: needs pi-adic precision N >= p+1");
    std::vector<u64> levels = primar_extra_levels(p);
    levels.push_back(p - 1);
    levels.push_back(p);
    Subspace s(p);
    for (u64 a : levels) {
        const CycloElem gen = frame_unit(ctx, a);
        if (!is_primar(gen).first)
            throw GeneratorNotPrimar("primar_subspace: frame generator at level " +
                                     std::to_string(a) + " is not primar");
        s.insert(digit_coordinates(gen));
    }
    return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    const u64 p = a.p();
    if (p != b.p()) throw ContextMismatch("intersect: subspaces over different primes");
    const std::size_t w = (a.rows().empty() ? (b.rows().empty() ? 0 : b.rows()[0].digits.size())
                                            : a.rows()[0].digits.size());
    Subspace out(p);
    if (a.dim() == 0 || b.dim() == 0) return out;

    // Zassenhaus: eliminate [v | v] rows from A against [v | 0] rows from B;
    // surviving rows with zero left half carry the intersection on the right.
    std::vector<std::vector<u64>> m;
    for (const auto& r : a.rows()) {
        std::vector<u64> row(2 * w);
        std::copy(r.digits.begin(), r.digits.end(), row.begin());
        std::copy(r.digits.begin(), r.digits.end(), row.begin() + static_cast<long>(w));
        m.push_back(std::move(row));
    }
    for (const auto& r : b.rows()) {
        std::vector<u64> row(2 * w, 0);
        std::copy(r.digits.begin(), r.digits.end(), row.begin());
        m.push_back(std::move(row));
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * w && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        const u64 inv = inv_mod(m[rank][col], p);
        for (auto& v : m[rank]) v = mul_mod(v, inv, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const u64 c = p - m[i][col];
            for (std::size_t j = col; j < 2 * w; ++j)
                m[i][j] = (m[i][j] + mul_mod(c, m[rank][j], p)) % p;
        }
        ++rank;
    }

    for (const auto& row : m) {
        bool left_zero = true;
        for (std::size_t j = 0; j < w && left_zero; ++j) left_zero = (row[j] == 0);
        if (!left_zero) continue;
        UnitClassVector v{p, std::vector<u64>(row.begin() + static_cast<long>(w), row.end())};
        if (!v.is_zero()) out.insert(std::move(v));
    }
    return out;
}

} // namespace kummerlab
