#include "kummerlab/classifier.hpp"

namespace kummerlab {

TeichSplit teich_split(const CycloElem& x) {
    const auto& ctx = x.context();
    const u64 a = residue_mod_p(x);
    if (a == 0) throw NotAUnit("teich_split: element has positive valuation");
    const u64 ta = ctx->teichmuller_residue(a);
    return TeichSplit{a, x * ctx->from_residue(inv_mod(ta, ctx->modulus()))};
}

int unit_class_level(const CycloElem& x) {
    const auto& ctx = x.context();
    const long p = static_cast<long>(ctx->p());
    if (ctx->pi_precision() < p + 1)
        throw PrecisionTooLow("unit_class_level: needs pi-adic precision N >= p+1");
    TeichSplit s = teich_split(x);
    ValuationResult v = pi_valuation(s.one_unit - ctx->one());
    if (v.geq(p + 1)) return static_cast<int>(p + 1);
    return static_cast<int>(v.value());
}

std::pair<bool, std::optional<u64>> is_primaire(const CycloElem& x) {
    if (!is_unit(x)) throw NotAUnit("is_primaire: element has positive valuation");
    const u64 p = x.context()->p();
    const auto& c = x.coeffs();
    bool ok = c[0] % p != 0;
    for (std::size_t i = 1; i < c.size() && ok; ++i) ok = (c[i] % p == 0);
    if (!ok) return {false, std::nullopt};
    return {true, c[0]};
}

std::pair<bool, std::optional<std::pair<u64, u64>>> is_primar(const CycloElem& x) {
    const auto& ctx = x.context();
    const long p = static_cast<long>(ctx->p());
    if (ctx->pi_precision() < p)
        throw PrecisionTooLow("is_primar: needs pi-adic precision N >= p");
    const u64 t = residue_mod_p(x);
    if (t == 0) throw NotAUnit("is_primar: element has positive valuation");
    // The integer representative t stands in for every scalar unit congruent
    // to x mod pi: candidates differ by a multiple of p, which lies in pi^2.
    const bool cond1 = pi_valuation(x - ctx->from_integer(static_cast<i64>(t))).geq(2);
    if (!cond1) return {false, std::nullopt};
    const CycloElem hn = half_norm(x);
    auto [cond2, witness] = is_primaire(hn);
    if (!cond2) return {false, std::nullopt};
    return {true, std::make_pair(t, *witness % ctx->p())};
}

ClassificationReport classify(const CycloElem& x) {
    const auto& ctx = x.context();
    const int p = static_cast<int>(ctx->p());

    ClassificationReport r;
    r.precision_used = ctx->pi_precision();
    r.teichmuller_residue = residue_mod_p(x);
    if (r.teichmuller_residue == 0) throw NotAUnit("classify: element has positive valuation");
    r.level = unit_class_level(x);
    r.is_pth_power = r.level >= p + 1;
    r.is_p_primary = r.level >= p;
    auto primaire = is_primaire(x);
    r.is_primaire = primaire.first;
    r.primaire_witness = primaire.second;
    auto primar = is_primar(x);
    r.is_primar = primar.first;
    r.primar_witnesses = primar.second;

    const bool chain = (!r.is_pth_power || r.is_p_primary) &&
                       (!r.is_p_primary || r.is_primaire) &&
                       (!r.is_primaire || r.is_primar);
    if (!chain) throw Error("classify: implication chain violated");
    return r;
}

} // namespace kummerlab
