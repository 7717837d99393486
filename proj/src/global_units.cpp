#include "kummerlab/global_units.hpp"

#include "kummerlab/sampling.hpp"

namespace kummerlab {

CycloElem GlobalUnit::local_image(const RingContextPtr& ctx) const {
    if (ctx->p() != p) throw ContextMismatch("global unit and context disagree on p");
    std::vector<u64> c(ctx->degree(), 0);
    for (std::size_t i = 0; i < coeffs.size() && i < c.size(); ++i)
        c[i] = reduce_signed(coeffs[i], ctx->modulus());
    return ctx->from_coeffs(std::move(c));
}

GlobalUnit cyclotomic_unit(u64 p, u64 a) {
    if (a < 2 || a > p - 1)
        throw BadIndex("cyclotomic_unit: index must lie in [2, p-1]");
    GlobalUnit u;
    u.p = p;
    u.coeffs.assign(a, 1);
    u.label = "c_" + std::to_string(a);
    return u;
}

GlobalUnit minus_zeta(u64 p) {
    GlobalUnit u;
    u.p = p;
    u.coeffs = {0, -1};
    u.label = "-zeta";
    return u;
}

std::vector<GlobalUnit> global_unit_generators(u64 p) {
    std::vector<GlobalUnit> gens;
    gens.push_back(minus_zeta(p));
    for (u64 a = 2; a <= (p - 1) / 2; ++a) gens.push_back(cyclotomic_unit(p, a));
    return gens;
}

SplitReal split_real(const CycloElem& u) {
    if (!is_unit(u)) throw NotAUnit("split_real: element is not a unit");
    const u64 p = u.context()->p();
    const CycloElem ratio = u * invert(sigma_minus1(u));
    // (p+1)/2 halves inside the p-torsion: the ratio is xi^2 for the p-th
    // root of unity xi carried by u
    const CycloElem xi = ratio.pow((p + 1) / 2);
    return SplitReal{xi, invert(xi) * u};
}

Subspace global_image(const RingContextPtr& ctx) {
    Subspace s(ctx->p());
    for (const auto& gen : global_unit_generators(ctx->p()))
        s.insert(digit_coordinates(gen.local_image(ctx)));
    return s;
}

RootCertificate kummer_local_certificate(const CycloElem& image, const std::string& label) {
    RootCertificate cert;
    cert.label = label;
    cert.report = classify(image);
    if (!cert.report.is_primar) {
        cert.granted = false;
        if (!pi_valuation(image - image.context()->from_integer(
                               static_cast<i64>(cert.report.teichmuller_residue))).geq(2)) {
            cert.refusal = "not primar: no scalar congruence mod pi^2 (level " +
                           std::to_string(cert.report.level) + ")";
        } else {
            cert.refusal = "not primar: the norm to the real subfield is not scalar mod p";
        }
        return cert;
    }
    try {
        cert.root = pth_root(image);
    } catch (const NotAPthPower&) {
        throw CertificateImpossible(
            "primar global-unit image without a p-th root; the hypotheses are violated "
            "or there is a bug (label: " + label + ")");
    }
    const u64 p = image.context()->p();
    if (cert.root->pow(p) != image)
        throw CertificateImpossible("certificate root fails verification (label: " + label + ")");
    cert.granted = true;
    cert.verified_pi_precision = image.context()->pi_precision() - static_cast<long>(p - 1);
    return cert;
}

GlobalIntersectionReport check_prop3_prop6(const RingContextPtr& ctx, u64 samples, u64 seed,
                                           std::size_t max_kept_certificates) {
    const u64 p = ctx->p();
    GlobalIntersectionReport rep;

    const Subspace image = global_image(ctx);
    const Subspace primar = primar_subspace(ctx);
    const Subspace level_pm1 = filtration_subspace(ctx, p - 1);
    rep.dim_global = static_cast<int>(image.dim());
    rep.dim_meet_primar = static_cast<int>(intersect(image, primar).dim());
    rep.dim_meet_level_pm1 = static_cast<int>(intersect(image, level_pm1).dim());
    if (rep.dim_meet_primar != 0 || rep.dim_meet_level_pm1 != 0) {
        throw IntersectionNonTrivial(
            "global-unit image meets the primar classes in dimension " +
            std::to_string(rep.dim_meet_primar) + " and the level-(p-1) piece in dimension " +
            std::to_string(rep.dim_meet_level_pm1));
    }

    // generator power tables: gen^e for e in [0, p)
    const auto gens = global_unit_generators(p);
    std::vector<std::vector<CycloElem>> table(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        table[i].reserve(p);
        CycloElem cur = ctx->one();
        const CycloElem g = gens[i].local_image(ctx);
        for (u64 e = 0; e < p; ++e) {
            table[i].push_back(cur);
            cur *= g;
        }
    }

    rep.samples = samples;
    const u64 forced = samples == 0 ? 0 : std::min<u64>(samples, 3 + samples / 100);
    for (u64 s = 0; s < samples; ++s) {
        Rng rng = rng_for_sample(seed, s);
        CycloElem prod = ctx->one();
        std::string label = "prod[seed=" + std::to_string(seed) + ",i=" + std::to_string(s) + "]";
        if (s < forced) {
            // exponents divisible by p: a guaranteed p-th power, and so a
            // guaranteed certificate grant
            for (std::size_t i = 0; i < gens.size(); ++i) prod *= table[i][rng.below(p)];
            prod = prod.pow(p);
            label += "^p";
        } else {
            for (std::size_t i = 0; i < gens.size(); ++i) prod *= table[i][rng.below(p)];
        }
        RootCertificate cert = kummer_local_certificate(prod, label);
        if (!cert.report.is_primar) continue;
        ++rep.primar_products;
        if (!digit_coordinates(prod).is_zero())
            throw IntersectionNonTrivial("sampled primar product has a nonzero class: " + label);
        if (cert.granted) ++rep.certified;
        if (rep.certificates.size() < max_kept_certificates)
            rep.certificates.push_back(std::move(cert));
    }
    return rep;
}

} // namespace kummerlab
