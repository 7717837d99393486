#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kummerlab/class_space.hpp"
#include "kummerlab/classifier.hpp"
#include "kummerlab/cyclotomic.hpp"

namespace kummerlab {

/// Unit of Z[zeta] kept as an integer polynomial in zeta, with a label
/// recording where it came from.
struct GlobalUnit {
    u64 p = 0;
    std::vector<i64> coeffs; // degree <= p-2
    std::string label;

    CycloElem local_image(const RingContextPtr& ctx) const;
};

// c_a = (1 - zeta^a)/(1 - zeta) = 1 + zeta + ... + zeta^(a-1); 2 <= a <= p-1.
GlobalUnit cyclotomic_unit(u64 p, u64 a);
GlobalUnit minus_zeta(u64 p);

// {-zeta, c_2, ..., c_{(p-1)/2}}
std::vector<GlobalUnit> global_unit_generators(u64 p);

struct ExponentVector {
    std::vector<i64> exponents; // over the generator list
};

struct SplitReal {
    CycloElem xi; // p-th root of 1
    CycloElem w;  // fixed by sigma_{-1}
};

// u = xi * w via xi = (u / sigma_{-1}(u))^((p+1)/2). Exact at precision for
// images of global units (and for any sigma_{-1}-fixed element).
SplitReal split_real(const CycloElem& u);

// Span of the digit coordinates of the generators' local images.
Subspace global_image(const RingContextPtr& ctx);

struct RootCertificate {
    std::string label;
    ClassificationReport report;
    bool granted = false;
    std::optional<CycloElem> root; // root^p == element at precision
    long verified_pi_precision = 0;
    std::string refusal; // which condition failed, when not granted
};

// Grants a p-th-root certificate when the image classifies as primar;
// intended for images of global units, where the root must exist.
// Throws CertificateImpossible if a primar input has no root.
RootCertificate kummer_local_certificate(const CycloElem& image, const std::string& label);

struct GlobalIntersectionReport {
    int dim_global = 0;          // dim of the global-unit image
    int dim_meet_primar = 0;     // dim of the meet with the primar classes
    int dim_meet_level_pm1 = 0;  // dim of the meet with the level-(p-1) piece
    u64 samples = 0;
    u64 primar_products = 0;
    u64 certified = 0;
    std::vector<RootCertificate> certificates; // bounded sample of the grants
};

// Echelon intersections of the global-unit image with the primar classes and
// with the level-(p-1) filtration piece, plus seeded sampling of generator
// products: every product that classifies as primar must carry a verified
// p-th-root certificate. Throws IntersectionNonTrivial when an intersection
// has positive dimension or a sampled primar product has a nonzero class.
GlobalIntersectionReport check_prop3_prop6(const RingContextPtr& ctx, u64 samples, u64 seed,
                                           std::size_t max_kept_certificates = 4);

} // namespace kummerlab
