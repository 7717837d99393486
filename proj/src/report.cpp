#include "kummerlab/report.hpp"

namespace kummerlab {

Json element_json(const CycloElem& x) {
    Json coeffs = Json::array();
    for (u64 c : x.coeffs()) coeffs.push_back(std::to_string(c));
    return coeffs;
}

Json classification_json(const ClassificationReport& r) {
    Json j;
    j["is_pth_power"] = r.is_pth_power;
    j["is_p_primary"] = r.is_p_primary;
    j["is_primaire"] = r.is_primaire;
    j["is_primar"] = r.is_primar;
    j["level"] = r.level;
    j["teichmuller_residue"] = std::to_string(r.teichmuller_residue);
    if (r.primaire_witness)
        j["primaire_witness"] = std::to_string(*r.primaire_witness);
    if (r.primar_witnesses) {
        j["primar_witnesses"] = {
            {"t", std::to_string(r.primar_witnesses->first)},
            {"b", std::to_string(r.primar_witnesses->second)},
        };
    }
    j["precision_used"] = r.precision_used;
    return j;
}

Json certificate_json(const RootCertificate& c) {
    Json j;
    j["label"] = c.label;
    j["granted"] = c.granted;
    if (c.granted) {
        j["root_coeffs"] = element_json(*c.root);
        j["verified_pi_precision"] = c.verified_pi_precision;
    } else {
        j["refusal"] = c.refusal;
        j["classification"] = classification_json(c.report);
    }
    return j;
}

Json report_document(const RingContextPtr& ctx, const std::string& input, const CycloElem& elem,
                     const ClassificationReport& rep, const std::vector<std::string>& assumptions,
                     const std::string& status) {
    Json j;
    j["version"] = kReportVersion;
    j["p"] = ctx->p();
    j["precision"] = {{"k", ctx->k()}, {"N", ctx->pi_precision()}};
    j["input"] = input;
    j["coefficients"] = element_json(elem);
    j["classification"] = classification_json(rep);
    j["assumptions"] = assumptions;
    j["status"] = status;
    return j;
}

} // namespace kummerlab
