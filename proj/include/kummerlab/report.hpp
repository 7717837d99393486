#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "kummerlab/classifier.hpp"
#include "kummerlab/global_units.hpp"

namespace kummerlab {

// All documents use insertion-ordered JSON so identical inputs render to
// identical bytes. Ring coefficients and witnesses are decimal strings; no
// floating point appears anywhere.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "1";

Json element_json(const CycloElem& x);
Json classification_json(const ClassificationReport& r);
Json certificate_json(const RootCertificate& c);

Json report_document(const RingContextPtr& ctx, const std::string& input, const CycloElem& elem,
                     const ClassificationReport& rep, const std::vector<std::string>& assumptions,
                     const std::string& status);

} // namespace kummerlab
