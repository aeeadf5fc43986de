#pragma once

#include <json.hpp>

#include "metab/constants.hpp"
#include "metab/word_problem.hpp"

namespace metab {

using json = nlohmann::ordered_json;

std::vector<std::string> basis_names(const Presentation& p);

json groebner_json(const LaurentEmbedding& e, const std::vector<std::string>& basis);
json division_json(const DivisionCertificate& d, const RingSpec& ring, const std::vector<std::string>& basis);
json membership_json(const LaurentEmbedding::Certificate& c, const RingSpec& ring,
                     const std::vector<std::string>& basis);
json ledger_json(const CostLedger& l);
json certificate_json(const AreaCertificate& c, const Presentation& p, bool relative);
json geometry_json(const GeometryReport& g, const TamenessVerdict& t);

}  // namespace metab
