#ifndef FYM_REPORTS_HPP
#define FYM_REPORTS_HPP

#include <json.hpp>

#include "fym/criteria.hpp"
#include "fym/gauge.hpp"
#include "fym/identities.hpp"

namespace fym {

/// Deterministic JSON views of the result types: field order is fixed and
/// numbers are serialized by the round-trip shortest representation, so the
/// same inputs always produce byte-identical text.
nlohmann::ordered_json to_report(const CriterionReport& rep);
nlohmann::ordered_json to_report(const std::vector<IdentityResult>& results);
nlohmann::ordered_json to_report(const IndexSumReport& rep, double tol);
nlohmann::ordered_json to_report(const FlowResult& res);

}  // namespace fym

#endif
